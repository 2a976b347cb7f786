#pragma once

#include <hforest/core.hpp>
#include <hforest/forest.hpp>
#include <hforest/tightness.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hforest {

struct ReportOptions {
    bool forest = true;
    bool phi = true;
    bool delta = true;
    bool saturated = true;
    bool hc = true;
    bool tight = true;
    bool k_tree = true;
    bool lovasz = true;
};

struct PhiCount {
    VertexMask edge = 0;
    std::size_t classes = 0;
};

struct DeltaEntry {
    VertexMask edge = 0;
    /// Empty when Φ(edge) is empty and Δ is undefined.
    std::optional<std::vector<VertexMask>> forced;
};

struct SaturationSection {
    /// False when the input is not a k-forest; `result` is then empty.
    bool applicable = false;
    SaturationResult result;
};

struct LovaszSection {
    std::size_t edges = 0;
    std::uint64_t bound = 0;
    bool ok = false;
};

/// Every check run on one hypergraph. Sections that were not requested stay
/// empty and are omitted from JSON.
struct VerificationReport {
    Hypergraph input;
    std::optional<ForestResult> forest;
    std::optional<std::vector<PhiCount>> phi_counts;
    std::optional<std::vector<DeltaEntry>> delta_sets;
    std::optional<SaturationSection> saturation;
    std::optional<HcResult> hc;
    std::optional<TightResult> tight;
    std::optional<bool> k_tree;
    std::optional<LovaszSection> lovasz;
};

VerificationReport build_report(const Hypergraph& h, const ReportOptions& options = {});

/// Stable JSON: sorted keys, 1-based vertex labels, edges as ascending lists.
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json edge_json(VertexMask e);
nlohmann::json edges_json(std::span<const VertexMask> edges);
nlohmann::json hypergraph_json(const Hypergraph& h);

/// Tables laid out like the hand proof: γ table, Δ table, triple coverage.
std::string render_text(const VerificationReport& report);

} // namespace hforest

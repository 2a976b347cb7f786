#pragma once

#include <hforest/core.hpp>
#include <hforest/report.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hforest {

/// The saturated, non-tight 3-forest on six vertices, built in as "paper-h".
Hypergraph counterexample_h();

/// Built-in instance by name; nullopt if unknown.
std::optional<Hypergraph> builtin_instance(std::string_view name);

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Drop this edge from the built-in instance before checking.
    std::optional<VertexMask> remove_edge;
    /// Use this coloring in place of the rainbow-free 3-coloring (3,2,2,2,2,1).
    std::optional<std::vector<int>> witness;
};

struct VerifyOutcome {
    std::vector<Assertion> assertions;
    VerificationReport report;

    bool ok() const;
    /// Name of the first failed assertion, if any.
    std::optional<std::string> first_failure() const;
};

/// Re-derives every claim about the built-in instance from scratch and
/// compares it against the frozen hand-proof tables.
VerifyOutcome verify_counterexample(const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyOutcome& outcome);
std::string render_text(const VerifyOutcome& outcome);

} // namespace hforest

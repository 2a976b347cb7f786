#pragma once

#include <hforest/core.hpp>

#include <optional>
#include <span>

namespace hforest {

enum class HcStatus {
    defined,
    /// Edgeless: every coloring is rainbow-free, so no t forces a rainbow edge.
    no_rainbow_possible,
};

struct HcResult {
    HcStatus status = HcStatus::defined;
    int hc = 0;
    /// Rainbow-free (hc-1)-coloring; for edgeless inputs, the n-coloring.
    std::optional<ColoringClass> witness;
};

/// First class (enumeration order) of surjective t-colorings with no rainbow
/// edge. Throws std::invalid_argument unless 1 <= t <= n.
std::optional<ColoringClass> rainbow_free_witness(const Hypergraph& h, int t);

/// Searches t = n, n-1, ... for the first rainbow-free t-coloring.
HcResult heterochromatic_number(const Hypergraph& h);

struct TightResult {
    bool tight = false;
    bool edgeless = false;
    /// A rainbow-free k-coloring refuting tightness, when one exists.
    std::optional<ColoringClass> witness;
};

TightResult check_tight(const Hypergraph& h);
bool is_tight(const Hypergraph& h);

/// Tight k-forest.
bool is_k_tree(const Hypergraph& h);

/// Connectivity of a graph on vertices 1..n given as 2-element masks.
/// Isolated vertices count as their own components.
bool is_connected(int n, std::span<const VertexMask> edges);
/// Throws std::invalid_argument unless h.k() == 2.
bool is_connected(const Hypergraph& h);

} // namespace hforest

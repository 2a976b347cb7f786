#pragma once

#include <hforest/core.hpp>

#include <optional>
#include <vector>

namespace hforest {

/// Classes of k-colorings under which `edge` is the only rainbow edge.
struct PhiSet {
    VertexMask edge = 0;
    std::vector<ColoringClass> classes;
};

/// Non-edges that are rainbow under every coloring of a non-empty Φ(edge).
struct DeltaSet {
    VertexMask edge = 0;
    std::vector<VertexMask> forced;
};

struct ForestWitness {
    VertexMask edge = 0;
    ColoringClass coloring;
};

struct ForestResult {
    bool is_forest = false;
    /// One witness per edge, in edge order; complete only when is_forest.
    std::vector<ForestWitness> witnesses;
    /// First edge (edge order) with no witness.
    std::optional<VertexMask> failing_edge;
};

struct NonEdgeCertificate {
    VertexMask non_edge = 0;
    /// First edge e (edge order) with non_edge ∈ Δ(e), if any.
    std::optional<VertexMask> delta_cover;
    /// Direct check: adding non_edge destroys the forest property.
    bool breaks_forest = false;
};

struct SaturationResult {
    bool saturated = false;
    /// One entry per non-edge, lexicographic order.
    std::vector<NonEdgeCertificate> certificates;
};

/// Throws std::invalid_argument if e is not an edge of h.
PhiSet phi(const Hypergraph& h, VertexMask e);

/// Cheapest decision: stops at the first witness for each edge.
bool has_forest_witness(const Hypergraph& h, VertexMask e);

ForestResult check_forest(const Hypergraph& h);
bool is_k_forest(const Hypergraph& h);

/// Throws std::invalid_argument if e is not an edge or Φ(e) is empty.
DeltaSet delta(const Hypergraph& h, VertexMask e);
DeltaSet delta(const Hypergraph& h, const PhiSet& phi_set);

/// Decides saturation by re-checking h + f for every non-edge f, attaching
/// Δ-cover certificates where they exist. Throws std::invalid_argument when h
/// is not a k-forest.
SaturationResult check_saturated(const Hypergraph& h);
bool is_saturated(const Hypergraph& h);

bool lovasz_bound_ok(const Hypergraph& h);
std::uint64_t lovasz_bound(const Hypergraph& h);

} // namespace hforest

#pragma once

#include <hforest/core.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hforest::cnf {

using Literal = int;
using Clause = std::vector<Literal>;

/// Variable x(vertex, color) as recorded for model decoding.
struct VarMapEntry {
    int vertex = 0;
    int color = 0;
    int var = 0;

    bool operator==(const VarMapEntry&) const = default;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<VarMapEntry> var_map;

    bool operator==(const CnfFormula&) const = default;
};

/// x(v, c) for v in 1..n, c in 1..colors.
inline int color_var(int vertex, int color, int colors)
{
    return (vertex - 1) * colors + color;
}

/// Satisfiable iff some k-coloring makes e the only rainbow edge. The i-th
/// vertex of e is pinned to color i; every other edge gets one clause per
/// injective color assignment. Throws std::invalid_argument if e is not an edge.
CnfFormula encode_phi_query(const Hypergraph& h, VertexMask e);

/// Satisfiable iff a surjective t-coloring without rainbow edges exists.
/// Throws std::invalid_argument unless 1 <= t <= n.
CnfFormula encode_rainbow_free_query(const Hypergraph& h, int t);

enum class SolveStatus {
    sat,
    unsat,
    budget_exceeded,
};

struct SolveResult {
    SolveStatus status = SolveStatus::unsat;
    /// On sat: model[v] for v in 1..num_vars (index 0 unused).
    std::vector<bool> model;
};

struct SolveLimits {
    /// 0 means unlimited.
    std::uint64_t max_decisions = 0;
};

/// DPLL with unit propagation; branches on the lowest unassigned variable,
/// true first.
SolveResult solve(const CnfFormula& f, const SolveLimits& limits = {});

/// True iff every clause has a literal made true by `model`.
bool satisfies(const CnfFormula& f, const std::vector<bool>& model);

/// Decodes a model through var_map. Throws std::invalid_argument unless each
/// mapped vertex has exactly one true color variable and the colors are
/// surjective onto the used palette.
Coloring decode_coloring(const CnfFormula& f, const std::vector<bool>& model);

std::string emit_dimacs(const CnfFormula& f);

struct DimacsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws DimacsError on malformed input.
CnfFormula parse_dimacs(std::string_view text);

/// Reads solver output ("s ..." and "v ..." lines) into a model over
/// num_vars variables; unmentioned variables are false.
std::vector<bool> parse_model(std::string_view text, int num_vars);

std::string_view to_string(SolveStatus s);

} // namespace hforest::cnf

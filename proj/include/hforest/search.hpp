#pragma once

#include <hforest/core.hpp>
#include <hforest/report.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hforest {

/// Edge set over the lexicographically ordered k-subsets of {1..n}: bit i is
/// set iff the i-th k-subset is an edge.
using EdgeSet = std::uint64_t;

/// Largest C(n,k) the exhaustive search accepts.
inline constexpr int max_edge_slots = 24;
inline constexpr int max_search_vertices = 7;

/// Throws std::invalid_argument unless 2 <= k <= n <= 7 and C(n,k) <= 24.
void check_search_limits(int n, int k);

class EdgeIndex {
public:
    EdgeIndex(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int slots() const { return static_cast<int>(subsets_.size()); }
    const std::vector<VertexMask>& subsets() const { return subsets_; }
    int index_of(VertexMask e) const;

    EdgeSet edge_set(const Hypergraph& h) const;
    Hypergraph hypergraph(EdgeSet s) const;

private:
    int n_;
    int k_;
    std::vector<VertexMask> subsets_;
    std::vector<int> index_;
};

/// Minimum edge set over all n! vertex permutations, via per-permutation
/// byte lookup tables.
class Canonicalizer {
public:
    /// Throws std::invalid_argument outside the search limits.
    Canonicalizer(int n, int k);

    const EdgeIndex& index() const { return index_; }
    EdgeSet canonical(EdgeSet s) const;
    bool is_canonical(EdgeSet s) const;

private:
    EdgeSet image(std::size_t perm, EdgeSet s) const;

    EdgeIndex index_;
    int chunks_;
    std::size_t perm_count_;
    std::vector<std::uint32_t> tables_;
};

/// Canonical edge set of h. Needs n <= 8 and C(n,k) <= 64.
EdgeSet canonical_form(const Hypergraph& h);
bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// All 2^C(n,k) edge sets in ascending order, or one minimal representative
/// per isomorphism class. fn returns false to stop.
void for_each_hypergraph(int n, int k, bool modulo_iso, const std::function<bool(const Hypergraph&)>& fn);
std::vector<Hypergraph> enumerate_hypergraphs(int n, int k, bool modulo_iso);

enum class SearchMode {
    saturated_not_tight,
    all_saturated_forests,
    all_forests,
};

std::string_view to_string(SearchMode mode);
/// Throws std::invalid_argument on an unknown name.
SearchMode parse_search_mode(std::string_view name);

struct Shard {
    std::uint64_t index = 0;
    std::uint64_t count = 1;
};

struct SearchTask {
    int n = 0;
    int k = 0;
    SearchMode mode = SearchMode::saturated_not_tight;
    bool modulo_iso = false;
    std::optional<Shard> shard;
};

struct SearchHit {
    Hypergraph hypergraph;
    EdgeSet edge_set = 0;
    EdgeSet canonical = 0;
    VerificationReport report;
};

/// Predicate of `mode` evaluated cheapest-rejector first: edge bound, forest
/// (first witness per edge), tightness, saturation.
bool matches_mode(const Hypergraph& h, SearchMode mode);
/// The same predicate straight from the definitions, with no filters.
bool matches_mode_naive(const Hypergraph& h, SearchMode mode);

/// Half-open slice [begin, end) of the edge-set space owned by a shard;
/// for power-of-two counts this is a fixed prefix of high bits.
std::pair<EdgeSet, EdgeSet> shard_range(int slots, const Shard& shard);

/// Hits ordered by (canonical form, edge set). `jobs` > 1 splits the task's
/// range across threads; the result does not depend on it.
std::vector<SearchHit> run_search(const SearchTask& task, unsigned jobs = 1);

} // namespace hforest

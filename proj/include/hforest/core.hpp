#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hforest {

/// Vertex set as a bitmask: vertex v (1-based) lives in bit v-1.
using VertexMask = std::uint64_t;

inline constexpr int max_vertices = 62;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }

inline VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }

/// Lexicographic order of the ascending vertex tuples of two equal-size sets.
/// The set owning the lowest differing vertex comes first.
inline bool lex_less(VertexMask a, VertexMask b)
{
    if (a == b)
        return false;
    VertexMask d = a ^ b;
    return (a & (d & (~d + 1))) != 0;
}

std::vector<int> vertices_of(VertexMask m);
VertexMask mask_of(std::span<const int> vertices);

/// "{1,2,3}"
std::string format_set(VertexMask m);

std::uint64_t binomial(int n, int r);

/// All r-subsets of {1..n}, lexicographic order.
std::vector<VertexMask> all_subsets(int n, int r);

/// A k-uniform hypergraph on vertices 1..n. Edges are kept in lexicographic
/// order of their vertex tuples, which is the order every report prints.
class Hypergraph {
public:
    Hypergraph(int n, int k, std::vector<VertexMask> edges = {});

    static Hypergraph from_edge_lists(int n, int k, const std::vector<std::vector<int>>& edges);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<VertexMask>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(VertexMask e) const;

    Hypergraph with_edge(VertexMask e) const;
    Hypergraph without_edge(VertexMask e) const;

    /// Relabels vertex v as perm[v-1] (perm is a permutation of 1..n).
    Hypergraph permuted(std::span<const int> perm) const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_;
    int k_;
    std::vector<VertexMask> edges_;
};

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize(const Hypergraph& h);

/// All k-subsets of {1..n} that are not edges, lexicographic order.
std::vector<VertexMask> non_edges(const Hypergraph& h);

/// A surjective assignment of colors 1..t to vertices 1..n.
class Coloring {
public:
    /// Throws std::invalid_argument unless the colors cover exactly 1..max.
    explicit Coloring(std::vector<int> colors);
    /// Throws std::invalid_argument unless the colors cover exactly 1..t.
    Coloring(std::vector<int> colors, int t);

    int n() const { return static_cast<int>(colors_.size()); }
    int t() const { return t_; }
    int operator[](int vertex) const { return colors_[vertex - 1]; }
    const std::vector<int>& colors() const { return colors_; }

    bool operator==(const Coloring&) const = default;

private:
    std::vector<int> colors_;
    int t_;
};

/// True iff `colors` (values 1..t) uses every color of 1..t.
bool is_surjective(std::span<const int> colors, int t);

/// A coloring up to renaming of colors, stored in restricted-growth form:
/// vertex 1 has color 1 and each vertex's color is at most one more than the
/// largest color seen before it.
class ColoringClass {
public:
    explicit ColoringClass(const Coloring& c);

    const Coloring& canonical() const { return canonical_; }
    int t() const { return canonical_.t(); }

    bool operator==(const ColoringClass&) const = default;
    auto operator<=>(const ColoringClass& o) const { return canonical_.colors() <=> o.canonical_.colors(); }

private:
    Coloring canonical_;
};

/// Color set of an edge as a bitmask over colors.
inline std::uint64_t edge_colors(VertexMask e, std::span<const int> colors)
{
    std::uint64_t set = 0;
    while (e) {
        int v = __builtin_ctzll(e);
        set |= std::uint64_t{1} << colors[v];
        e &= e - 1;
    }
    return set;
}

inline bool is_rainbow(VertexMask e, std::span<const int> colors, int k)
{
    return popcount(edge_colors(e, colors)) == k;
}

std::vector<VertexMask> rainbow_edges(const Hypergraph& h, const Coloring& c);

/// Streams the classes of surjective t-colorings of n vertices in
/// lexicographic order of their restricted-growth strings.
class ColoringClassGenerator {
public:
    ColoringClassGenerator(int n, int t);

    std::optional<ColoringClass> next();

private:
    bool advance();

    int n_;
    int t_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> rgs_;
};

/// Calls fn on every class; fn returns false to stop early.
void for_each_coloring_class(int n, int t, const std::function<bool(const ColoringClass&)>& fn);

std::vector<ColoringClass> enumerate_colorings(int n, int t);

} // namespace hforest

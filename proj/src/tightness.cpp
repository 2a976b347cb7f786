#include <hforest/tightness.hpp>

#include <hforest/forest.hpp>

#include "coloring_search.hpp"

#include <numeric>

namespace hforest {

std::optional<ColoringClass> rainbow_free_witness(const Hypergraph& h, int t)
{
    if (t < 1 || t > h.n())
        throw std::invalid_argument("color count " + std::to_string(t) + " outside 1.." + std::to_string(h.n()));
    auto found = detail::ColoringSearch(h.n(), h.k(), t, h.edges()).first();
    if (!found)
        return std::nullopt;
    return ColoringClass(Coloring(*found, t));
}

HcResult heterochromatic_number(const Hypergraph& h)
{
    HcResult out;
    if (h.empty()) {
        out.status = HcStatus::no_rainbow_possible;
        out.witness = rainbow_free_witness(h, h.n());
        return out;
    }
    for (int t = h.n(); t >= 1; --t) {
        if (auto w = rainbow_free_witness(h, t)) {
            out.hc = t + 1;
            out.witness = std::move(w);
            return out;
        }
    }
    // unreachable for k >= 2: the single-color coloring has no rainbow edge
    throw std::logic_error("no rainbow-free coloring found");
}

TightResult check_tight(const Hypergraph& h)
{
    TightResult out;
    if (h.empty()) {
        out.edgeless = true;
        return out;
    }
    out.witness = rainbow_free_witness(h, h.k());
    out.tight = !out.witness.has_value();
    return out;
}

bool is_tight(const Hypergraph& h)
{
    return check_tight(h).tight;
}

bool is_k_tree(const Hypergraph& h)
{
    return is_k_forest(h) && is_tight(h);
}

bool is_connected(int n, std::span<const VertexMask> edges)
{
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = n;
    for (VertexMask e : edges) {
        if (popcount(e) != 2)
            throw std::invalid_argument("edge " + format_set(e) + " is not a pair");
        int a = find(__builtin_ctzll(e));
        int b = find(63 - __builtin_clzll(e));
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components <= 1;
}

bool is_connected(const Hypergraph& h)
{
    if (h.k() != 2)
        throw std::invalid_argument("connectivity is defined for 2-graphs only");
    return is_connected(h.n(), h.edges());
}

} // namespace hforest

#include <hforest/forest.hpp>

#include "coloring_search.hpp"

#include <algorithm>

namespace hforest {

namespace {

void require_edge(const Hypergraph& h, VertexMask e)
{
    if (!h.contains(e))
        throw std::invalid_argument(format_set(e) + " is not an edge");
}

std::vector<VertexMask> other_edges(const Hypergraph& h, VertexMask e)
{
    std::vector<VertexMask> out;
    out.reserve(h.edge_count());
    for (VertexMask f : h.edges())
        if (f != e)
            out.push_back(f);
    return out;
}

} // namespace

PhiSet phi(const Hypergraph& h, VertexMask e)
{
    require_edge(h, e);
    PhiSet out{e, {}};
    auto others = other_edges(h, e);
    detail::ColoringSearch search(h.n(), h.k(), h.k(), others, e);
    search.run([&](const std::vector<int>& colors) {
        out.classes.emplace_back(Coloring(colors, h.k()));
        return true;
    });
    return out;
}

bool has_forest_witness(const Hypergraph& h, VertexMask e)
{
    auto others = other_edges(h, e);
    return detail::ColoringSearch(h.n(), h.k(), h.k(), others, e).first().has_value();
}

ForestResult check_forest(const Hypergraph& h)
{
    ForestResult out;
    for (VertexMask e : h.edges()) {
        auto others = other_edges(h, e);
        auto found = detail::ColoringSearch(h.n(), h.k(), h.k(), others, e).first();
        if (!found) {
            out.failing_edge = e;
            return out;
        }
        out.witnesses.push_back({e, ColoringClass(Coloring(*found, h.k()))});
    }
    out.is_forest = true;
    return out;
}

bool is_k_forest(const Hypergraph& h)
{
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](VertexMask e) { return has_forest_witness(h, e); });
}

DeltaSet delta(const Hypergraph& h, const PhiSet& phi_set)
{
    if (phi_set.classes.empty())
        throw std::invalid_argument(format_set(phi_set.edge) + " is not a forest edge: no coloring makes it the "
                                                               "only rainbow edge");
    DeltaSet out{phi_set.edge, {}};
    for (VertexMask f : non_edges(h)) {
        bool always = std::all_of(phi_set.classes.begin(), phi_set.classes.end(), [&](const ColoringClass& c) {
            return is_rainbow(f, c.canonical().colors(), h.k());
        });
        if (always)
            out.forced.push_back(f);
    }
    return out;
}

DeltaSet delta(const Hypergraph& h, VertexMask e)
{
    return delta(h, phi(h, e));
}

SaturationResult check_saturated(const Hypergraph& h)
{
    if (!is_k_forest(h))
        throw std::invalid_argument("saturation is only defined for k-forests");
    std::vector<DeltaSet> deltas;
    deltas.reserve(h.edge_count());
    for (VertexMask e : h.edges())
        deltas.push_back(delta(h, e));

    SaturationResult out;
    out.saturated = true;
    for (VertexMask f : non_edges(h)) {
        NonEdgeCertificate cert{f, std::nullopt, !is_k_forest(h.with_edge(f))};
        for (const auto& d : deltas) {
            if (std::find(d.forced.begin(), d.forced.end(), f) != d.forced.end()) {
                cert.delta_cover = d.edge;
                break;
            }
        }
        out.saturated = out.saturated && cert.breaks_forest;
        out.certificates.push_back(cert);
    }
    return out;
}

bool is_saturated(const Hypergraph& h)
{
    if (!is_k_forest(h))
        throw std::invalid_argument("saturation is only defined for k-forests");
    for (VertexMask f : non_edges(h))
        if (is_k_forest(h.with_edge(f)))
            return false;
    return true;
}

std::uint64_t lovasz_bound(const Hypergraph& h)
{
    return binomial(h.n() - 1, h.k() - 1);
}

bool lovasz_bound_ok(const Hypergraph& h)
{
    return h.edge_count() <= lovasz_bound(h);
}

} // namespace hforest

#include <hforest/report.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hforest {

VerificationReport build_report(const Hypergraph& h, const ReportOptions& options)
{
    VerificationReport r{h, {}, {}, {}, {}, {}, {}, {}, {}};

    const bool need_forest = options.forest || options.saturated || options.k_tree;
    std::optional<ForestResult> forest;
    if (need_forest)
        forest = check_forest(h);
    if (options.forest)
        r.forest = forest;

    if (options.phi || options.delta) {
        std::vector<PhiCount> counts;
        std::vector<DeltaEntry> deltas;
        for (VertexMask e : h.edges()) {
            PhiSet p = phi(h, e);
            counts.push_back({e, p.classes.size()});
            DeltaEntry d{e, std::nullopt};
            if (!p.classes.empty())
                d.forced = delta(h, p).forced;
            deltas.push_back(std::move(d));
        }
        if (options.phi)
            r.phi_counts = std::move(counts);
        if (options.delta)
            r.delta_sets = std::move(deltas);
    }

    if (options.saturated) {
        SaturationSection s;
        s.applicable = forest->is_forest;
        if (s.applicable)
            s.result = check_saturated(h);
        r.saturation = std::move(s);
    }

    std::optional<TightResult> tight;
    if (options.tight || options.k_tree)
        tight = check_tight(h);
    if (options.tight)
        r.tight = tight;
    if (options.k_tree)
        r.k_tree = forest->is_forest && tight->tight;
    if (options.hc)
        r.hc = heterochromatic_number(h);
    if (options.lovasz)
        r.lovasz = LovaszSection{h.edge_count(), lovasz_bound(h), lovasz_bound_ok(h)};
    return r;
}

nlohmann::json edge_json(VertexMask e)
{
    return vertices_of(e);
}

nlohmann::json edges_json(std::span<const VertexMask> edges)
{
    auto out = nlohmann::json::array();
    for (VertexMask e : edges)
        out.push_back(edge_json(e));
    return out;
}

nlohmann::json hypergraph_json(const Hypergraph& h)
{
    return {{"n", h.n()}, {"k", h.k()}, {"edges", edges_json(h.edges())}};
}

namespace {

nlohmann::json coloring_json(const std::optional<ColoringClass>& c)
{
    if (!c)
        return nullptr;
    return c->canonical().colors();
}

} // namespace

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["input"] = hypergraph_json(r.input);
    if (r.forest) {
        auto witnesses = nlohmann::json::array();
        for (const auto& w : r.forest->witnesses)
            witnesses.push_back({{"edge", edge_json(w.edge)}, {"coloring", w.coloring.canonical().colors()}});
        j["k_forest"] = {{"value", r.forest->is_forest},
                         {"witnesses", witnesses},
                         {"failing_edge", r.forest->failing_edge ? edge_json(*r.forest->failing_edge) : nullptr}};
    }
    if (r.phi_counts) {
        auto a = nlohmann::json::array();
        for (const auto& p : *r.phi_counts)
            a.push_back({{"edge", edge_json(p.edge)}, {"classes", p.classes}});
        j["phi_class_counts"] = a;
    }
    if (r.delta_sets) {
        auto a = nlohmann::json::array();
        for (const auto& d : *r.delta_sets)
            a.push_back({{"edge", edge_json(d.edge)}, {"forced", d.forced ? edges_json(*d.forced) : nullptr}});
        j["delta_sets"] = a;
    }
    if (r.saturation) {
        auto certs = nlohmann::json::array();
        for (const auto& c : r.saturation->result.certificates)
            certs.push_back({{"non_edge", edge_json(c.non_edge)},
                             {"delta_cover", c.delta_cover ? edge_json(*c.delta_cover) : nullptr},
                             {"breaks_forest", c.breaks_forest}});
        j["saturated"] = {{"value", r.saturation->applicable && r.saturation->result.saturated},
                          {"status", r.saturation->applicable ? "checked" : "not a k-forest"},
                          {"certificates", certs}};
    }
    if (r.hc) {
        const bool defined = r.hc->status == HcStatus::defined;
        j["hc"] = {{"status", defined ? "defined" : "no rainbow edge possible"},
                   {"value", defined ? nlohmann::json(r.hc->hc) : nlohmann::json(nullptr)},
                   {"witness", coloring_json(r.hc->witness)}};
    }
    if (r.tight)
        j["tight"] = {{"value", r.tight->tight},
                      {"status", r.tight->edgeless ? "edgeless" : "checked"},
                      {"witness", coloring_json(r.tight->witness)}};
    if (r.k_tree)
        j["k_tree"] = *r.k_tree;
    if (r.lovasz)
        j["lovasz"] = {{"edges", r.lovasz->edges}, {"bound", r.lovasz->bound}, {"ok", r.lovasz->ok}};
    return j;
}

namespace {

std::string format_sets(std::span<const VertexMask> sets)
{
    std::string s = "{";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i)
            s += ',';
        s += format_set(sets[i]);
    }
    return s + "}";
}

std::string format_colors(const std::vector<int>& colors)
{
    std::string s;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(colors[i]);
    }
    return s;
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

} // namespace

std::string render_text(const VerificationReport& r)
{
    const Hypergraph& h = r.input;
    std::ostringstream out;
    out << "hypergraph: n=" << h.n() << " k=" << h.k() << " edges=" << h.edge_count() << '\n';
    out << "  E = " << format_sets(h.edges()) << '\n';

    const int width = 3 * h.k() + 2;
    if (r.forest) {
        out << "\nk-forest: " << yes_no(r.forest->is_forest) << '\n';
        if (r.forest->failing_edge)
            out << "  no coloring makes " << format_set(*r.forest->failing_edge) << " the only rainbow edge\n";
        if (!r.forest->witnesses.empty()) {
            out << "  " << std::left << std::setw(width) << "e";
            for (int v = 1; v <= h.n(); ++v)
                out << " c(" << v << ")";
            out << '\n';
            for (const auto& w : r.forest->witnesses) {
                out << "  " << std::left << std::setw(width) << format_set(w.edge);
                for (int c : w.coloring.canonical().colors())
                    out << "    " << c;
                out << '\n';
            }
        }
    }
    if (r.phi_counts) {
        out << "\nPhi class counts (colorings up to relabelling):\n";
        for (const auto& p : *r.phi_counts)
            out << "  Phi(" << format_set(p.edge) << "): " << p.classes << '\n';
    }
    if (r.delta_sets) {
        out << "\nDelta sets:\n";
        for (const auto& d : *r.delta_sets) {
            out << "  Delta(" << format_set(d.edge) << ") = ";
            if (d.forced)
                out << format_sets(*d.forced) << '\n';
            else
                out << "undefined (Phi empty)\n";
        }
    }
    if (r.saturation) {
        out << "\nsaturated: ";
        if (!r.saturation->applicable) {
            out << "n/a (not a k-forest)\n";
        } else {
            out << yes_no(r.saturation->result.saturated) << '\n';
            out << "  " << std::left << std::setw(width) << "triple" << "contained in\n";
            const auto& certs = r.saturation->result.certificates;
            for (VertexMask s : all_subsets(h.n(), h.k())) {
                out << "  " << std::left << std::setw(width) << format_set(s);
                if (h.contains(s)) {
                    out << "E\n";
                    continue;
                }
                auto it = std::find_if(certs.begin(), certs.end(),
                                       [&](const NonEdgeCertificate& c) { return c.non_edge == s; });
                if (it->delta_cover)
                    out << "Delta(" << format_set(*it->delta_cover) << ")\n";
                else if (it->breaks_forest)
                    out << "direct check only\n";
                else
                    out << "can be added\n";
            }
        }
    }
    if (r.hc) {
        out << "\nheterochromatic number: ";
        if (r.hc->status == HcStatus::defined)
            out << r.hc->hc << '\n';
        else
            out << "undefined (no rainbow edge possible)\n";
        if (r.hc->witness)
            out << "  rainbow-free " << r.hc->witness->t() << "-coloring: "
                << format_colors(r.hc->witness->canonical().colors()) << '\n';
    }
    if (r.tight) {
        out << "\ntight: " << yes_no(r.tight->tight);
        if (r.tight->edgeless)
            out << " (edgeless)";
        out << '\n';
        if (r.tight->witness)
            out << "  rainbow-free " << h.k() << "-coloring: " << format_colors(r.tight->witness->canonical().colors())
                << '\n';
    }
    if (r.k_tree)
        out << "\nk-tree: " << yes_no(*r.k_tree) << '\n';
    if (r.lovasz)
        out << "\nedge bound: |E| = " << r.lovasz->edges << " <= C(n-1,k-1) = " << r.lovasz->bound << ": "
            << yes_no(r.lovasz->ok) << '\n';
    return out.str();
}

} // namespace hforest

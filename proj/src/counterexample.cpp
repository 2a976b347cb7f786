#include <hforest/counterexample.hpp>

#include <hforest/forest.hpp>
#include <hforest/tightness.hpp>

#include <algorithm>
#include <sstream>

namespace hforest {

namespace {

VertexMask set_of(std::initializer_list<int> vs)
{
    return mask_of(std::vector<int>(vs));
}

struct GammaRow {
    VertexMask edge;
    std::vector<int> colors;
};

// γ table of the hand proof: each row makes its edge the only rainbow edge.
const std::vector<GammaRow>& gamma_table()
{
    static const std::vector<GammaRow> rows = {
        {set_of({1, 2, 3}), {3, 2, 1, 3, 2, 1}}, {set_of({1, 2, 4}), {1, 3, 1, 2, 1, 1}},
        {set_of({1, 2, 5}), {3, 2, 2, 2, 1, 1}}, {set_of({1, 3, 4}), {3, 3, 1, 2, 1, 1}},
        {set_of({2, 3, 6}), {3, 3, 2, 2, 1, 1}}, {set_of({2, 5, 6}), {3, 3, 1, 1, 2, 1}},
        {set_of({3, 4, 6}), {3, 3, 3, 2, 1, 1}}, {set_of({3, 5, 6}), {1, 1, 3, 1, 2, 1}},
    };
    return rows;
}

struct PhiExpectation {
    VertexMask edge;
    std::size_t classes;
    std::string delta;
};

const std::vector<PhiExpectation>& phi_expectations()
{
    static const std::vector<PhiExpectation> rows = {
        {set_of({1, 2, 3}), 1, "{{1,2,6},{1,3,5},{1,5,6},{2,4,6},{3,4,5},{4,5,6}}"},
        {set_of({1, 3, 4}), 2, "{{1,4,6},{2,3,4},{2,4,6}}"},
        {set_of({2, 3, 6}), 1, "{{1,3,5},{1,3,6},{1,4,5},{1,4,6},{2,3,5},{2,4,5},{2,4,6}}"},
    };
    return rows;
}

// Triple coverage table: non-edge -> edge whose Δ contains it.
const std::vector<std::pair<VertexMask, VertexMask>>& coverage_table()
{
    static const VertexMask e123 = set_of({1, 2, 3});
    static const VertexMask e134 = set_of({1, 3, 4});
    static const VertexMask e236 = set_of({2, 3, 6});
    static const std::vector<std::pair<VertexMask, VertexMask>> rows = {
        {set_of({1, 2, 6}), e123}, {set_of({1, 3, 5}), e123}, {set_of({1, 3, 6}), e236},
        {set_of({1, 4, 5}), e236}, {set_of({1, 4, 6}), e134}, {set_of({1, 5, 6}), e123},
        {set_of({2, 3, 4}), e134}, {set_of({2, 3, 5}), e236}, {set_of({2, 4, 5}), e236},
        {set_of({2, 4, 6}), e123}, {set_of({3, 4, 5}), e123}, {set_of({4, 5, 6}), e123},
    };
    return rows;
}

const std::vector<int> rainbow_free_coloring = {3, 2, 2, 2, 2, 1};

std::string format_sets(const std::vector<VertexMask>& sets)
{
    std::string s = "{";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i)
            s += ',';
        s += format_set(sets[i]);
    }
    return s + "}";
}

Assertion check_forest_claim(const Hypergraph& h, const VerificationReport& report)
{
    Assertion a{"forest", false, ""};
    if (!report.forest->is_forest) {
        a.detail = "no coloring makes " + format_set(*report.forest->failing_edge) + " the only rainbow edge";
        return a;
    }
    for (const auto& w : report.forest->witnesses) {
        auto rainbow = rainbow_edges(h, w.coloring.canonical());
        if (rainbow != std::vector<VertexMask>{w.edge}) {
            a.detail = "computed witness for " + format_set(w.edge) + " is invalid";
            return a;
        }
    }
    for (const auto& row : gamma_table()) {
        if (!h.contains(row.edge))
            continue;
        auto rainbow = rainbow_edges(h, Coloring(row.colors, 3));
        if (rainbow != std::vector<VertexMask>{row.edge}) {
            a.detail = "tabulated row for " + format_set(row.edge) + " does not isolate its edge";
            return a;
        }
    }
    a.passed = true;
    a.detail = "every edge has a coloring making it the only rainbow edge";
    return a;
}

Assertion check_phi_claim(const Hypergraph& h)
{
    Assertion a{"phi class counts", false, ""};
    std::ostringstream counts;
    for (const auto& exp : phi_expectations()) {
        if (!h.contains(exp.edge)) {
            a.detail = format_set(exp.edge) + " is not an edge";
            return a;
        }
        const std::size_t got = phi(h, exp.edge).classes.size();
        counts << (counts.tellp() > 0 ? ", " : "") << "Phi(" << format_set(exp.edge) << ")=" << got;
        if (got != exp.classes) {
            a.detail = "Phi(" + format_set(exp.edge) + ") has " + std::to_string(got) + " classes, expected " +
                       std::to_string(exp.classes);
            return a;
        }
    }
    // the unique classes coincide with the tabulated rows
    for (VertexMask e : {set_of({1, 2, 3}), set_of({2, 3, 6})}) {
        const auto& row = *std::find_if(gamma_table().begin(), gamma_table().end(),
                                        [&](const GammaRow& r) { return r.edge == e; });
        if (phi(h, e).classes.front() != ColoringClass(Coloring(row.colors, 3))) {
            a.detail = "the unique class of Phi(" + format_set(e) + ") differs from the tabulated row";
            return a;
        }
    }
    a.passed = true;
    a.detail = counts.str();
    return a;
}

Assertion check_delta_claim(const Hypergraph& h)
{
    Assertion a{"delta sets", false, ""};
    for (const auto& exp : phi_expectations()) {
        if (!h.contains(exp.edge)) {
            a.detail = format_set(exp.edge) + " is not an edge";
            return a;
        }
        PhiSet p = phi(h, exp.edge);
        if (p.classes.empty()) {
            a.detail = "Phi(" + format_set(exp.edge) + ") is empty";
            return a;
        }
        const std::string got = format_sets(delta(h, p).forced);
        if (got != exp.delta) {
            a.detail = "Delta(" + format_set(exp.edge) + ") = " + got + ", expected " + exp.delta;
            return a;
        }
    }
    a.passed = true;
    a.detail = "all three Delta sets match";
    return a;
}

Assertion check_coverage_claim(const Hypergraph& h)
{
    Assertion a{"coverage", false, ""};
    std::vector<VertexMask> expected;
    for (const auto& [triple, _] : coverage_table())
        expected.push_back(triple);
    const auto actual = non_edges(h);
    if (actual != expected) {
        a.detail = "non-edges " + format_sets(actual) + " differ from the coverage table";
        return a;
    }
    for (const auto& [triple, edge] : coverage_table()) {
        PhiSet p = phi(h, edge);
        if (p.classes.empty()) {
            a.detail = "Phi(" + format_set(edge) + ") is empty";
            return a;
        }
        const auto forced = delta(h, p).forced;
        if (std::find(forced.begin(), forced.end(), triple) == forced.end()) {
            a.detail = format_set(triple) + " is not in Delta(" + format_set(edge) + ")";
            return a;
        }
    }
    a.passed = true;
    a.detail = std::to_string(expected.size()) + " non-edges covered as tabulated";
    return a;
}

Assertion check_saturation_claim(const VerificationReport& report)
{
    Assertion a{"saturation", false, ""};
    const auto& s = *report.saturation;
    if (!s.applicable) {
        a.detail = "not a k-forest";
        return a;
    }
    for (const auto& c : s.result.certificates) {
        if (c.delta_cover && !c.breaks_forest) {
            a.detail = "Delta certificate for " + format_set(c.non_edge) + " contradicts the direct check";
            return a;
        }
        if (!c.breaks_forest) {
            a.detail = format_set(c.non_edge) + " can be added without losing the forest property";
            return a;
        }
    }
    a.passed = true;
    a.detail = "adding any of the " + std::to_string(s.result.certificates.size()) + " non-edges breaks the forest";
    return a;
}

Assertion check_witness_claim(const Hypergraph& h, const std::vector<int>& colors)
{
    Assertion a{"rainbow-free witness", false, ""};
    if (static_cast<int>(colors.size()) != h.n()) {
        a.detail = "witness has " + std::to_string(colors.size()) + " entries for " + std::to_string(h.n()) +
                   " vertices";
        return a;
    }
    if (!is_surjective(colors, 3)) {
        a.detail = "witness not surjective for t=3";
        return a;
    }
    auto rainbow = rainbow_edges(h, Coloring(colors, 3));
    if (!rainbow.empty()) {
        a.detail = "witness makes " + format_set(rainbow.front()) + " rainbow";
        return a;
    }
    a.passed = true;
    a.detail = "no edge is rainbow under the 3-coloring";
    return a;
}

Assertion check_not_tight_claim(const VerificationReport& report)
{
    Assertion a{"not tight", false, ""};
    if (report.tight->tight) {
        a.detail = "every 3-coloring has a rainbow edge";
        return a;
    }
    a.passed = true;
    a.detail = "hc = " + std::to_string(report.hc->hc) + " > k = 3";
    return a;
}

Assertion check_bound_claim(const VerificationReport& report)
{
    Assertion a{"edge bound", false, ""};
    const auto& l = *report.lovasz;
    a.detail = std::to_string(l.edges) + " edges, bound C(5,2) = " + std::to_string(l.bound);
    a.passed = l.ok && l.edges == 8 && l.bound == 10;
    return a;
}

} // namespace

Hypergraph counterexample_h()
{
    return Hypergraph::from_edge_lists(
        6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {2, 3, 6}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}});
}

std::optional<Hypergraph> builtin_instance(std::string_view name)
{
    if (name == "paper-h")
        return counterexample_h();
    return std::nullopt;
}

bool VerifyOutcome::ok() const
{
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

std::optional<std::string> VerifyOutcome::first_failure() const
{
    for (const auto& a : assertions)
        if (!a.passed)
            return a.name;
    return std::nullopt;
}

VerifyOutcome verify_counterexample(const VerifyOptions& options)
{
    Hypergraph h = counterexample_h();
    if (options.remove_edge)
        h = h.without_edge(*options.remove_edge);
    VerificationReport report = build_report(h);

    VerifyOutcome out{{}, report};
    out.assertions.push_back(check_forest_claim(h, report));
    out.assertions.push_back(check_phi_claim(h));
    out.assertions.push_back(check_delta_claim(h));
    out.assertions.push_back(check_coverage_claim(h));
    out.assertions.push_back(check_saturation_claim(report));
    out.assertions.push_back(check_witness_claim(h, options.witness.value_or(rainbow_free_coloring)));
    out.assertions.push_back(check_not_tight_claim(report));
    out.assertions.push_back(check_bound_claim(report));
    return out;
}

nlohmann::json to_json(const VerifyOutcome& outcome)
{
    auto assertions = nlohmann::json::array();
    for (const auto& a : outcome.assertions)
        assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    auto failure = outcome.first_failure();
    return {{"instance", "paper-h"},
            {"assertions", assertions},
            {"ok", outcome.ok()},
            {"first_failure", failure ? nlohmann::json(*failure) : nlohmann::json(nullptr)},
            {"report", to_json(outcome.report)}};
}

std::string render_text(const VerifyOutcome& outcome)
{
    std::ostringstream out;
    out << render_text(outcome.report) << '\n';
    for (const auto& a : outcome.assertions)
        out << (a.passed ? "[PASS] " : "[FAIL] ") << a.name << ": " << a.detail << '\n';
    if (auto f = outcome.first_failure())
        out << "verify-paper: FAILED (" << *f << ")\n";
    else
        out << "verify-paper: OK\n";
    return out.str();
}

} // namespace hforest

#include <doctest.h>

#include <hforest/cnf.hpp>
#include <hforest/counterexample.hpp>
#include <hforest/forest.hpp>
#include <hforest/tightness.hpp>

#include "oracles.hpp"

#include <random>

using namespace hforest;
using namespace hforest::cnf;

namespace {

VertexMask set(std::initializer_list<int> vs)
{
    return mask_of(std::vector<int>(vs));
}

std::vector<bool> model_of(const Coloring& c, int colors)
{
    std::vector<bool> m(static_cast<std::size_t>(c.n() * colors) + 1, false);
    for (int v = 1; v <= c.n(); ++v)
        m[static_cast<std::size_t>(color_var(v, c[v], colors))] = true;
    return m;
}

void check_well_formed(const CnfFormula& f)
{
    for (const auto& clause : f.clauses) {
        CHECK_FALSE(clause.empty());
        for (Literal l : clause) {
            CHECK(l != 0);
            CHECK(std::abs(l) <= f.num_vars);
            CHECK(std::find(clause.begin(), clause.end(), -l) == clause.end());
        }
    }
    std::set<int> vars;
    for (const auto& m : f.var_map)
        vars.insert(m.var);
    CHECK(vars.size() == f.var_map.size());
    CHECK(static_cast<int>(vars.size()) == f.num_vars);
}

} // namespace

TEST_CASE("phi query encoding size and satisfiability")
{
    Hypergraph h = counterexample_h();
    CnfFormula f = encode_phi_query(h, set({1, 2, 3}));
    CHECK(f.num_vars == 18);
    CHECK(f.clauses.size() == 69);
    check_well_formed(f);
    CHECK(solve(f).status == SolveStatus::sat);
    CHECK_THROWS_AS(encode_phi_query(h, set({1, 2, 6})), std::invalid_argument);
}

TEST_CASE("phi query on small instances")
{
    Hypergraph one = parse_hypergraph("3 3\n1 2 3");
    CnfFormula f = encode_phi_query(one, set({1, 2, 3}));
    SolveResult r = solve(f);
    REQUIRE(r.status == SolveStatus::sat);
    CHECK(decode_coloring(f, r.model).colors() == std::vector<int>{1, 2, 3});

    Hypergraph k4(4, 3, all_subsets(4, 3));
    CHECK(oracle::phi_classes(k4, {1, 2, 3}).empty());
    CHECK(solve(encode_phi_query(k4, set({1, 2, 3}))).status == SolveStatus::unsat);
}

TEST_CASE("phi query model lands in the single Phi({2,3,6}) class")
{
    Hypergraph h = counterexample_h();
    CnfFormula f = encode_phi_query(h, set({2, 3, 6}));
    SolveResult r = solve(f);
    REQUIRE(r.status == SolveStatus::sat);
    Coloring c = decode_coloring(f, r.model);
    CHECK(ColoringClass(c) == phi(h, set({2, 3, 6})).classes.at(0));
    CHECK(ColoringClass(c) == ColoringClass(Coloring({3, 3, 2, 2, 1, 1})));
}

TEST_CASE("rainbow-free query")
{
    Hypergraph h = counterexample_h();
    CnfFormula f3 = encode_rainbow_free_query(h, 3);
    check_well_formed(f3);
    // 6 ALO + 18 AMO + 3 surjectivity + 8 edges x 3!
    CHECK(f3.clauses.size() == 6 + 18 + 3 + 48);
    CHECK(satisfies(f3, model_of(Coloring({3, 2, 2, 2, 2, 1}), 3)));
    SolveResult r = solve(f3);
    REQUIRE(r.status == SolveStatus::sat);
    Coloring c = decode_coloring(f3, r.model);
    CHECK(c.t() == 3);
    CHECK(rainbow_edges(h, c).empty());

    CHECK(solve(encode_rainbow_free_query(parse_hypergraph("3 3\n1 2 3"), 3)).status == SolveStatus::unsat);

    const bool hc_at_least_5 = heterochromatic_number(h).hc >= 5;
    CHECK((solve(encode_rainbow_free_query(h, 4)).status == SolveStatus::sat) == hc_at_least_5);

    CHECK_THROWS_AS(encode_rainbow_free_query(h, 0), std::invalid_argument);
    CHECK_THROWS_AS(encode_rainbow_free_query(h, 7), std::invalid_argument);
    // fewer colors than k: no edge clauses at all
    CHECK(encode_rainbow_free_query(h, 2).clauses.size() == 6 + 6 + 2);
}

TEST_CASE("encoders agree with brute force on 3-graphs with n <= 4")
{
    for (int n = 3; n <= 4; ++n) {
        for (const auto& h : oracle::all_hypergraphs(n, 3)) {
            for (VertexMask e : h.edges()) {
                CnfFormula f = encode_phi_query(h, e);
                SolveResult r = solve(f);
                CHECK((r.status == SolveStatus::sat) == !oracle::phi_classes(h, vertices_of(e)).empty());
                if (r.status == SolveStatus::sat)
                    CHECK(rainbow_edges(h, decode_coloring(f, r.model)) == std::vector<VertexMask>{e});
            }
            for (int t = 1; t <= n; ++t) {
                CnfFormula f = encode_rainbow_free_query(h, t);
                SolveResult r = solve(f);
                CHECK((r.status == SolveStatus::sat) == oracle::rainbow_free_exists(h, t));
                if (r.status == SolveStatus::sat)
                    CHECK(rainbow_edges(h, decode_coloring(f, r.model)).empty());
            }
        }
    }
}

TEST_CASE("solver edge cases")
{
    SolveResult empty = solve(CnfFormula{});
    CHECK(empty.status == SolveStatus::sat);
    CHECK(empty.model.size() == 1);

    CHECK(solve(CnfFormula{1, {{1}, {-1}}, {}}).status == SolveStatus::unsat);
    CHECK(solve(CnfFormula{2, {{}}, {}}).status == SolveStatus::unsat);

    // lowest variable first, true first
    SolveResult r = solve(CnfFormula{3, {{1, 2, 3}}, {}});
    REQUIRE(r.status == SolveStatus::sat);
    CHECK(r.model == std::vector<bool>{false, true, true, true});
}

TEST_CASE("decision budget surfaces as its own status")
{
    // pigeonhole 4 into 3: unsatisfiable, needs several decisions
    CnfFormula php{12, {}, {}};
    auto var = [](int p, int h) { return (p - 1) * 3 + h; };
    for (int p = 1; p <= 4; ++p)
        php.clauses.push_back({var(p, 1), var(p, 2), var(p, 3)});
    for (int h = 1; h <= 3; ++h)
        for (int p = 1; p <= 4; ++p)
            for (int q = p + 1; q <= 4; ++q)
                php.clauses.push_back({-var(p, h), -var(q, h)});
    CHECK(solve(php, {2}).status == SolveStatus::budget_exceeded);
    CHECK(solve(php).status == SolveStatus::unsat);
}

TEST_CASE("solver agrees with truth tables on random formulas")
{
    std::mt19937 rng(47);
    int sat = 0, unsat = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int vars = trial < 380 ? 3 + trial % 12 : 20;
        const int clauses = static_cast<int>(vars * (trial % 2 ? 1.5 : 3.0));
        std::uniform_int_distribution<int> pick(1, vars);
        std::uniform_int_distribution<int> width(1, 3);
        CnfFormula f{vars, {}, {}};
        for (int c = 0; c < clauses; ++c) {
            Clause clause;
            const int w = width(rng);
            for (int i = 0; i < w; ++i) {
                int v = pick(rng);
                clause.push_back(rng() % 2 ? v : -v);
            }
            f.clauses.push_back(clause);
        }
        SolveResult r = solve(f);
        const bool expected = oracle::truth_table_sat(vars, f.clauses);
        CHECK((r.status == SolveStatus::sat) == expected);
        if (r.status == SolveStatus::sat) {
            CHECK(satisfies(f, r.model));
            ++sat;
        } else {
            ++unsat;
        }
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
}

TEST_CASE("DIMACS emission")
{
    CHECK(emit_dimacs(CnfFormula{2, {{1, -2}}, {}}) == "p cnf 2 1\n1 -2 0\n");
    CnfFormula f = encode_phi_query(counterexample_h(), set({1, 2, 3}));
    std::string text = emit_dimacs(f);
    CHECK(text.find("c map v 1 1 1\n") == 0);
    CHECK(text.find("\np cnf 18 69\n") != std::string::npos);
}

TEST_CASE("DIMACS round-trip")
{
    CnfFormula f = encode_phi_query(counterexample_h(), set({1, 2, 3}));
    CHECK(parse_dimacs(emit_dimacs(f)) == f);
    for (int t = 1; t <= 6; ++t) {
        CnfFormula g = encode_rainbow_free_query(counterexample_h(), t);
        CHECK(parse_dimacs(emit_dimacs(g)) == g);
    }
    // clauses may span lines and comments are skipped
    CnfFormula p = parse_dimacs("c hello\np cnf 3 2\n1 -2\n3 0 -1\n0\n");
    CHECK(p.clauses == std::vector<Clause>{{1, -2, 3}, {-1}});
}

TEST_CASE("DIMACS errors")
{
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("c map v 1 1 5\np cnf 2 0\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs(""), DimacsError);
}

TEST_CASE("external solver models decode through the variable map")
{
    Hypergraph h = counterexample_h();
    CnfFormula f = encode_rainbow_free_query(h, 3);
    // (3,2,2,2,2,1) written as an external solver would
    std::string out = "s SATISFIABLE\nv";
    auto m = model_of(Coloring({3, 2, 2, 2, 2, 1}), 3);
    for (int v = 1; v <= f.num_vars; ++v)
        out += " " + std::to_string(m[static_cast<std::size_t>(v)] ? v : -v);
    out += " 0\n";
    auto model = parse_model(out, f.num_vars);
    CHECK(satisfies(f, model));
    CHECK(decode_coloring(f, model).colors() == std::vector<int>{3, 2, 2, 2, 2, 1});
    CHECK_THROWS_AS(parse_model("s UNSATISFIABLE\n", 3), DimacsError);
    CHECK_THROWS_AS(parse_model("v 4 0\n", 3), DimacsError);
    CHECK_THROWS_AS(decode_coloring(f, std::vector<bool>(19, false)), std::invalid_argument);
}

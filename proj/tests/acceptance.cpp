// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <hforest/cli.hpp>
#include <hforest/cnf.hpp>
#include <hforest/counterexample.hpp>
#include <hforest/forest.hpp>
#include <hforest/search.hpp>
#include <hforest/tightness.hpp>

#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hforest;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed;
    std::string detail;
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

bool report(int id, const std::string& what, double limit_s, const std::function<Outcome()>& body)
{
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < limit_s;
    if (!in_time)
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    const bool ok = o.passed && in_time;
    std::printf("criterion %d: %s  %s  [%.3fs, limit %.0fs]%s%s\n", id, ok ? "PASS" : "FAIL", what.c_str(), secs,
                limit_s, o.detail.empty() ? "" : "  -- ", o.detail.c_str());
    std::fflush(stdout);
    return ok;
}

std::vector<std::string> c1_args() { return {"--json", "verify-paper"}; }
std::vector<std::string> c2_args(int n)
{
    return {"--json", "search", "-n", std::to_string(n), "-k", "3", "--mode", "saturated-not-tight"};
}
std::vector<std::string> c3_args()
{
    return {"--json", "search", "-n", "6", "-k", "3", "--mode", "saturated-not-tight", "--modulo-iso"};
}

Outcome criterion1()
{
    CliRun r = cli_run(c1_args());
    auto j = nlohmann::json::parse(r.out);
    std::string failing;
    for (const auto& a : j["assertions"])
        if (!a["passed"].get<bool>())
            failing += (failing.empty() ? "" : ", ") + a["name"].get<std::string>() + ": " +
                       a["detail"].get<std::string>();
    if (r.code == 0)
        return {true, ""};
    return {false, "exit " + std::to_string(r.code) + "; " + failing};
}

Outcome criterion2()
{
    for (int n : {4, 5}) {
        CliRun r = cli_run(c2_args(n));
        auto j = nlohmann::json::parse(r.out);
        if (r.code != 0 || j["hit_count"] != 0)
            return {false, "n=" + std::to_string(n) + " produced " + j["hit_count"].dump() + " hits"};
    }
    return {true, "0 hits for n=4 and n=5"};
}

Outcome criterion3()
{
    CliRun r = cli_run(c3_args());
    auto j = nlohmann::json::parse(r.out);
    int matches = 0;
    for (const auto& hit : j["hits"])
        if (hit["isomorphic_to_paper_h"].get<bool>())
            ++matches;
    const int hits = j["hit_count"].get<int>();
    return {r.code == 0 && matches >= 1,
            std::to_string(hits) + " classes, " + std::to_string(matches) + " isomorphic to H"};
}

Outcome criterion4()
{
    long forests = 0;
    for (int n = 3; n <= 5; ++n) {
        for (const auto& h : oracle::all_hypergraphs(n, 3)) {
            const bool forest = is_k_forest(h);
            if (forest != oracle::is_forest(h))
                return {false, "forest predicate disagrees with brute force"};
            if (!forest)
                continue;
            ++forests;
            if (!lovasz_bound_ok(h))
                return {false, "bound violated by a forest"};
        }
    }
    return {true, std::to_string(forests) + " forests checked"};
}

Outcome criterion5()
{
    long graphs = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& h : oracle::all_hypergraphs(n, 2)) {
            ++graphs;
            if (is_tight(h) != is_connected(h))
                return {false, "mismatch on a graph with n=" + std::to_string(n)};
        }
    }
    return {true, std::to_string(graphs) + " graphs checked"};
}

bool tight_and_edge_minimal(const Hypergraph& h)
{
    if (!is_tight(h))
        return false;
    for (VertexMask e : h.edges())
        if (is_tight(h.without_edge(e)))
            return false;
    return true;
}

Outcome criterion6()
{
    int checked = 0;
    for (const auto& h : oracle::all_hypergraphs(4, 3)) {
        ++checked;
        if (is_k_tree(h) != tight_and_edge_minimal(h))
            return {false, "mismatch on a 4-vertex 3-graph"};
    }
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        ++checked;
        auto h = oracle::random_hypergraph(5, 3, rng, 0.4);
        if (is_k_tree(h) != tight_and_edge_minimal(h))
            return {false, "mismatch on a random 5-vertex 3-graph"};
    }
    return {true, std::to_string(checked) + " hypergraphs checked"};
}

Outcome criterion7()
{
    long queries = 0;
    for (int n = 3; n <= 5; ++n) {
        for (const auto& h : oracle::all_hypergraphs(n, 3)) {
            for (VertexMask e : h.edges()) {
                ++queries;
                auto f = cnf::encode_phi_query(h, e);
                auto r = cnf::solve(f);
                const bool expected = !oracle::phi_classes(h, vertices_of(e)).empty();
                if ((r.status == cnf::SolveStatus::sat) != expected || r.status == cnf::SolveStatus::budget_exceeded)
                    return {false, "phi query status differs from brute force"};
                if (expected && rainbow_edges(h, cnf::decode_coloring(f, r.model)) != std::vector<VertexMask>{e})
                    return {false, "phi query model is not a witness"};
            }
            for (int t = 1; t <= n; ++t) {
                ++queries;
                auto f = cnf::encode_rainbow_free_query(h, t);
                auto r = cnf::solve(f);
                const bool expected = oracle::rainbow_free_exists(h, t);
                if ((r.status == cnf::SolveStatus::sat) != expected)
                    return {false, "rainbow-free query status differs from brute force"};
                if (expected) {
                    Coloring c = cnf::decode_coloring(f, r.model);
                    if (c.t() != t || !rainbow_edges(h, c).empty())
                        return {false, "rainbow-free model is not a witness"};
                }
            }
        }
    }
    return {true, std::to_string(queries) + " queries checked"};
}

Outcome criterion8()
{
    std::vector<std::vector<std::string>> commands = {c1_args(), c2_args(4), c2_args(5), c3_args()};
    for (const auto& args : commands) {
        if (cli_run(args).out != cli_run(args).out)
            return {false, "output differs between runs of '" + args[1] + "'"};
    }
    return {true, "4 commands byte-identical"};
}

} // namespace

int main()
{
    bool all = true;
    all &= report(1, "verify-paper exits 0", 1, criterion1);
    all &= report(2, "no saturated non-tight 3-forest on 4 or 5 vertices", 10, criterion2);
    all &= report(3, "6-vertex search finds a class isomorphic to H", 600, criterion3);
    all &= report(4, "3-forests on at most 5 vertices satisfy the edge bound", 60, criterion4);
    all &= report(5, "2-graphs on at most 5 vertices: tight iff connected", 60, criterion5);
    all &= report(6, "k-tree iff tight and edge-minimal", 60, criterion6);
    all &= report(7, "CNF statuses match brute force for 3-graphs on at most 5 vertices", 300, criterion7);
    all &= report(8, "JSON outputs of criteria 1-3 are deterministic", 600, criterion8);
    std::printf("acceptance: %s\n", all ? "all criteria pass" : "some criteria fail");
    return all ? 0 : 1;
}

#include <hforest/cli.hpp>

#include <hforest/cnf.hpp>
#include <hforest/counterexample.hpp>
#include <hforest/forest.hpp>
#include <hforest/report.hpp>
#include <hforest/search.hpp>
#include <hforest/tightness.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fs = std::filesystem;

namespace hforest::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A path, or the name of a built-in instance when no such file exists.
Hypergraph load_hypergraph(const std::string& path)
{
    if (!fs::exists(path))
        if (auto h = builtin_instance(path))
            return *h;
    return parse_hypergraph(read_file(path));
}

// Accepts "1 2 3", "1,2,3" or "{1,2,3}".
std::vector<int> parse_int_list(const std::string& text)
{
    std::string cleaned = text;
    std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '{' || c == '}'; }, ' ');
    std::istringstream in(cleaned);
    std::vector<int> out;
    std::string word;
    while (in >> word) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(word, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != word.size())
            throw UsageError("expected integers, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

VertexMask parse_vertex_set(const std::string& text, int n)
{
    VertexMask m = 0;
    for (int v : parse_int_list(text)) {
        if (v < 1 || v > n)
            throw UsageError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (m & vertex_bit(v))
            throw UsageError("repeated vertex " + std::to_string(v));
        m |= vertex_bit(v);
    }
    return m;
}

VertexMask parse_edge_of(const Hypergraph& h, const std::string& text)
{
    VertexMask e = parse_vertex_set(text, h.n());
    if (!h.contains(e))
        throw UsageError(format_set(e) + " is not an edge");
    return e;
}

std::string colors_text(const std::vector<int>& colors)
{
    std::string s;
    for (std::size_t i = 0; i < colors.size(); ++i)
        s += (i ? " " : "") + std::to_string(colors[i]);
    return s;
}

struct Globals {
    bool json = false;
    bool quiet = false;
};

class Printer {
public:
    Printer(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

    void emit(const nlohmann::json& j, const std::string& text) const
    {
        if (g_.quiet)
            return;
        if (g_.json)
            out_ << j.dump(2) << '\n';
        else
            out_ << text;
    }

private:
    const Globals& g_;
    std::ostream& out_;
};

// --- check ---------------------------------------------------------------

struct CheckArgs {
    std::string path;
    bool forest = false;
    bool saturated = false;
    bool tight = false;
    bool tree = false;
    bool lovasz = false;
    bool hc = false;
    bool phi = false;
    bool delta = false;
};

int cmd_check(const CheckArgs& a, const Printer& p)
{
    Hypergraph h = load_hypergraph(a.path);
    ReportOptions opt;
    const bool any = a.forest || a.saturated || a.tight || a.tree || a.lovasz || a.hc || a.phi || a.delta;
    if (any)
        opt = ReportOptions{a.forest, a.phi, a.delta, a.saturated, a.hc, a.tight, a.tree, a.lovasz};
    VerificationReport r = build_report(h, opt);

    bool all_hold = true;
    if (r.forest)
        all_hold = all_hold && r.forest->is_forest;
    if (r.saturation)
        all_hold = all_hold && r.saturation->applicable && r.saturation->result.saturated;
    if (r.tight)
        all_hold = all_hold && r.tight->tight;
    if (r.k_tree)
        all_hold = all_hold && *r.k_tree;
    if (r.lovasz)
        all_hold = all_hold && r.lovasz->ok;

    p.emit(to_json(r), render_text(r));
    return all_hold ? ok : predicate_failed;
}

// --- verify-paper --------------------------------------------------------

struct VerifyArgs {
    std::string remove_edge;
    std::string witness;
};

int cmd_verify_paper(const VerifyArgs& a, const Printer& p)
{
    VerifyOptions opt;
    if (!a.remove_edge.empty()) {
        const Hypergraph h = counterexample_h();
        opt.remove_edge = parse_edge_of(h, a.remove_edge);
    }
    if (!a.witness.empty())
        opt.witness = parse_int_list(a.witness);
    VerifyOutcome outcome = verify_counterexample(opt);
    p.emit(to_json(outcome), render_text(outcome));
    return outcome.ok() ? ok : predicate_failed;
}

// --- hc / phi / delta ----------------------------------------------------

int cmd_hc(const std::string& path, const Printer& p)
{
    Hypergraph h = load_hypergraph(path);
    HcResult r = heterochromatic_number(h);
    const bool defined = r.status == HcStatus::defined;
    nlohmann::json j = {{"input", hypergraph_json(h)},
                        {"status", defined ? "defined" : "no rainbow edge possible"},
                        {"hc", defined ? nlohmann::json(r.hc) : nlohmann::json(nullptr)},
                        {"tight", defined && r.hc == h.k()},
                        {"witness", r.witness ? nlohmann::json(r.witness->canonical().colors()) : nullptr}};
    std::ostringstream text;
    if (defined)
        text << "hc = " << r.hc << (r.hc == h.k() ? " (tight)" : " (not tight)") << '\n';
    else
        text << "hc undefined: no rainbow edge possible\n";
    if (r.witness)
        text << "rainbow-free " << r.witness->t() << "-coloring: " << colors_text(r.witness->canonical().colors())
             << '\n';
    p.emit(j, text.str());
    return ok;
}

int cmd_phi(const std::string& path, const std::string& edge, const Printer& p)
{
    Hypergraph h = load_hypergraph(path);
    VertexMask e = parse_edge_of(h, edge);
    PhiSet s = phi(h, e);
    auto classes = nlohmann::json::array();
    std::ostringstream text;
    text << "Phi(" << format_set(e) << "): " << s.classes.size() << " class(es) up to relabelling\n";
    for (const auto& c : s.classes) {
        classes.push_back(c.canonical().colors());
        text << "  " << colors_text(c.canonical().colors()) << '\n';
    }
    p.emit({{"edge", edge_json(e)}, {"classes", classes}, {"count", s.classes.size()}}, text.str());
    return ok;
}

int cmd_delta(const std::string& path, const std::string& edge, const Printer& p)
{
    Hypergraph h = load_hypergraph(path);
    VertexMask e = parse_edge_of(h, edge);
    PhiSet s = phi(h, e);
    if (s.classes.empty())
        throw UsageError(format_set(e) + " is not a forest edge: Phi is empty");
    DeltaSet d = delta(h, s);
    std::ostringstream text;
    text << "Delta(" << format_set(e) << ") = {";
    for (std::size_t i = 0; i < d.forced.size(); ++i)
        text << (i ? "," : "") << format_set(d.forced[i]);
    text << "}\n";
    p.emit({{"edge", edge_json(e)}, {"forced", edges_json(d.forced)}}, text.str());
    return ok;
}

// --- search --------------------------------------------------------------

struct SearchArgs {
    int n = 0;
    int k = 0;
    std::string mode = "saturated-not-tight";
    bool modulo_iso = false;
    std::string shard;
    unsigned jobs = 1;
    std::string out_dir;
};

Shard parse_shard(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw UsageError("shard must be INDEX/COUNT");
    try {
        Shard s{std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
        if (s.count == 0 || s.index >= s.count)
            throw UsageError("shard index must be below shard count");
        return s;
    } catch (const std::logic_error&) {
        throw UsageError("shard must be INDEX/COUNT");
    }
}

std::string hit_file_name(std::size_t i)
{
    std::ostringstream s;
    s << "hit-" << std::setw(4) << std::setfill('0') << i + 1 << ".txt";
    return s.str();
}

nlohmann::json search_index(const SearchTask& task, const std::vector<SearchHit>& hits)
{
    const Hypergraph reference = counterexample_h();
    auto list = nlohmann::json::array();
    bool reference_found = false;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const auto& h = hits[i];
        const bool matches_reference = are_isomorphic(h.hypergraph, reference);
        reference_found = reference_found || matches_reference;
        const auto& r = h.report;
        list.push_back({{"file", hit_file_name(i)},
                        {"edge_set", h.edge_set},
                        {"canonical_form", h.canonical},
                        {"edges", edges_json(h.hypergraph.edges())},
                        {"isomorphic_to_paper_h", matches_reference},
                        {"summary",
                         {{"edge_count", h.hypergraph.edge_count()},
                          {"k_forest", r.forest->is_forest},
                          {"saturated", r.saturation->applicable && r.saturation->result.saturated},
                          {"tight", r.tight->tight},
                          {"k_tree", *r.k_tree},
                          {"hc", r.hc->status == HcStatus::defined ? nlohmann::json(r.hc->hc) : nullptr},
                          {"lovasz_ok", r.lovasz->ok}}}});
    }
    nlohmann::json shard = nullptr;
    if (task.shard)
        shard = {{"index", task.shard->index}, {"count", task.shard->count}};
    return {{"n", task.n},
            {"k", task.k},
            {"mode", std::string(to_string(task.mode))},
            {"modulo_iso", task.modulo_iso},
            {"shard", shard},
            {"hit_count", hits.size()},
            {"paper_h_found", reference_found},
            {"hits", list}};
}

void write_search_output(const std::string& out_dir, const nlohmann::json& index, const std::vector<SearchHit>& hits)
{
    const fs::path target(out_dir);
    if (fs::exists(target) && !fs::is_empty(target) && !fs::exists(target / "index.json"))
        throw UsageError(out_dir + " exists and does not hold a previous search result");
    fs::path tmp = target;
    tmp += ".partial";
    std::error_code ec;
    fs::remove_all(tmp, ec);
    if (!fs::create_directories(tmp, ec) || ec)
        throw UsageError("cannot create " + tmp.string() + (ec ? ": " + ec.message() : ""));
    for (std::size_t i = 0; i < hits.size(); ++i) {
        std::ofstream f(tmp / hit_file_name(i), std::ios::binary);
        f << serialize(hits[i].hypergraph);
        if (!f)
            throw UsageError("cannot write into " + tmp.string());
    }
    {
        std::ofstream f(tmp / "index.json", std::ios::binary);
        f << index.dump(2) << '\n';
        if (!f)
            throw UsageError("cannot write into " + tmp.string());
    }
    fs::remove_all(target, ec);
    fs::rename(tmp, target, ec);
    if (ec)
        throw UsageError("cannot move results into " + out_dir + ": " + ec.message());
}

int cmd_search(const SearchArgs& a, const Printer& p)
{
    SearchTask task;
    task.n = a.n;
    task.k = a.k;
    task.mode = parse_search_mode(a.mode);
    task.modulo_iso = a.modulo_iso;
    if (!a.shard.empty())
        task.shard = parse_shard(a.shard);
    check_search_limits(task.n, task.k);
    // validate before the (possibly long) run
    if (task.shard)
        shard_range(static_cast<int>(binomial(task.n, task.k)), *task.shard);

    auto hits = run_search(task, a.jobs);
    nlohmann::json index = search_index(task, hits);
    if (!a.out_dir.empty())
        write_search_output(a.out_dir, index, hits);

    std::ostringstream text;
    text << "search n=" << task.n << " k=" << task.k << " mode=" << to_string(task.mode)
         << (task.modulo_iso ? " modulo-iso" : "");
    if (task.shard)
        text << " shard=" << task.shard->index << '/' << task.shard->count;
    text << ": " << hits.size() << " hit(s)\n";
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const auto& entry = index["hits"][i];
        text << "  " << hit_file_name(i) << "  E = {";
        const auto& edges = hits[i].hypergraph.edges();
        for (std::size_t j = 0; j < edges.size(); ++j)
            text << (j ? "," : "") << format_set(edges[j]);
        text << "}" << (entry["isomorphic_to_paper_h"].get<bool>() ? "  [isomorphic to paper-h]" : "") << '\n';
    }
    p.emit(index, text.str());
    return ok;
}

// --- export-cnf ----------------------------------------------------------

struct ExportArgs {
    std::string path;
    std::string query;
    std::string argument;
    std::string out;
    bool solve = false;
    std::string model;
};

int cmd_export_cnf(const ExportArgs& a, const Printer& p, std::ostream& out)
{
    Hypergraph h = load_hypergraph(a.path);
    cnf::CnfFormula f;
    if (a.query == "phi") {
        f = cnf::encode_phi_query(h, parse_edge_of(h, a.argument));
    } else if (a.query == "rainbowfree") {
        auto ts = parse_int_list(a.argument);
        if (ts.size() != 1)
            throw UsageError("rainbowfree expects a single color count");
        if (ts[0] < 1 || ts[0] > h.n())
            throw UsageError("color count " + std::to_string(ts[0]) + " outside 1.." + std::to_string(h.n()));
        f = cnf::encode_rainbow_free_query(h, ts[0]);
    } else {
        throw UsageError("query must be 'phi' or 'rainbowfree'");
    }

    const std::string dimacs = cnf::emit_dimacs(f);
    if (!a.out.empty()) {
        std::ofstream file(a.out, std::ios::binary);
        file << dimacs;
        if (!file)
            throw UsageError("cannot write " + a.out);
    } else if (!a.solve && a.model.empty()) {
        out << dimacs;
        return ok;
    }

    nlohmann::json j = {{"num_vars", f.num_vars}, {"num_clauses", f.clauses.size()}};
    std::ostringstream text;
    if (!a.out.empty())
        text << "wrote " << a.out << " (p cnf " << f.num_vars << ' ' << f.clauses.size() << ")\n";

    std::optional<std::vector<bool>> model;
    if (a.solve) {
        auto r = cnf::solve(f);
        j["status"] = std::string(cnf::to_string(r.status));
        text << "status: " << cnf::to_string(r.status) << '\n';
        if (r.status == cnf::SolveStatus::sat)
            model = r.model;
    }
    if (!a.model.empty())
        model = cnf::parse_model(read_file(a.model), f.num_vars);
    if (model) {
        if (!cnf::satisfies(f, *model))
            throw UsageError("model does not satisfy the formula");
        Coloring c = cnf::decode_coloring(f, *model);
        auto rainbow = rainbow_edges(h, c);
        j["coloring"] = c.colors();
        j["rainbow_edges"] = edges_json(rainbow);
        text << "coloring: " << colors_text(c.colors()) << '\n';
        text << "rainbow edges: {";
        for (std::size_t i = 0; i < rainbow.size(); ++i)
            text << (i ? "," : "") << format_set(rainbow[i]);
        text << "}\n";
    }
    p.emit(j, text.str());
    return ok;
}

// --- isomorphic ----------------------------------------------------------

int cmd_isomorphic(const std::string& a, const std::string& b, const Printer& p)
{
    Hypergraph ha = load_hypergraph(a);
    Hypergraph hb = load_hypergraph(b);
    const bool iso = are_isomorphic(ha, hb);
    p.emit({{"isomorphic", iso}}, std::string(iso ? "isomorphic\n" : "not isomorphic\n"));
    return iso ? ok : predicate_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Verification and search for k-forests in k-uniform hypergraphs", "hforest"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_flag("--json", globals.json, "Print JSON instead of text");
    app.add_flag("--quiet", globals.quiet, "Print nothing; report through the exit code");
    Printer printer(globals, out);
    std::function<int()> action;

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Check forest, saturation, tightness and related properties");
    c->add_option("path", check.path, "Hypergraph file or built-in name (paper-h)")->required();
    c->add_flag("--forest", check.forest, "k-forest with per-edge witnesses");
    c->add_flag("--saturated", check.saturated, "Saturation with Delta certificates");
    c->add_flag("--tight", check.tight, "Tightness");
    c->add_flag("--tree", check.tree, "k-tree (tight k-forest)");
    c->add_flag("--lovasz", check.lovasz, "Edge bound C(n-1,k-1)");
    c->add_flag("--hc", check.hc, "Heterochromatic number");
    c->add_flag("--phi", check.phi, "Phi class counts per edge");
    c->add_flag("--delta", check.delta, "Delta sets per edge");
    c->callback([&] { action = [&] { return cmd_check(check, printer); }; });

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify-paper", "Re-derive every claim about the built-in counterexample");
    v->add_option("--self-test-remove-edge", verify.remove_edge)->group("");
    v->add_option("--self-test-witness", verify.witness)->group("");
    v->callback([&] { action = [&] { return cmd_verify_paper(verify, printer); }; });

    std::string hc_path;
    auto* hc = app.add_subcommand("hc", "Heterochromatic number with a rainbow-free witness");
    hc->add_option("path", hc_path)->required();
    hc->callback([&] { action = [&] { return cmd_hc(hc_path, printer); }; });

    std::string phi_path, phi_edge;
    auto* ph = app.add_subcommand("phi", "Colorings making an edge the only rainbow edge");
    ph->add_option("path", phi_path)->required();
    ph->add_option("edge", phi_edge, "e.g. \"1 2 3\"")->required();
    ph->callback([&] { action = [&] { return cmd_phi(phi_path, phi_edge, printer); }; });

    std::string delta_path, delta_edge;
    auto* de = app.add_subcommand("delta", "Non-edges rainbow under every coloring in Phi(edge)");
    de->add_option("path", delta_path)->required();
    de->add_option("edge", delta_edge)->required();
    de->callback([&] { action = [&] { return cmd_delta(delta_path, delta_edge, printer); }; });

    SearchArgs search;
    auto* s = app.add_subcommand("search", "Exhaustive search over small k-graphs");
    s->add_option("-n", search.n, "Vertex count")->required();
    s->add_option("-k", search.k, "Uniformity")->required();
    s->add_option("--mode", search.mode, "saturated-not-tight | all-saturated-forests | all-forests")
        ->capture_default_str();
    s->add_flag("--modulo-iso", search.modulo_iso, "One representative per isomorphism class");
    s->add_option("--shard", search.shard, "INDEX/COUNT slice of the edge-set space");
    s->add_option("--jobs", search.jobs, "Worker threads")->capture_default_str();
    s->add_option("--out", search.out_dir, "Directory for hit files and index.json");
    s->callback([&] { action = [&] { return cmd_search(search, printer); }; });

    ExportArgs exp;
    auto* e = app.add_subcommand("export-cnf", "Export a coloring query as DIMACS CNF");
    e->add_option("path", exp.path)->required();
    e->add_option("query", exp.query, "phi | rainbowfree")->required();
    e->add_option("argument", exp.argument, "edge for phi, color count for rainbowfree")->required();
    e->add_option("-o,--out", exp.out, "Output file (default: stdout)");
    e->add_flag("--solve", exp.solve, "Solve with the internal DPLL solver");
    e->add_option("--model", exp.model, "Decode an external solver's output");
    e->callback([&] { action = [&] { return cmd_export_cnf(exp, printer, out); }; });

    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("isomorphic", "Test two hypergraphs for isomorphism");
    iso->add_option("first", iso_a)->required();
    iso->add_option("second", iso_b)->required();
    iso->callback([&] { action = [&] { return cmd_isomorphic(iso_a, iso_b, printer); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        return action();
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << '\n';
    } catch (const cnf::DimacsError& ex) {
        err << "error: " << ex.what() << '\n';
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
    } catch (const fs::filesystem_error& ex) {
        err << "error: " << ex.what() << '\n';
    }
    return input_error;
}

} // namespace hforest::cli

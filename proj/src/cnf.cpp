#include <hforest/cnf.hpp>

#include <algorithm>
#include <numeric>

namespace hforest::cnf {

namespace {

void add_exactly_one(CnfFormula& f, int n, int colors)
{
    for (int v = 1; v <= n; ++v) {
        Clause alo;
        for (int c = 1; c <= colors; ++c)
            alo.push_back(color_var(v, c, colors));
        f.clauses.push_back(std::move(alo));
    }
    for (int v = 1; v <= n; ++v)
        for (int c = 1; c <= colors; ++c)
            for (int d = c + 1; d <= colors; ++d)
                f.clauses.push_back({-color_var(v, c, colors), -color_var(v, d, colors)});
}

// One clause per injective assignment of `colors` colors to the vertices of
// e, each forbidding that assignment.
void forbid_rainbow(CnfFormula& f, VertexMask e, int colors)
{
    const auto verts = vertices_of(e);
    const std::size_t k = verts.size();
    if (static_cast<int>(k) > colors)
        return;
    std::vector<int> assigned(k, 0);
    std::vector<bool> taken(static_cast<std::size_t>(colors) + 1, false);
    auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == k) {
            Clause clause;
            for (std::size_t j = 0; j < k; ++j)
                clause.push_back(-color_var(verts[j], assigned[j], colors));
            f.clauses.push_back(std::move(clause));
            return;
        }
        for (int c = 1; c <= colors; ++c) {
            if (taken[static_cast<std::size_t>(c)])
                continue;
            taken[static_cast<std::size_t>(c)] = true;
            assigned[i] = c;
            self(self, i + 1);
            taken[static_cast<std::size_t>(c)] = false;
        }
    };
    rec(rec, 0);
}

CnfFormula with_vars(int n, int colors)
{
    CnfFormula f;
    f.num_vars = n * colors;
    for (int v = 1; v <= n; ++v)
        for (int c = 1; c <= colors; ++c)
            f.var_map.push_back({v, c, color_var(v, c, colors)});
    return f;
}

} // namespace

CnfFormula encode_phi_query(const Hypergraph& h, VertexMask e)
{
    if (!h.contains(e))
        throw std::invalid_argument(format_set(e) + " is not an edge");
    const int k = h.k();
    CnfFormula f = with_vars(h.n(), k);
    int color = 1;
    for (int v : vertices_of(e))
        f.clauses.push_back({color_var(v, color++, k)});
    add_exactly_one(f, h.n(), k);
    for (VertexMask other : h.edges())
        if (other != e)
            forbid_rainbow(f, other, k);
    return f;
}

CnfFormula encode_rainbow_free_query(const Hypergraph& h, int t)
{
    if (t < 1 || t > h.n())
        throw std::invalid_argument("color count " + std::to_string(t) + " outside 1.." + std::to_string(h.n()));
    CnfFormula f = with_vars(h.n(), t);
    add_exactly_one(f, h.n(), t);
    for (int c = 1; c <= t; ++c) {
        Clause used;
        for (int v = 1; v <= h.n(); ++v)
            used.push_back(color_var(v, c, t));
        f.clauses.push_back(std::move(used));
    }
    for (VertexMask e : h.edges())
        forbid_rainbow(f, e, t);
    return f;
}

namespace {

class Dpll {
public:
    Dpll(const CnfFormula& f, const SolveLimits& limits)
        : f_(f), limits_(limits), value_(static_cast<std::size_t>(f.num_vars) + 1, 0)
    {
    }

    SolveStatus run()
    {
        for (const auto& c : f_.clauses)
            if (c.empty())
                return SolveStatus::unsat;
        if (search())
            return SolveStatus::sat;
        return out_of_budget_ ? SolveStatus::budget_exceeded : SolveStatus::unsat;
    }

    std::vector<bool> model() const
    {
        std::vector<bool> m(value_.size(), false);
        for (std::size_t v = 1; v < value_.size(); ++v)
            m[v] = value_[v] > 0;
        return m;
    }

private:
    int literal_value(Literal l) const
    {
        const int v = value_[static_cast<std::size_t>(std::abs(l))];
        return l > 0 ? v : -v;
    }

    void assign(Literal l)
    {
        value_[static_cast<std::size_t>(std::abs(l))] = l > 0 ? 1 : -1;
        trail_.push_back(std::abs(l));
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            value_[static_cast<std::size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
    }

    // Assigns every unit literal until fixpoint; false on a falsified clause.
    bool propagate()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : f_.clauses) {
                int unassigned = 0;
                Literal last = 0;
                bool satisfied = false;
                for (Literal l : clause) {
                    const int lv = literal_value(l);
                    if (lv > 0) {
                        satisfied = true;
                        break;
                    }
                    if (lv == 0) {
                        ++unassigned;
                        last = l;
                    }
                }
                if (satisfied)
                    continue;
                if (unassigned == 0)
                    return false;
                if (unassigned == 1) {
                    assign(last);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search()
    {
        const std::size_t mark = trail_.size();
        if (!propagate()) {
            undo(mark);
            return false;
        }
        int var = 0;
        for (std::size_t v = 1; v < value_.size(); ++v) {
            if (value_[v] == 0) {
                var = static_cast<int>(v);
                break;
            }
        }
        if (var == 0)
            return true;
        for (Literal l : {var, -var}) {
            if (limits_.max_decisions && decisions_ >= limits_.max_decisions) {
                out_of_budget_ = true;
                break;
            }
            ++decisions_;
            const std::size_t before = trail_.size();
            assign(l);
            if (search())
                return true;
            undo(before);
            if (out_of_budget_)
                break;
        }
        undo(mark);
        return false;
    }

    const CnfFormula& f_;
    SolveLimits limits_;
    std::vector<int> value_;
    std::vector<int> trail_;
    std::uint64_t decisions_ = 0;
    bool out_of_budget_ = false;
};

} // namespace

SolveResult solve(const CnfFormula& f, const SolveLimits& limits)
{
    Dpll dpll(f, limits);
    SolveResult r;
    r.status = dpll.run();
    if (r.status == SolveStatus::sat)
        r.model = dpll.model();
    return r;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& model)
{
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](Literal l) {
            const auto v = static_cast<std::size_t>(std::abs(l));
            return v < model.size() && model[v] == (l > 0);
        });
    });
}

Coloring decode_coloring(const CnfFormula& f, const std::vector<bool>& model)
{
    int n = 0;
    int palette = 0;
    for (const auto& e : f.var_map) {
        n = std::max(n, e.vertex);
        palette = std::max(palette, e.color);
    }
    if (n == 0)
        throw std::invalid_argument("formula has no variable map");
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (const auto& e : f.var_map) {
        if (static_cast<std::size_t>(e.var) >= model.size() || !model[static_cast<std::size_t>(e.var)])
            continue;
        int& slot = colors[static_cast<std::size_t>(e.vertex - 1)];
        if (slot != 0)
            throw std::invalid_argument("vertex " + std::to_string(e.vertex) + " has more than one color");
        slot = e.color;
    }
    for (int v = 1; v <= n; ++v)
        if (colors[static_cast<std::size_t>(v - 1)] == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no color");
    return Coloring(std::move(colors), palette);
}

std::string_view to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::sat:
        return "SAT";
    case SolveStatus::unsat:
        return "UNSAT";
    case SolveStatus::budget_exceeded:
        return "BUDGET_EXCEEDED";
    }
    return "?";
}

} // namespace hforest::cnf

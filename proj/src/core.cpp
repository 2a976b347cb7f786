#include <hforest/core.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hforest {

std::vector<int> vertices_of(VertexMask m)
{
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m) + 1);
        m &= m - 1;
    }
    return out;
}

VertexMask mask_of(std::span<const int> vertices)
{
    VertexMask m = 0;
    for (int v : vertices)
        m |= vertex_bit(v);
    return m;
}

std::string format_set(VertexMask m)
{
    std::string s = "{";
    bool first = true;
    for (int v : vertices_of(m)) {
        if (!first)
            s += ',';
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::uint64_t binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i)
        result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return result;
}

std::vector<VertexMask> all_subsets(int n, int r)
{
    std::vector<VertexMask> out;
    if (r < 0 || r > n)
        return out;
    std::vector<int> combo(r);
    for (int i = 0; i < r; ++i)
        combo[i] = i + 1;
    for (;;) {
        out.push_back(mask_of(combo));
        int i = r - 1;
        while (i >= 0 && combo[i] == n - r + i + 1)
            --i;
        if (i < 0)
            break;
        ++combo[i];
        for (int j = i + 1; j < r; ++j)
            combo[j] = combo[j - 1] + 1;
    }
    return out;
}

Hypergraph::Hypergraph(int n, int k, std::vector<VertexMask> edges)
    : n_(n), k_(k), edges_(std::move(edges))
{
    if (k < 2 || k > n || n > max_vertices)
        throw std::invalid_argument("hypergraph requires 2 <= k <= n <= 62, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    const VertexMask universe = (VertexMask{1} << n) - 1;
    for (VertexMask e : edges_) {
        if ((e & ~universe) != 0)
            throw std::invalid_argument("edge " + format_set(e) + " has a vertex outside 1.." + std::to_string(n));
        if (popcount(e) != k)
            throw std::invalid_argument("edge " + format_set(e) + " does not have exactly " + std::to_string(k) +
                                        " vertices");
    }
    std::sort(edges_.begin(), edges_.end(), lex_less);
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + format_set(*dup));
}

Hypergraph Hypergraph::from_edge_lists(int n, int k, const std::vector<std::vector<int>>& edges)
{
    std::vector<VertexMask> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
        VertexMask m = 0;
        for (int v : e) {
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (m & vertex_bit(v))
                throw std::invalid_argument("repeated vertex " + std::to_string(v) + " in edge");
            m |= vertex_bit(v);
        }
        masks.push_back(m);
    }
    return Hypergraph(n, k, std::move(masks));
}

bool Hypergraph::contains(VertexMask e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e, lex_less);
}

Hypergraph Hypergraph::with_edge(VertexMask e) const
{
    auto edges = edges_;
    edges.push_back(e);
    return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(VertexMask e) const
{
    auto edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        throw std::invalid_argument(format_set(e) + " is not an edge");
    edges.erase(it);
    return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<VertexMask> edges;
    edges.reserve(edges_.size());
    for (VertexMask e : edges_) {
        VertexMask image = 0;
        for (int v : vertices_of(e))
            image |= vertex_bit(perm[v - 1]);
        edges.push_back(image);
    }
    return Hypergraph(n_, k_, std::move(edges));
}

namespace {

std::vector<int> parse_ints(std::string_view line, int line_no)
{
    std::vector<int> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i == line.size())
            break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
            throw ParseError("line " + std::to_string(line_no) + ": expected integers, got '" + std::string(line) +
                             "'");
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text)
{
    std::optional<std::pair<int, int>> header;
    std::vector<VertexMask> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#')
            continue;
        auto ints = parse_ints(line, line_no);
        if (ints.empty())
            continue;
        if (!header) {
            if (ints.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": header must be 'n k'");
            auto [n, k] = std::pair{ints[0], ints[1]};
            if (k < 2 || k > n || n > max_vertices)
                throw ParseError("line " + std::to_string(line_no) + ": header needs 2 <= k <= n <= 62");
            header = {n, k};
            continue;
        }
        auto [n, k] = *header;
        if (static_cast<int>(ints.size()) != k)
            throw ParseError("line " + std::to_string(line_no) + ": edge must have exactly " + std::to_string(k) +
                             " vertices");
        VertexMask m = 0;
        for (int v : ints) {
            if (v < 1 || v > n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
            if (m & vertex_bit(v))
                throw ParseError("line " + std::to_string(line_no) + ": repeated vertex " + std::to_string(v));
            m |= vertex_bit(v);
        }
        if (std::find(edges.begin(), edges.end(), m) != edges.end())
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " + format_set(m));
        edges.push_back(m);
    }
    if (!header)
        throw ParseError("missing header line 'n k'");
    return Hypergraph(header->first, header->second, std::move(edges));
}

std::string serialize(const Hypergraph& h)
{
    std::ostringstream out;
    out << h.n() << ' ' << h.k() << '\n';
    for (VertexMask e : h.edges()) {
        bool first = true;
        for (int v : vertices_of(e)) {
            if (!first)
                out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<VertexMask> non_edges(const Hypergraph& h)
{
    std::vector<VertexMask> out;
    for (VertexMask s : all_subsets(h.n(), h.k()))
        if (!h.contains(s))
            out.push_back(s);
    return out;
}

bool is_surjective(std::span<const int> colors, int t)
{
    if (t < 1 || t > 63)
        return false;
    std::uint64_t seen = 0;
    for (int c : colors) {
        if (c < 1 || c > t)
            return false;
        seen |= std::uint64_t{1} << c;
    }
    return popcount(seen) == t;
}

Coloring::Coloring(std::vector<int> colors)
    : Coloring(colors, colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()))
{
}

Coloring::Coloring(std::vector<int> colors, int t)
    : colors_(std::move(colors)), t_(t)
{
    if (colors_.empty() || static_cast<int>(colors_.size()) > max_vertices)
        throw std::invalid_argument("coloring needs between 1 and 62 vertices");
    if (!is_surjective(colors_, t_))
        throw std::invalid_argument("coloring is not surjective onto 1.." + std::to_string(t_));
}

namespace {

Coloring restricted_growth(const Coloring& c)
{
    std::vector<int> rename(static_cast<std::size_t>(c.t()) + 1, 0);
    std::vector<int> out;
    out.reserve(c.colors().size());
    int next = 0;
    for (int color : c.colors()) {
        if (rename[color] == 0)
            rename[color] = ++next;
        out.push_back(rename[color]);
    }
    return Coloring(std::move(out), c.t());
}

} // namespace

ColoringClass::ColoringClass(const Coloring& c)
    : canonical_(restricted_growth(c))
{
}

std::vector<VertexMask> rainbow_edges(const Hypergraph& h, const Coloring& c)
{
    if (c.n() != h.n())
        throw std::invalid_argument("coloring length does not match vertex count");
    std::vector<VertexMask> out;
    for (VertexMask e : h.edges())
        if (is_rainbow(e, c.colors(), h.k()))
            out.push_back(e);
    return out;
}

ColoringClassGenerator::ColoringClassGenerator(int n, int t)
    : n_(n), t_(t)
{
    if (t < 1 || t > n)
        done_ = true;
}

bool ColoringClassGenerator::advance()
{
    if (!started_) {
        started_ = true;
        // lexicographically smallest: 1,1,...,1,2,3,...,t
        rgs_.assign(static_cast<std::size_t>(n_), 1);
        for (int i = 0; i < t_; ++i)
            rgs_[static_cast<std::size_t>(n_ - t_ + i)] = i + 1;
        return true;
    }
    std::vector<int> prefix_max(static_cast<std::size_t>(n_));
    int m = 0;
    for (int i = 0; i < n_; ++i) {
        prefix_max[static_cast<std::size_t>(i)] = m;
        m = std::max(m, rgs_[static_cast<std::size_t>(i)]);
    }
    for (int i = n_ - 1; i >= 1; --i) {
        const int before = prefix_max[static_cast<std::size_t>(i)];
        const int candidate = rgs_[static_cast<std::size_t>(i)] + 1;
        if (candidate > before + 1 || candidate > t_)
            continue;
        const int new_max = std::max(before, candidate);
        const int remaining = n_ - i - 1;
        if (remaining < t_ - new_max)
            continue;
        rgs_[static_cast<std::size_t>(i)] = candidate;
        const int fill_ones = remaining - (t_ - new_max);
        for (int j = 0; j < fill_ones; ++j)
            rgs_[static_cast<std::size_t>(i + 1 + j)] = 1;
        for (int j = 0; j < t_ - new_max; ++j)
            rgs_[static_cast<std::size_t>(i + 1 + fill_ones + j)] = new_max + 1 + j;
        return true;
    }
    return false;
}

std::optional<ColoringClass> ColoringClassGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return ColoringClass(Coloring(rgs_, t_));
}

void for_each_coloring_class(int n, int t, const std::function<bool(const ColoringClass&)>& fn)
{
    ColoringClassGenerator gen(n, t);
    while (auto c = gen.next())
        if (!fn(*c))
            return;
}

std::vector<ColoringClass> enumerate_colorings(int n, int t)
{
    std::vector<ColoringClass> out;
    for_each_coloring_class(n, t, [&](const ColoringClass& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

} // namespace hforest

#include <hforest/search.hpp>

#include <hforest/forest.hpp>
#include <hforest/tightness.hpp>

#include <algorithm>
#include <numeric>
#include <thread>

namespace hforest {

void check_search_limits(int n, int k)
{
    if (k < 2 || k > n || n > max_search_vertices)
        throw std::invalid_argument("search needs 2 <= k <= n <= " + std::to_string(max_search_vertices));
    if (binomial(n, k) > static_cast<std::uint64_t>(max_edge_slots))
        throw std::invalid_argument("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                    std::to_string(binomial(n, k)) + " edge slots exceeds the exhaustive limit of " +
                                    std::to_string(max_edge_slots));
}

EdgeIndex::EdgeIndex(int n, int k)
    : n_(n), k_(k), subsets_(all_subsets(n, k))
{
    if (n > 8 || subsets_.size() > 64)
        throw std::invalid_argument("edge index needs n <= 8 and C(n,k) <= 64");
    index_.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < subsets_.size(); ++i)
        index_[subsets_[i]] = static_cast<int>(i);
}

int EdgeIndex::index_of(VertexMask e) const
{
    if (e >= index_.size() || index_[e] < 0)
        throw std::invalid_argument(format_set(e) + " is not a " + std::to_string(k_) + "-subset of 1.." +
                                    std::to_string(n_));
    return index_[e];
}

EdgeSet EdgeIndex::edge_set(const Hypergraph& h) const
{
    if (h.n() != n_ || h.k() != k_)
        throw std::invalid_argument("hypergraph size does not match edge index");
    EdgeSet s = 0;
    for (VertexMask e : h.edges())
        s |= EdgeSet{1} << index_of(e);
    return s;
}

Hypergraph EdgeIndex::hypergraph(EdgeSet s) const
{
    std::vector<VertexMask> edges;
    while (s) {
        edges.push_back(subsets_[static_cast<std::size_t>(__builtin_ctzll(s))]);
        s &= s - 1;
    }
    return Hypergraph(n_, k_, std::move(edges));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

VertexMask permute_mask(VertexMask m, const std::vector<int>& perm)
{
    VertexMask out = 0;
    while (m) {
        out |= vertex_bit(perm[static_cast<std::size_t>(__builtin_ctzll(m))]);
        m &= m - 1;
    }
    return out;
}

} // namespace

Canonicalizer::Canonicalizer(int n, int k)
    : index_((check_search_limits(n, k), EdgeIndex(n, k))), chunks_((index_.slots() + 7) / 8), perm_count_(0)
{
    const auto perms = all_permutations(n);
    perm_count_ = perms.size();
    const std::size_t per_perm = static_cast<std::size_t>(chunks_) * 256;
    tables_.assign(perm_count_ * per_perm, 0);
    const int slots = index_.slots();
    for (std::size_t p = 0; p < perm_count_; ++p) {
        std::vector<std::uint32_t> slot_image(static_cast<std::size_t>(slots));
        for (int i = 0; i < slots; ++i)
            slot_image[static_cast<std::size_t>(i)] =
                std::uint32_t{1} << index_.index_of(permute_mask(index_.subsets()[static_cast<std::size_t>(i)], perms[p]));
        for (int c = 0; c < chunks_; ++c) {
            std::uint32_t* table = &tables_[p * per_perm + static_cast<std::size_t>(c) * 256];
            for (unsigned byte = 1; byte < 256; ++byte) {
                const int low = __builtin_ctz(byte);
                const int slot = c * 8 + low;
                const std::uint32_t bit = slot < slots ? slot_image[static_cast<std::size_t>(slot)] : 0;
                table[byte] = table[byte & (byte - 1)] | bit;
            }
        }
    }
}

EdgeSet Canonicalizer::image(std::size_t perm, EdgeSet s) const
{
    const std::uint32_t* base = &tables_[perm * static_cast<std::size_t>(chunks_) * 256];
    std::uint32_t out = 0;
    for (int c = 0; c < chunks_; ++c, s >>= 8)
        out |= base[static_cast<std::size_t>(c) * 256 + (s & 0xff)];
    return out;
}

EdgeSet Canonicalizer::canonical(EdgeSet s) const
{
    EdgeSet best = s;
    for (std::size_t p = 0; p < perm_count_; ++p)
        best = std::min(best, image(p, s));
    return best;
}

bool Canonicalizer::is_canonical(EdgeSet s) const
{
    for (std::size_t p = 0; p < perm_count_; ++p)
        if (image(p, s) < s)
            return false;
    return true;
}

EdgeSet canonical_form(const Hypergraph& h)
{
    EdgeIndex index(h.n(), h.k());
    EdgeSet best = index.edge_set(h);
    for (const auto& perm : all_permutations(h.n())) {
        EdgeSet s = 0;
        for (VertexMask e : h.edges())
            s |= EdgeSet{1} << index.index_of(permute_mask(e, perm));
        best = std::min(best, s);
    }
    return best;
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b)
{
    if (a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::pair<EdgeSet, EdgeSet> shard_range(int slots, const Shard& shard)
{
    if (shard.count == 0 || shard.index >= shard.count)
        throw std::invalid_argument("shard index must be below shard count");
    const EdgeSet total = EdgeSet{1} << slots;
    if (shard.count > total)
        throw std::invalid_argument("more shards than edge sets");
    // total <= 2^24, so the products fit comfortably
    return {shard.index * total / shard.count, (shard.index + 1) * total / shard.count};
}

void for_each_hypergraph(int n, int k, bool modulo_iso, const std::function<bool(const Hypergraph&)>& fn)
{
    check_search_limits(n, k);
    std::optional<Canonicalizer> canon;
    if (modulo_iso)
        canon.emplace(n, k);
    EdgeIndex index(n, k);
    const EdgeSet total = EdgeSet{1} << index.slots();
    for (EdgeSet s = 0; s < total; ++s) {
        if (canon && !canon->is_canonical(s))
            continue;
        if (!fn(index.hypergraph(s)))
            return;
    }
}

std::vector<Hypergraph> enumerate_hypergraphs(int n, int k, bool modulo_iso)
{
    std::vector<Hypergraph> out;
    for_each_hypergraph(n, k, modulo_iso, [&](const Hypergraph& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

std::string_view to_string(SearchMode mode)
{
    switch (mode) {
    case SearchMode::saturated_not_tight:
        return "saturated-not-tight";
    case SearchMode::all_saturated_forests:
        return "all-saturated-forests";
    case SearchMode::all_forests:
        return "all-forests";
    }
    return "?";
}

SearchMode parse_search_mode(std::string_view name)
{
    for (auto m : {SearchMode::saturated_not_tight, SearchMode::all_saturated_forests, SearchMode::all_forests})
        if (to_string(m) == name)
            return m;
    throw std::invalid_argument("unknown search mode '" + std::string(name) + "'");
}

bool matches_mode(const Hypergraph& h, SearchMode mode)
{
    if (h.empty() || !lovasz_bound_ok(h) || !is_k_forest(h))
        return false;
    switch (mode) {
    case SearchMode::all_forests:
        return true;
    case SearchMode::all_saturated_forests:
        return is_saturated(h);
    case SearchMode::saturated_not_tight:
        return !is_tight(h) && is_saturated(h);
    }
    return false;
}

bool matches_mode_naive(const Hypergraph& h, SearchMode mode)
{
    if (h.empty())
        return false;
    const bool forest = check_forest(h).is_forest;
    const bool saturated = forest && check_saturated(h).saturated;
    const HcResult hc = heterochromatic_number(h);
    const bool tight = hc.hc == h.k();
    switch (mode) {
    case SearchMode::all_forests:
        return forest;
    case SearchMode::all_saturated_forests:
        return saturated;
    case SearchMode::saturated_not_tight:
        return saturated && !tight;
    }
    return false;
}

namespace {

struct RawHit {
    EdgeSet edge_set;
    EdgeSet canonical;
};

void scan(const SearchTask& task, const EdgeIndex& index, const Canonicalizer* canon, EdgeSet begin, EdgeSet end,
          std::vector<RawHit>& hits)
{
    const std::uint64_t bound = binomial(task.n - 1, task.k - 1);
    for (EdgeSet s = begin; s < end; ++s) {
        if (s == 0 || static_cast<std::uint64_t>(popcount(s)) > bound)
            continue;
        if (canon && !canon->is_canonical(s))
            continue;
        if (matches_mode(index.hypergraph(s), task.mode))
            hits.push_back({s, canon ? s : EdgeSet{0}});
    }
}

} // namespace

std::vector<SearchHit> run_search(const SearchTask& task, unsigned jobs)
{
    check_search_limits(task.n, task.k);
    Canonicalizer canon(task.n, task.k);
    const EdgeIndex& index = canon.index();
    auto [begin, end] = shard_range(index.slots(), task.shard.value_or(Shard{}));

    jobs = std::max(1u, jobs);
    std::vector<std::vector<RawHit>> parts(jobs);
    const Canonicalizer* iso = task.modulo_iso ? &canon : nullptr;
    if (jobs == 1) {
        scan(task, index, iso, begin, end, parts[0]);
    } else {
        std::vector<std::jthread> workers;
        const EdgeSet span = end - begin;
        for (unsigned j = 0; j < jobs; ++j) {
            EdgeSet lo = begin + span * j / jobs;
            EdgeSet hi = begin + span * (j + 1) / jobs;
            workers.emplace_back([&, lo, hi, j] { scan(task, index, iso, lo, hi, parts[j]); });
        }
    }

    std::vector<RawHit> merged;
    for (auto& p : parts)
        merged.insert(merged.end(), p.begin(), p.end());
    for (auto& h : merged)
        if (!task.modulo_iso)
            h.canonical = canon.canonical(h.edge_set);
    std::sort(merged.begin(), merged.end(), [](const RawHit& a, const RawHit& b) {
        return std::pair{a.canonical, a.edge_set} < std::pair{b.canonical, b.edge_set};
    });

    std::vector<SearchHit> out;
    out.reserve(merged.size());
    for (const auto& h : merged) {
        Hypergraph hg = index.hypergraph(h.edge_set);
        out.push_back(SearchHit{hg, h.edge_set, h.canonical, build_report(hg)});
    }
    return out;
}

} // namespace hforest

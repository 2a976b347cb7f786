#pragma once

#include <hforest/core.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace hforest::detail {

// Backtracking over restricted-growth colorings of vertices 1..n with exactly
// `colors` colors. Edges in `forbidden` may not be rainbow; `required`, when
// set, must be. Each edge is checked as soon as its largest vertex is colored,
// so a branch dies the moment a constraint is decided against it.
class ColoringSearch {
public:
    ColoringSearch(int n, int k, int colors, std::span<const VertexMask> forbidden,
                   std::optional<VertexMask> required = std::nullopt)
        : n_(n), k_(k), t_(colors), closing_(static_cast<std::size_t>(n)), required_close_(-1),
          required_(required.value_or(0)), colors_(static_cast<std::size_t>(n), 0)
    {
        for (VertexMask e : forbidden)
            closing_[static_cast<std::size_t>(63 - __builtin_clzll(e))].push_back(e);
        if (required)
            required_close_ = 63 - __builtin_clzll(*required);
    }

    // Visits solutions in lexicographic order; fn returns false to stop.
    // Returns false iff stopped early.
    template <typename Fn>
    bool run(Fn&& fn)
    {
        if (t_ < 1 || t_ > n_)
            return true;
        if (required_ != 0 && t_ < k_)
            return true;
        return extend(0, 0, fn);
    }

    std::optional<std::vector<int>> first()
    {
        std::optional<std::vector<int>> found;
        run([&](const std::vector<int>& c) {
            found = c;
            return false;
        });
        return found;
    }

private:
    template <typename Fn>
    bool extend(int v, int used, Fn& fn)
    {
        if (v == n_)
            return used == t_ ? static_cast<bool>(fn(colors_)) : true;
        const int remaining_after = n_ - v - 1;
        const int top = std::min(used + 1, t_);
        for (int c = 1; c <= top; ++c) {
            const int now_used = std::max(used, c);
            if (remaining_after < t_ - now_used)
                continue;
            colors_[static_cast<std::size_t>(v)] = c;
            if (!consistent(v))
                continue;
            if (!extend(v + 1, now_used, fn))
                return false;
        }
        colors_[static_cast<std::size_t>(v)] = 0;
        return true;
    }

    bool consistent(int v) const
    {
        for (VertexMask e : closing_[static_cast<std::size_t>(v)])
            if (is_rainbow(e, colors_, k_))
                return false;
        if (v == required_close_ && !is_rainbow(required_, colors_, k_))
            return false;
        return true;
    }

    int n_;
    int k_;
    int t_;
    std::vector<std::vector<VertexMask>> closing_;
    int required_close_;
    VertexMask required_;
    std::vector<int> colors_;
};

} // namespace hforest::detail

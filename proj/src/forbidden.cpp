#include "sek/forbidden.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace sek {

namespace {

using Table = std::vector<std::uint64_t>;

// Walks a DP table back from (mask, end): table[m] holds every vertex that can end a path
// covering exactly m. Returns the path from its start to `end`.
std::vector<int> trace_back(const Graph& g, const Table& ends, std::uint64_t mask, int end) {
    std::vector<int> seq{end};
    int cur = end;
    while (std::popcount(mask) > 1) {
        const std::uint64_t prev = mask & ~(std::uint64_t{1} << cur);
        const std::uint64_t cand = ends[prev] & g.rows()[cur];
        cur = std::countr_zero(cand);
        seq.push_back(cur);
        mask = prev;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

std::optional<std::vector<int>> path_dp(const Graph& g, int t, VertexSet s) {
    const int n = g.order();
    Table ends(std::size_t{1} << n, 0);
    for (int v : s) ends[std::uint64_t{1} << v] = std::uint64_t{1} << v;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const std::uint64_t e = ends[mask];
        if (e == 0) continue;
        const int pc = std::popcount(mask);
        if (pc >= t) continue;
        for (int v : VertexSet(e)) {
            for (int w : VertexSet(g.rows()[v] & ~mask)) {
                const std::uint64_t next = mask | (std::uint64_t{1} << w);
                ends[next] |= std::uint64_t{1} << w;
                if (pc + 1 == t && s.contains(w)) return trace_back(g, ends, next, w);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> cycle_dp(const Graph& g, int t) {
    const int n = g.order();
    Table ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[std::uint64_t{1} << v] = std::uint64_t{1} << v;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const std::uint64_t e = ends[mask];
        if (e == 0) continue;
        const int pc = std::popcount(mask);
        if (pc >= t) continue;
        // The start is pinned to the smallest vertex of the subset.
        const int start = std::countr_zero(mask);
        const std::uint64_t above = ~((std::uint64_t{2} << start) - 1);
        for (int v : VertexSet(e)) {
            for (int w : VertexSet(g.rows()[v] & ~mask & above)) {
                const std::uint64_t next = mask | (std::uint64_t{1} << w);
                ends[next] |= std::uint64_t{1} << w;
                if (pc + 1 == t && g.adjacent(w, start)) return trace_back(g, ends, next, w);
            }
        }
    }
    return std::nullopt;
}

// Depth-first fallback for orders where a 2^n table is too large.
std::optional<std::vector<int>> search_dfs(const Graph& g, int t, VertexSet starts, VertexSet finals,
                                           bool close_cycle) {
    std::vector<int> seq;
    VertexSet pool;
    std::function<bool(int, VertexSet)> extend = [&](int v, VertexSet used) {
        if (static_cast<int>(seq.size()) == t) {
            return close_cycle ? g.adjacent(v, seq.front()) : finals.contains(v);
        }
        for (int w : g.neighbors(v) & (pool - used)) {
            seq.push_back(w);
            if (extend(w, used.with(w))) return true;
            seq.pop_back();
        }
        return false;
    };
    for (int v : starts) {
        seq.assign(1, v);
        pool = close_cycle ? g.vertices() - VertexSet::first(v + 1) : g.vertices();
        if (extend(v, VertexSet::single(v))) return seq;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_path(const Graph& g, const PathQuery& query) {
    const int t = query.order;
    if (t < 1) throw std::invalid_argument("path order must be at least 1");
    const VertexSet s = query.endpoint_set.value_or(g.vertices());
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("endpoint set not contained in graph");
    if (t > g.order() || s.empty()) return std::nullopt;
    if (t == 1) return std::vector<int>{s.min()};
    if (g.order() <= kSubsetDpLimit) return path_dp(g, t, s);
    return search_dfs(g, t, s, s, false);
}

std::optional<std::vector<int>> find_cycle(const Graph& g, int t) {
    if (t < 3) throw std::invalid_argument("cycle order must be at least 3");
    if (t > g.order()) return std::nullopt;
    if (g.order() <= kSubsetDpLimit) return cycle_dp(g, t);
    return search_dfs(g, t, g.vertices(), g.vertices(), true);
}

bool has_path(const Graph& g, int t) { return find_path(g, {t, std::nullopt}).has_value(); }

bool has_path(const Graph& g, const PathQuery& query) { return find_path(g, query).has_value(); }

bool has_path_with_endpoints_in(const Graph& g, int t, VertexSet s) {
    return find_path(g, {t, s}).has_value();
}

bool has_cycle(const Graph& g, int t) { return find_cycle(g, t).has_value(); }

int longest_path_order(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("longest path of the empty graph is undefined");
    if (n > kSubsetDpLimit) {
        int best = 1;
        while (best < n && has_path(g, best + 1)) ++best;
        return best;
    }
    Table ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[std::uint64_t{1} << v] = std::uint64_t{1} << v;
    int best = 1;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const std::uint64_t e = ends[mask];
        if (e == 0) continue;
        best = std::max(best, std::popcount(mask));
        for (int v : VertexSet(e)) {
            for (int w : VertexSet(g.rows()[v] & ~mask)) ends[mask | (std::uint64_t{1} << w)] |= std::uint64_t{1} << w;
        }
    }
    return best;
}

}  // namespace sek

#include "sek/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace sek {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxOrder) + "]");
    }
}

}  // namespace

Graph::Graph(int n, std::vector<std::uint64_t> rows) : n_(n), adj_(std::move(rows)) {
    int twice = 0;
    for (auto r : adj_) twice += std::popcount(r);
    edges_ = twice / 2;
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n) {
        throw std::invalid_argument("row count does not match graph order");
    }
    const auto all = VertexSet::first(n).bits();
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~all) throw std::invalid_argument("adjacency bit beyond graph order");
        if ((rows[u] >> u) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        for (int v : VertexSet(rows[u])) {
            if (!((rows[v] >> u) & 1U)) throw std::invalid_argument("asymmetric adjacency");
        }
    }
    return Graph(n, std::move(rows));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u) {
        for (int v : VertexSet(adj_[u] & ~VertexSet::first(u + 1).bits())) out.emplace_back(u, v);
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int u = 0; u < n_; ++u) d[u] = degree(u);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
    check_order(n);
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return Graph::from_rows(n, std::move(rows));
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph empty_graph(int n) {
    check_order(n);
    return Graph::from_rows(n, std::vector<std::uint64_t>(n, 0));
}

Graph complete_graph(int n) {
    check_order(n);
    std::vector<std::uint64_t> rows(n);
    for (int u = 0; u < n; ++u) rows[u] = VertexSet::first(n).without(u).bits();
    return Graph::from_rows(n, std::move(rows));
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative side size");
    check_order(a + b);
    const auto x = VertexSet::first(a);
    const auto y = VertexSet::first(a + b) - x;
    std::vector<std::uint64_t> rows(a + b);
    for (int u = 0; u < a + b; ++u) rows[u] = (u < a ? y : x).bits();
    return Graph::from_rows(a + b, std::move(rows));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    check_order(n);
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    for (auto r : h.rows()) rows.push_back(r << g.order());
    return Graph::from_rows(n, std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::uint64_t seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || ((seen >> p) & 1U)) throw std::invalid_argument("not a permutation");
        seen |= std::uint64_t{1} << p;
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) rows[perm[u]] |= std::uint64_t{1} << perm[v];
    }
    return Graph::from_rows(n, std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set not contained in graph");
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for (int v : s) index[v] = next++;
    std::vector<std::uint64_t> rows(next, 0);
    for (int v : s) {
        for (int w : g.neighbors(v) & s) rows[index[v]] |= std::uint64_t{1} << index[w];
    }
    return Graph::from_rows(next, std::move(rows));
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    return induced_subgraph(g, g.vertices().without(v));
}

Graph crossing_subgraph(const Graph& g, VertexSet x) {
    const auto all = g.vertices();
    const auto y = all - x;
    std::vector<std::uint64_t> rows(g.order());
    for (int u = 0; u < g.order(); ++u) {
        rows[u] = (g.neighbors(u) & (x.contains(u) ? y : x & all)).bits();
    }
    return Graph::from_rows(g.order(), std::move(rows));
}

VertexSet neighborhood_shell(const Graph& g, int u, int d) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex out of range");
    if (d < 0) throw std::invalid_argument("negative distance");
    VertexSet seen = VertexSet::single(u);
    VertexSet layer = seen;
    for (int step = 0; step < d && !layer.empty(); ++step) {
        VertexSet next;
        for (int v : layer) next = next | g.neighbors(v);
        layer = next - seen;
        seen = seen | layer;
    }
    return layer;
}

int cross_edges(const Graph& g, VertexSet s, VertexSet t) {
    if (!s.disjoint(t)) throw std::invalid_argument("cross_edges needs disjoint vertex sets");
    int count = 0;
    for (int v : s & g.vertices()) count += (g.neighbors(v) & t).size();
    return count;
}

BipartitionResult bipartition_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<int> queue;
    queue.reserve(n);

    auto root_path = [&](int v) {
        std::vector<int> p;
        for (; v != -1; v = parent[v]) p.push_back(v);
        return p;  // v, ..., root
    };

    for (int root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    // root ... v, w ... root closes an odd walk.
                    auto pv = root_path(v);
                    auto pw = root_path(w);
                    std::vector<int> walk(pv.rbegin(), pv.rend());
                    walk.insert(walk.end(), pw.begin(), pw.end() - 1);
                    return {std::nullopt, std::move(walk)};
                }
            }
        }
    }

    Bipartition bp;
    for (int v = 0; v < n; ++v) {
        if (colour[v] == 0) bp.x_side = bp.x_side.with(v);
        else bp.y_side = bp.y_side.with(v);
    }
    return {bp, {}};
}

bool is_bipartite(const Graph& g) { return bipartition_of(g).bipartite(); }

bool is_valid_bipartition(const Graph& g, const Bipartition& bp) {
    if (!bp.x_side.disjoint(bp.y_side) || (bp.x_side | bp.y_side) != g.vertices()) return false;
    for (int v : bp.x_side) {
        if (!(g.neighbors(v) & bp.x_side).empty()) return false;
    }
    for (int v : bp.y_side) {
        if (!(g.neighbors(v) & bp.y_side).empty()) return false;
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::single(remaining.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next = next | g.neighbors(v);
            frontier = next - comp;
            comp = comp | frontier;
        }
        out.push_back(comp);
        remaining = remaining - comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace sek

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "sek/enumerate.hpp"
#include "sek/graph6.hpp"

namespace sek {

namespace detail {
CanonicalForm canonical_form_unchecked(const Graph& g, std::span<const int> colours);
}

namespace {

// Generation below this order is done up front; the subtrees hanging off these graphs are
// the units of parallel work.
constexpr int kSplitOrder = 6;

struct Node {
    Graph graph;  // canonical
    std::string code;
};

// Children of a canonical parent under canonical augmentation. A child P + v is kept iff deleting
// the vertex placed last by its canonical labelling gives a graph isomorphic to P; isomorphic
// children of the same parent collapse in the map.
std::vector<Node> children(const Node& parent) {
    const Graph& p = parent.graph;
    const int m = p.order();
    const auto parent_degrees = p.degree_sequence();
    std::map<std::string, Graph> kept;
    std::vector<std::uint64_t> rows(m + 1);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        for (int v = 0; v < m; ++v) rows[v] = p.rows()[v] | (((s >> v) & 1U) << m);
        rows[m] = s;
        const Graph child = Graph::from_rows(m + 1, rows);
        auto form = detail::canonical_form_unchecked(child, {});
        const int last = static_cast<int>(
            std::find(form.position.begin(), form.position.end(), m) - form.position.begin());
        bool accept = last == m;
        if (!accept) {
            const Graph rest = delete_vertex(child, last);
            accept = rest.degree_sequence() == parent_degrees &&
                     detail::canonical_form_unchecked(rest, {}).code.bytes == parent.code;
        }
        if (accept) kept.emplace(std::move(form.code.bytes), std::move(form.graph));
    }
    std::vector<Node> out;
    out.reserve(kept.size());
    for (auto& [code, g] : kept) out.push_back({std::move(g), code});
    return out;
}

void grow(const Node& node, int target, const std::function<void(const Graph&)>& visit) {
    if (node.graph.order() == target) {
        visit(node.graph);
        return;
    }
    for (const auto& child : children(node)) grow(child, target, visit);
}

void check_enumeration_order(int n) {
    if (n < 0 || n > kMaxEnumerationOrder) {
        throw std::invalid_argument("exhaustive enumeration supports orders 0.." +
                                    std::to_string(kMaxEnumerationOrder));
    }
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& visit, int jobs) {
    check_enumeration_order(n);
    const Node root{Graph(), to_graph6(Graph())};
    const int split = std::min(n, kSplitOrder);
    std::vector<Node> frontier;
    grow(root, split, [&](const Graph& g) { frontier.push_back({g, to_graph6(g)}); });

    if (jobs <= 1 || frontier.size() < 2) {
        for (const auto& node : frontier) grow(node, n, visit);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
        workers.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < frontier.size();) grow(frontier[i], n, visit);
        });
    }
    for (auto& w : workers) w.join();
}

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter, int jobs) {
    std::mutex mu;
    std::vector<std::pair<std::string, Graph>> found;
    for_each_graph(
        n,
        [&](const Graph& g) {
            if (filter && !filter(g)) return;
            auto code = to_graph6(g);
            std::lock_guard lock(mu);
            found.emplace_back(std::move(code), g);
        },
        jobs);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

std::vector<BipartiteGraph> enumerate_bipartite(int x_size, int y_size, const BipartiteFilter& filter) {
    if (x_size < 0 || y_size < 0) throw std::invalid_argument("negative side size");
    if (x_size * y_size > kMaxBipartiteCells || x_size + y_size > kMaxOrder) {
        throw std::invalid_argument("bipartite enumeration needs x_size * y_size <= " +
                                    std::to_string(kMaxBipartiteCells));
    }
    const int n = x_size + y_size;
    std::vector<int> sides(n, 1);
    std::fill(sides.begin(), sides.begin() + x_size, 0);
    std::vector<int> swapped(n);
    std::transform(sides.begin(), sides.end(), swapped.begin(), [](int c) { return 1 - c; });

    // A side-labelled bipartite graph is a multiset of y_size neighbourhoods in X; walk the
    // non-decreasing sequences of masks and deduplicate by coloured canonical code.
    std::map<std::string, Graph> classes;
    const std::uint64_t masks = std::uint64_t{1} << x_size;
    std::vector<std::uint64_t> nbhd(y_size, 0);
    std::vector<std::uint64_t> rows(n);
    while (true) {
        std::fill(rows.begin(), rows.end(), 0);
        for (int j = 0; j < y_size; ++j) {
            const int y = x_size + j;
            rows[y] = nbhd[j];
            for (int x : VertexSet(nbhd[j])) rows[x] |= std::uint64_t{1} << y;
        }
        const Graph g = Graph::from_rows(n, rows);
        auto form = detail::canonical_form_unchecked(g, sides);
        if (x_size == y_size) {
            auto other = detail::canonical_form_unchecked(g, swapped);
            if (other.code < form.code) form = std::move(other);
        }
        classes.emplace(std::move(form.code.bytes), std::move(form.graph));

        int j = y_size - 1;
        while (j >= 0 && nbhd[j] + 1 == masks) --j;
        if (j < 0) break;
        ++nbhd[j];
        for (int i = j + 1; i < y_size; ++i) nbhd[i] = nbhd[j];
    }

    const Bipartition bp{VertexSet::first(x_size), VertexSet::first(n) - VertexSet::first(x_size)};
    std::vector<BipartiteGraph> out;
    for (auto& [code, g] : classes) {
        if (filter && !filter(g, bp)) continue;
        out.push_back({std::move(g), bp});
    }
    return out;
}

}  // namespace sek

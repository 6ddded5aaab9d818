#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sek/graph.hpp"

namespace sek {

// Largest order accepted by the exact canonical labelling search.
inline constexpr int kMaxCanonicalOrder = 16;
// Largest order for exhaustive generation of all graphs.
inline constexpr int kMaxEnumerationOrder = 9;
// Largest x_size * y_size for bipartite generation.
inline constexpr int kMaxBipartiteCells = 25;

// graph6 of the canonically relabelled graph: equal iff isomorphic.
struct CanonicalCode {
    std::string bytes;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
    CanonicalCode code;
    // position[v] is the canonical label of vertex v.
    std::vector<int> position;
    Graph graph;  // relabel(g, position)
};

// colours, when given, fix an ordered vertex partition that isomorphisms must preserve
// (colour classes ordered by colour value).
CanonicalForm canonical_form(const Graph& g, std::span<const int> colours = {});
CanonicalCode canonical_code(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

using GraphFilter = std::function<bool(const Graph&)>;

// One canonical representative per isomorphism class of graphs of order n that satisfy the filter,
// sorted by canonical code. Orderly generation by canonical augmentation; jobs > 1 spreads the
// generation subtrees over threads without changing the result.
std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter = {}, int jobs = 1);
// Visits every class of order n (no sorting, generation order). The visitor may be called
// concurrently from `jobs` threads.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit, int jobs = 1);

struct BipartiteGraph {
    Graph graph;
    Bipartition sides;  // x_side = {0..x-1}
};

using BipartiteFilter = std::function<bool(const Graph&, const Bipartition&)>;

// Bipartite graphs with a distinguished bipartition of sizes (x_size, y_size), one per class under
// side-preserving isomorphism (side swaps allowed only when x_size == y_size), sorted by code.
std::vector<BipartiteGraph> enumerate_bipartite(int x_size, int y_size, const BipartiteFilter& filter = {});

}  // namespace sek

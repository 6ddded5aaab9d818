#pragma once

#include <optional>
#include <vector>

#include "sek/graph.hpp"

namespace sek {

// A path on `order` vertices, optionally with both endpoints required to lie in endpoint_set.
struct PathQuery {
    int order = 1;
    std::optional<VertexSet> endpoint_set;
};

// Subgraph (not induced) containment of P_t / C_t. Exact: subset dynamic programming for
// n <= kSubsetDpLimit, depth-first search beyond.
inline constexpr int kSubsetDpLimit = 22;

bool has_path(const Graph& g, int t);
bool has_path(const Graph& g, const PathQuery& query);
bool has_path_with_endpoints_in(const Graph& g, int t, VertexSet s);
bool has_cycle(const Graph& g, int t);
int longest_path_order(const Graph& g);

// Vertex sequences witnessing the above, when they exist.
std::optional<std::vector<int>> find_path(const Graph& g, const PathQuery& query);
std::optional<std::vector<int>> find_cycle(const Graph& g, int t);

}  // namespace sek

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sek {

// One 64-bit word per adjacency row.
inline constexpr int kMaxOrder = 62;

// Set of vertices of a graph with at most kMaxOrder vertices, stored as a bitmask.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    // {0, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    // Smallest member; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    // The graph of order 0.
    Graph() = default;

    // Validates symmetry, loop-freeness and range; throws std::invalid_argument.
    static Graph from_rows(int n, std::vector<std::uint64_t> rows);

    int order() const { return n_; }
    int size() const { return edges_; }
    VertexSet vertices() const { return VertexSet::first(n_); }
    VertexSet neighbors(int u) const { return VertexSet(adj_[u]); }
    int degree(int u) const { return std::popcount(adj_[u]); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    std::span<const std::uint64_t> rows() const { return adj_; }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // non-increasing

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int n, std::vector<std::uint64_t> rows);

    int n_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct Bipartition {
    VertexSet x_side;
    VertexSet y_side;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Either a two-colouring or a closed walk of odd length proving there is none.
struct BipartitionResult {
    std::optional<Bipartition> sides;
    // v0, v1, ..., vk with vk adjacent to v0 and k+1 odd; empty when bipartite.
    std::vector<int> odd_closed_walk;

    bool bipartite() const { return sides.has_value(); }
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& g, const Graph& h);

// Vertex v of g becomes vertex perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
// Spanning subgraph keeping only the edges that cross (x, V - x).
Graph crossing_subgraph(const Graph& g, VertexSet x);

// N^d(u): vertices at distance exactly d from u.
VertexSet neighborhood_shell(const Graph& g, int u, int d);
int cross_edges(const Graph& g, VertexSet s, VertexSet t);

BipartitionResult bipartition_of(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_valid_bipartition(const Graph& g, const Bipartition& bp);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace sek

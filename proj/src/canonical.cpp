#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sek/enumerate.hpp"
#include "sek/graph6.hpp"

namespace sek {

namespace {

using Cells = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into other cells until the ordered partition is equitable.
// Every choice depends only on cell order and counts, never on vertex labels.
void refine(const Graph& g, Cells& cells) {
    const auto rows = g.rows();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            const std::uint64_t splitter = cells[w];
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const std::uint64_t cell = cells[i];
                if (std::popcount(cell) == 1) continue;
                std::uint64_t buckets[kMaxOrder + 1] = {};
                int lo = kMaxOrder + 1;
                int hi = -1;
                for (int v : VertexSet(cell)) {
                    const int c = std::popcount(rows[v] & splitter);
                    buckets[c] |= std::uint64_t{1} << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) continue;
                Cells pieces;
                for (int c = lo; c <= hi; ++c) {
                    if (buckets[c]) pieces.push_back(buckets[c]);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

class LabellingSearch {
public:
    explicit LabellingSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run(Cells cells) {
        std::vector<int> fixed;
        descend(std::move(cells), fixed);

        CanonicalForm out;
        out.position.assign(n_, 0);
        for (int p = 0; p < n_; ++p) out.position[best_order_[p]] = p;
        out.graph = Graph::from_rows(n_, best_rows_);
        out.code.bytes = to_graph6(out.graph);
        return out;
    }

private:
    void descend(Cells cells, std::vector<int>& fixed) {
        refine(g_, cells);
        auto target = std::find_if(cells.begin(), cells.end(),
                                   [](std::uint64_t c) { return std::popcount(c) > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const auto at = target - cells.begin();
        const std::uint64_t cell = *target;
        std::uint64_t explored = 0;
        for (int v : VertexSet(cell)) {
            if (explored && equivalent_to_explored(v, explored, fixed)) continue;
            Cells child = cells;
            child[at] = cell & ~(std::uint64_t{1} << v);
            child.insert(child.begin() + at, std::uint64_t{1} << v);
            fixed.push_back(v);
            descend(std::move(child), fixed);
            fixed.pop_back();
            explored |= std::uint64_t{1} << v;
        }
    }

    // True when an automorphism found so far, fixing every individualised vertex, maps v into
    // an explored sibling. Such a subtree is the image of one already searched.
    bool equivalent_to_explored(int v, std::uint64_t explored, const std::vector<int>& fixed) const {
        std::vector<int> root(n_);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            if (!std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; })) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x);
                const int b = find(gamma[x]);
                if (a != b) root[std::max(a, b)] = std::min(a, b);
            }
        }
        if (!any) return false;
        const int rv = find(v);
        for (int u : VertexSet(explored)) {
            if (find(u) == rv) return true;
        }
        return false;
    }

    void leaf(const Cells& cells) {
        std::vector<int> order(n_);
        std::vector<int> pos(n_);
        for (int p = 0; p < n_; ++p) {
            order[p] = std::countr_zero(cells[p]);
            pos[order[p]] = p;
        }
        std::vector<std::uint64_t> rows(n_, 0);
        for (int u = 0; u < n_; ++u) {
            std::uint64_t r = 0;
            for (int v : g_.neighbors(u)) r |= std::uint64_t{1} << pos[v];
            rows[pos[u]] = r;
        }
        if (!have_best_ || rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_order_ = std::move(order);
            have_best_ = true;
        } else if (rows == best_rows_) {
            std::vector<int> gamma(n_);
            bool identity = true;
            for (int p = 0; p < n_; ++p) {
                gamma[order[p]] = best_order_[p];
                identity = identity && order[p] == best_order_[p];
            }
            if (!identity) automorphisms_.push_back(std::move(gamma));
        }
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_rows_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

namespace detail {

// No order limit; enumeration uses it for bipartite graphs beyond kMaxCanonicalOrder.
CanonicalForm canonical_form_unchecked(const Graph& g, std::span<const int> colours) {
    const int n = g.order();
    Cells cells;
    if (colours.empty()) {
        if (n > 0) cells.push_back(VertexSet::first(n).bits());
    } else {
        if (static_cast<int>(colours.size()) != n) throw std::invalid_argument("colour count mismatch");
        std::vector<int> values(colours.begin(), colours.end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int c : values) {
            std::uint64_t cell = 0;
            for (int v = 0; v < n; ++v) {
                if (colours[v] == c) cell |= std::uint64_t{1} << v;
            }
            cells.push_back(cell);
        }
    }
    if (n == 0) {
        CanonicalForm out;
        out.code.bytes = to_graph6(g);
        return out;
    }
    return LabellingSearch(g).run(std::move(cells));
}

}  // namespace detail

CanonicalForm canonical_form(const Graph& g, std::span<const int> colours) {
    if (g.order() > kMaxCanonicalOrder) {
        throw std::invalid_argument("canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) +
                                    " vertices");
    }
    return detail::canonical_form_unchecked(g, colours);
}

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace sek

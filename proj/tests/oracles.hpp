#pragma once

// Brute-force reference implementations. None of them share code with the library beyond the
// Graph value type, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sek/graph.hpp"

namespace oracle {

using sek::Graph;

// Every ordered sequence of t distinct vertices, adjacency checked only once the sequence is complete.
template <typename Visit>
bool any_sequence(int n, int t, Visit visit) {
    std::vector<int> seq;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(seq.size()) == t) return visit(seq);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            seq.push_back(v);
            const bool hit = self(self);
            seq.pop_back();
            used[v] = false;
            if (hit) return true;
        }
        return false;
    };
    return rec(rec);
}

inline bool consecutive_adjacent(const Graph& g, const std::vector<int>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!g.adjacent(seq[i - 1], seq[i])) return false;
    }
    return true;
}

inline bool has_path(const Graph& g, int t, std::optional<std::uint64_t> ends = std::nullopt) {
    if (t > g.order()) return false;
    return any_sequence(g.order(), t, [&](const std::vector<int>& s) {
        if (ends && !(((*ends >> s.front()) & 1U) && ((*ends >> s.back()) & 1U))) return false;
        return consecutive_adjacent(g, s);
    });
}

inline bool has_cycle(const Graph& g, int t) {
    if (t < 3 || t > g.order()) return false;
    return any_sequence(g.order(), t, [&](const std::vector<int>& s) {
        return consecutive_adjacent(g, s) && g.adjacent(s.back(), s.front());
    });
}

// ends[a] has bit b set iff some P_t runs from a to b; one full enumeration answers every endpoint set.
inline std::vector<std::uint64_t> path_ends(const Graph& g, int t) {
    std::vector<std::uint64_t> ends(g.order(), 0);
    if (t > g.order()) return ends;
    any_sequence(g.order(), t, [&](const std::vector<int>& s) {
        if (consecutive_adjacent(g, s)) ends[s.front()] |= std::uint64_t{1} << s.back();
        return false;
    });
    return ends;
}

inline bool ends_within(const std::vector<std::uint64_t>& ends, std::uint64_t s) {
    for (std::size_t a = 0; a < ends.size(); ++a) {
        if (((s >> a) & 1U) && (ends[a] & s)) return true;
    }
    return false;
}

inline int longest_path(const Graph& g) {
    int best = 0;
    for (int t = 1; t <= g.order(); ++t) {
        if (has_path(g, t)) best = t;
    }
    return best;
}

// Upper-triangle bit string of g relabelled by perm (v -> perm[v]).
inline std::uint64_t relabelled_bits(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::uint64_t bits = 0;
    int pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++pos) {
            if (g.adjacent(inv[i], inv[j])) bits |= std::uint64_t{1} << pos;
        }
    }
    return bits;
}

// Minimum bit string over all n! relabellings: equal keys exactly on isomorphic graphs.
inline std::uint64_t min_key(const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, relabelled_bits(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && min_key(a) == min_key(b);
}

inline Graph from_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> edges;
    int pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++pos) {
            if ((bits >> pos) & 1U) edges.emplace_back(i, j);
        }
    }
    return sek::make_graph(n, edges);
}

// Number of isomorphism classes of graphs on n vertices, by labelled enumeration and dedup.
inline std::size_t class_count(int n) {
    std::set<std::uint64_t> keys;
    const int m = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) keys.insert(min_key(from_bits(n, bits)));
    return keys.size();
}

// Classes of bipartite graphs with sides {0..x-1}, {x..x+y-1}, under side-preserving relabellings
// and also side swaps when x == y. A labelled graph is an x*y bit matrix.
inline std::size_t bipartite_class_count(int x, int y) {
    std::vector<int> px(x), py(y);
    std::set<std::vector<bool>> keys;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (x * y)); ++m) {
        auto bit = [&](int i, int j) { return ((m >> (i * y + j)) & 1U) != 0; };
        std::vector<bool> best;
        auto consider = [&](auto cell) {
            std::iota(px.begin(), px.end(), 0);
            do {
                std::iota(py.begin(), py.end(), 0);
                do {
                    std::vector<bool> key;
                    for (int i = 0; i < x; ++i) {
                        for (int j = 0; j < y; ++j) key.push_back(cell(px[i], py[j]));
                    }
                    if (best.empty() || key < best) best = key;
                } while (std::next_permutation(py.begin(), py.end()));
            } while (std::next_permutation(px.begin(), px.end()));
        };
        consider(bit);
        if (x == y) consider([&](int i, int j) { return bit(j, i); });
        keys.insert(best);
    }
    return keys.size();
}

// Exact characteristic polynomial and its real roots.
namespace poly {

using Rational = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rational>;  // coefficient of x^i at index i

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline Poly add(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline Poly scale(Poly a, const Rational& c) {
    for (auto& v : a) v *= c;
    trim(a);
    return a;
}

inline Poly derivative(const Poly& p) {
    Poly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
    trim(out);
    return out;
}

// Quotient and remainder of a / b, b nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly monic(Poly p) {
    trim(p);
    return p.empty() ? p : scale(p, 1 / p.back());
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// det(xI - A) by permutation expansion over integer-polynomial entries.
inline Poly characteristic(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        Poly term{Rational(inversions % 2 ? -1 : 1)};
        for (int i = 0; i < n && !term.empty(); ++i) {
            const int j = perm[i];
            Poly entry = i == j ? Poly{Rational(0), Rational(1)} : Poly{Rational(g.adjacent(i, j) ? -1 : 0)};
            trim(entry);
            term = mul(term, entry);
        }
        total = add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Yun's algorithm: squarefree f_1, f_2, ... with p = prod f_i^i (p monic).
inline std::vector<Poly> squarefree_factors(const Poly& p) {
    std::vector<Poly> out;
    Poly a = monic(p);
    Poly b = gcd(a, derivative(a));
    Poly c = divmod(a, b).first;
    Poly d = add(divmod(derivative(a), b).first, scale(derivative(c), -1));
    while (c.size() > 1) {
        Poly f = gcd(c, d);
        out.push_back(f);
        c = divmod(c, f).first;
        d = add(divmod(d, f).first, scale(derivative(c), -1));
    }
    return out;
}

inline int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    while (chain.back().size() > 1) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        chain.push_back(scale(r, -1));
    }
    return chain;
}

inline int variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Real roots of a squarefree polynomial inside (lo, hi), lo and hi not roots, to within width.
inline void isolate(const Poly& f, const std::vector<Poly>& chain, Rational lo, Rational hi, const Rational& width,
                    std::vector<double>& roots) {
    const int count = variations(chain, lo) - variations(chain, hi);
    if (count == 0) return;
    if (count == 1) {
        const int sl = sign(eval(f, lo));
        while (hi - lo > width) {
            const Rational mid = (lo + hi) / 2;
            const int sm = sign(eval(f, mid));
            if (sm == 0) {
                roots.push_back(static_cast<double>(mid));
                return;
            }
            (sm == sl ? lo : hi) = mid;
        }
        roots.push_back(static_cast<double>((lo + hi) / 2));
        return;
    }
    Rational mid = (lo + hi) / 2;
    // The split point must not be a root; nudging keeps it strictly inside the interval.
    while (eval(f, mid) == 0) mid += (hi - mid) / 97;
    isolate(f, chain, lo, mid, width, roots);
    isolate(f, chain, mid, hi, width, roots);
}

// Eigenvalues of A(g) with multiplicity, descending, from the exact characteristic polynomial.
inline std::vector<double> eigenvalues(const Graph& g) {
    const auto p = characteristic(g);
    const auto factors = squarefree_factors(p);
    std::vector<double> out;
    // Every eigenvalue lies in [-n, n]; the bounds are non-integers, so never roots of a monic integer factor.
    const Rational bound = Rational(2 * g.order() + 1) / 2;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].size() <= 1) continue;
        std::vector<double> roots;
        isolate(factors[i], sturm_chain(factors[i]), -bound, bound, Rational(1, 1LL << 44), roots);
        for (double r : roots) out.insert(out.end(), i + 1, r);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace poly

}  // namespace oracle

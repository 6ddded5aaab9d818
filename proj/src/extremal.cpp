#include "sek/extremal.hpp"

#include <cmath>
#include <sstream>

#include "sek/enumerate.hpp"
#include "sek/forbidden.hpp"

namespace sek {

namespace {

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
}

void require_vertex(const Graph& g, int u) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex out of range");
}

std::int64_t lemma_formula(std::int64_t a, std::int64_t b, std::int64_t k) {
    return (k - 1) * a + k * b - k * (k - 1);
}

double half_half_bound(int n) { return -std::sqrt(static_cast<double>(n / 2) * ((n + 1) / 2)); }

BoundReport integer_report(std::int64_t lhs, std::int64_t rhs) {
    BoundReport r;
    r.premise_ok = true;
    r.integral = true;
    r.lhs = static_cast<double>(lhs);
    r.rhs = static_cast<double>(rhs);
    r.slack = static_cast<double>(rhs - lhs);
    r.equality = lhs == rhs;
    r.bound_violated = lhs > rhs;
    return r;
}

void finish_recognition(BoundReport& r) {
    r.recognizer_mismatch = r.premise_ok && (r.equality != (r.equality_case != EqualityCase::None));
}

}  // namespace

std::string_view to_string(EqualityCase c) {
    switch (c) {
        case EqualityCase::None: return "NONE";
        case EqualityCase::CompleteBipartiteKSide: return "COMPLETE_BIPARTITE_K_SIDE";
        case EqualityCase::CompleteBipartiteKMinus1Side: return "COMPLETE_BIPARTITE_KMINUS1_SIDE";
        case EqualityCase::Lemma2CaseII: return "LEMMA2_CASE_II";
        case EqualityCase::KKNMinusK: return "K_K_NMINUSK";
        case EqualityCase::KHalfHalf: return "K_HALF_HALF";
        case EqualityCase::K22UnionK1: return "K22_UNION_K1";
    }
    return "NONE";
}

std::string_view to_string(Family f) { return f == Family::CycleFree ? "cycle" : "path"; }

std::string describe(const Witness& w) {
    std::ostringstream out;
    switch (w.kind) {
        case Witness::Kind::Path: out << "path"; break;
        case Witness::Kind::Cycle: out << "cycle"; break;
        case Witness::Kind::Component: out << "component"; break;
        case Witness::Kind::OddWalk: out << "odd closed walk"; break;
    }
    for (std::size_t i = 0; i < w.vertices.size(); ++i) out << (i ? ',' : ' ') << w.vertices[i];
    return out.str();
}

std::int64_t lemma1_bound(int x_size, int y_size, int k) {
    require_k(k);
    if (x_size < k || y_size < k - 1) throw std::invalid_argument("lemma1_bound needs |X| >= k and |Y| >= k-1");
    return lemma_formula(x_size, y_size, k);
}

BoundReport verify_lemma1(const Graph& g, const Bipartition& bp, int k) {
    require_k(k);
    if (!is_valid_bipartition(g, bp)) throw std::invalid_argument("invalid bipartition");
    const int xs = bp.x_side.size();
    const int ys = bp.y_side.size();

    BoundReport r = integer_report(g.size(), lemma_formula(xs, ys, k));
    const bool sizes_ok = xs >= k && ys >= k - 1;
    std::optional<std::vector<int>> path;
    if (sizes_ok) path = find_path(g, {2 * k + 1, bp.x_side});
    r.premise_ok = sizes_ok && !path;
    if (path) r.witness = Witness{Witness::Kind::Path, *path};
    if (!r.premise_ok) {
        r.equality = false;
        r.bound_violated = false;
        return r;
    }
    if (g.size() == xs * ys) {
        if (xs == k) r.equality_case = EqualityCase::CompleteBipartiteKSide;
        else if (ys == k - 1) r.equality_case = EqualityCase::CompleteBipartiteKMinus1Side;
    }
    finish_recognition(r);
    return r;
}

std::optional<Witness> lemma2_premise_failure(const Graph& g, int k) {
    require_k(k);
    auto bp = bipartition_of(g);
    if (!bp.bipartite()) return Witness{Witness::Kind::OddWalk, bp.odd_closed_walk};
    if (auto p = find_path(g, {2 * k + 3, std::nullopt})) return Witness{Witness::Kind::Path, *p};
    const Graph forbidden = complete_bipartite(k + 1, k + 1);
    for (auto comp : connected_components(g)) {
        if (comp.size() != 2 * k + 2) continue;
        if (is_isomorphic(induced_subgraph(g, comp), forbidden)) {
            return Witness{Witness::Kind::Component, comp.to_vector()};
        }
    }
    return std::nullopt;
}

EqualityCase classify_lemma2(const Graph& g, int u, int k) {
    require_vertex(g, u);
    const VertexSet a = neighborhood_shell(g, u, 1);
    const VertexSet b = neighborhood_shell(g, u, 2);
    const int e = cross_edges(g, a, b);
    if (e == a.size() * b.size()) {
        if (a.size() == k) return EqualityCase::CompleteBipartiteKSide;
        if (b.size() == k - 1) return EqualityCase::CompleteBipartiteKMinus1Side;
    }
    if (a.size() == k + 1) {
        int partial = 0;
        bool shaped = true;
        for (int v : a) {
            const int d = (g.neighbors(v) & b).size();
            if (d == b.size()) continue;
            if (d == k - 1) ++partial;
            else shaped = false;
        }
        // With b.size() == k - 1 every vertex is complete and case (i) already applied.
        if (shaped && partial == 1) return EqualityCase::Lemma2CaseII;
    }
    return EqualityCase::None;
}

BoundReport verify_lemma2(const Graph& g, int u, int k) {
    require_k(k);
    require_vertex(g, u);
    if (auto w = lemma2_premise_failure(g, k)) {
        throw PremiseViolation("neighbourhood bound premise fails: " + describe(*w), *w);
    }
    const VertexSet a = neighborhood_shell(g, u, 1);
    const VertexSet b = neighborhood_shell(g, u, 2);
    BoundReport r = integer_report(cross_edges(g, a, b), lemma_formula(a.size(), b.size(), k));
    r.equality_case = classify_lemma2(g, u, k);
    finish_recognition(r);
    return r;
}

std::int64_t b_row_sum(const Graph& g, int u, int k) {
    require_vertex(g, u);
    const VertexSet a = neighborhood_shell(g, u, 1);
    for (int v : a) {
        if (!(g.neighbors(v) & a).empty()) {
            throw std::invalid_argument("b_row_sum needs N(u) to be an independent set");
        }
    }
    const std::int64_t n = g.order();
    const std::int64_t shift = static_cast<std::int64_t>(k) * (n - k);
    const std::int64_t walks = a.size() + cross_edges(g, a, neighborhood_shell(g, u, 2)) - shift;

    const auto adj = adjacency_matrix<std::int64_t>(g);
    const MatrixX<std::int64_t> b =
        adj * adj - shift * MatrixX<std::int64_t>::Identity(g.order(), g.order());
    if (b.row(u).sum() != walks) throw std::logic_error("walk count disagrees with A^2 row sum");
    return walks;
}

int cycle_k(int t) {
    if (t < 4 || t % 2 != 0) throw std::invalid_argument("k is defined for even cycles C_{2k+2}, t >= 4");
    return (t - 2) / 2;
}

int path_k(int t) {
    if (t < 2) throw std::invalid_argument("path order must be at least 2");
    return (t - 2) / 2;
}

double theorem_bound_cycle(int n, int t) {
    if (t < 3) throw std::invalid_argument("cycle order must be at least 3");
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (t % 2 == 1 || n < t) return half_half_bound(n);
    const int k = cycle_k(t);
    return -std::sqrt(static_cast<double>(k) * (n - k));
}

EqualityCase classify_extremal_cycle(const Graph& g, int n, int t) {
    theorem_bound_cycle(n, t);
    if (g.order() != n) throw std::invalid_argument("graph order differs from n");
    if (t % 2 == 1 || n < t) {
        return is_isomorphic(g, complete_bipartite(n / 2, n - n / 2)) ? EqualityCase::KHalfHalf : EqualityCase::None;
    }
    const int k = cycle_k(t);
    return is_isomorphic(g, complete_bipartite(k, n - k)) ? EqualityCase::KKNMinusK : EqualityCase::None;
}

double theorem_bound_path(int n, int t) {
    const int k = path_k(t);
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (n < t) return half_half_bound(n);
    return -std::sqrt(static_cast<double>(k) * (n - k));
}

EqualityCase classify_extremal_path(const Graph& g, int n, int t) {
    theorem_bound_path(n, t);
    if (g.order() != n) throw std::invalid_argument("graph order differs from n");
    if (n < t) {
        return is_isomorphic(g, complete_bipartite(n / 2, n - n / 2)) ? EqualityCase::KHalfHalf : EqualityCase::None;
    }
    const int k = path_k(t);
    if (is_isomorphic(g, complete_bipartite(k, n - k))) return EqualityCase::KKNMinusK;
    if (n == 5 && t == 5 && is_isomorphic(g, disjoint_union(complete_bipartite(2, 2), complete_graph(1)))) {
        return EqualityCase::K22UnionK1;
    }
    return EqualityCase::None;
}

BoundReport verify_theorem_instance(const Graph& g, int t, Family family, bool bipartite_radius_mode,
                                    double eps_eq) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (bipartite_radius_mode && !is_bipartite(g)) {
        throw std::invalid_argument("spectral radius mode needs a bipartite graph");
    }
    const bool cycles = family == Family::CycleFree;
    const double bound = cycles ? theorem_bound_cycle(n, t) : theorem_bound_path(n, t);

    BoundReport r;
    const auto found = cycles ? find_cycle(g, t) : find_path(g, {t, std::nullopt});
    r.premise_ok = !found;
    if (found) r.witness = Witness{cycles ? Witness::Kind::Cycle : Witness::Kind::Path, *found};

    const auto s = spectrum(g);
    if (bipartite_radius_mode) {
        r.sense = BoundSense::Upper;
        r.lhs = std::max(s.values.front(), -s.values.back());
        r.rhs = -bound;
        r.slack = r.rhs - r.lhs;
    } else {
        r.sense = BoundSense::Lower;
        r.lhs = s.values.back();
        r.rhs = bound;
        r.slack = r.lhs - r.rhs;
    }
    if (!r.premise_ok) return r;
    r.equality = std::abs(r.slack) <= eps_eq;
    r.bound_violated = r.slack < -eps_eq;
    r.equality_case = cycles ? classify_extremal_cycle(g, n, t) : classify_extremal_path(g, n, t);
    finish_recognition(r);
    return r;
}

SpanningBipartite spanning_bipartite_subgraph(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("spanning bipartite subgraph needs at least one vertex");
    if (auto bp = bipartition_of(g); bp.bipartite()) return {g, *bp.sides};
    const auto x = least_eigenvector(g);
    VertexSet nonneg;
    for (int v = 0; v < g.order(); ++v) {
        // Entries within solver accuracy of zero count as zero.
        if (x[v] >= -kSolverTol) nonneg = nonneg.with(v);
    }
    return {crossing_subgraph(g, nonneg), {nonneg, g.vertices() - nonneg}};
}

}  // namespace sek

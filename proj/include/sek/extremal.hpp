#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sek/graph.hpp"
#include "sek/spectral.hpp"

namespace sek {

enum class EqualityCase {
    None,
    CompleteBipartiteKSide,       // K_{|X|,|Y|} with |X| = k
    CompleteBipartiteKMinus1Side, // K_{|X|,|Y|} with |Y| = k - 1
    Lemma2CaseII,                 // K_{k,m} plus one more N(u)-vertex joined to k-1 of the m
    KKNMinusK,                    // K_{k,n-k}
    KHalfHalf,                    // K_{floor(n/2),ceil(n/2)}
    K22UnionK1,
};

std::string_view to_string(EqualityCase c);

enum class Family { CycleFree, PathFree };

std::string_view to_string(Family f);

// Upper: the claim is lhs <= rhs. Lower: the claim is lhs >= rhs.
enum class BoundSense { Upper, Lower };

struct Witness {
    enum class Kind { Path, Cycle, Component, OddWalk };
    Kind kind = Kind::Path;
    std::vector<int> vertices;
};

std::string describe(const Witness& w);

// Outcome of checking one instance of an inequality with an equality characterisation.
//
// slack is the margin on the side the bound claims (rhs - lhs for Upper, lhs - rhs for Lower),
// so a negative slack always means the bound failed. equality_case is the recognizer's verdict,
// computed for every instance whose premise holds: for a sharp bound it is non-None exactly when
// `equality` is set.
struct BoundReport {
    bool premise_ok = false;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    BoundSense sense = BoundSense::Upper;
    bool integral = false;
    bool equality = false;
    EqualityCase equality_case = EqualityCase::None;
    std::optional<Witness> witness;
    bool bound_violated = false;
    bool recognizer_mismatch = false;

    bool violation() const { return bound_violated || recognizer_mismatch; }
};

// A verifier was called on input outside the statement's hypotheses.
class PremiseViolation : public std::invalid_argument {
public:
    PremiseViolation(const std::string& what, Witness w) : std::invalid_argument(what), witness_(std::move(w)) {}
    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

// (k-1)|X| + k|Y| - k(k-1); requires x_size >= k >= 1 and y_size >= k-1.
std::int64_t lemma1_bound(int x_size, int y_size, int k);

// Edge bound for bipartite graphs with no P_{2k+1} whose two ends lie in X.
BoundReport verify_lemma1(const Graph& g, const Bipartition& bp, int k);

// Why g falls outside the neighbourhood lemma's hypotheses (not bipartite, contains P_{2k+3},
// or has a component isomorphic to K_{k+1,k+1}); nullopt when they hold.
std::optional<Witness> lemma2_premise_failure(const Graph& g, int k);

// e(N(u), N^2(u)) <= (k-1)|N(u)| + k|N^2(u)| - k(k-1). Throws PremiseViolation when
// lemma2_premise_failure(g, k) is set.
BoundReport verify_lemma2(const Graph& g, int u, int k);
// Recognizer for the equality configurations of the neighbourhood bound around u.
EqualityCase classify_lemma2(const Graph& g, int u, int k);

// b(u) = |N(u)| + e(N(u), N^2(u)) - k(n-k), cross-checked against the u-th row sum of
// A^2 - k(n-k)I. The walk count identity needs N(u) independent (true in bipartite graphs);
// throws std::invalid_argument otherwise.
std::int64_t b_row_sum(const Graph& g, int u, int k);

// k for the even cycle C_{2k+2}; throws for odd t or t < 4.
int cycle_k(int t);
// k = floor((t-2)/2) for P_t; throws for t < 2.
int path_k(int t);

double theorem_bound_cycle(int n, int t);
EqualityCase classify_extremal_cycle(const Graph& g, int n, int t);
double theorem_bound_path(int n, int t);
EqualityCase classify_extremal_path(const Graph& g, int n, int t);

// Least eigenvalue bound for C_t-free / P_t-free graphs, or in radius mode the spectral radius
// bound for bipartite members of the same family.
BoundReport verify_theorem_instance(const Graph& g, int t, Family family, bool bipartite_radius_mode,
                                    double eps_eq = kDefaultEpsEq);

struct SpanningBipartite {
    Graph graph;
    Bipartition sides;
};

// Keeps the edges of g that cross the sign pattern of a least eigenvector (entries >= 0 on the
// x side). Bipartite input is returned unchanged.
SpanningBipartite spanning_bipartite_subgraph(const Graph& g);

}  // namespace sek

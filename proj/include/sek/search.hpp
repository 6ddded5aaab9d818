#pragma once

#include <cstddef>
#include <vector>

#include "sek/enumerate.hpp"
#include "sek/extremal.hpp"

namespace sek {

struct FamilyDescriptor {
    int n = 0;
    int t = 0;
    Family family = Family::CycleFree;
    bool bipartite_only = false;
};

// Minimum least eigenvalue over the non-isomorphic members of an H-free family, with the
// theorem bound and recognizer verdicts alongside for comparison.
struct ExtremalResult {
    FamilyDescriptor family;
    std::size_t family_size = 0;
    double min_value = 0;
    double bound = 0;
    std::vector<CanonicalCode> argmin;      // members within eps_eq of min_value
    std::vector<CanonicalCode> recognized;  // members the extremal recognizer accepts
    bool sound = false;                     // min_value >= bound - eps_eq
    bool sharp = false;                     // argmin == recognized and the bound is attained
};

ExtremalResult extremal_search(int n, int t, Family family, bool bipartite_only, int jobs = 1,
                               double eps_eq = kDefaultEpsEq);

}  // namespace sek

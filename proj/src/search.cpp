#include "sek/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "sek/forbidden.hpp"
#include "sek/graph6.hpp"

namespace sek {

ExtremalResult extremal_search(int n, int t, Family family, bool bipartite_only, int jobs, double eps_eq) {
    if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("n outside the enumeration range");
    const bool cycles = family == Family::CycleFree;

    ExtremalResult res;
    res.family = {n, t, family, bipartite_only};
    res.bound = cycles ? theorem_bound_cycle(n, t) : theorem_bound_path(n, t);

    struct Member {
        std::string code;
        double least;
        bool recognized;
    };
    std::vector<Member> members;
    std::mutex mu;
    for_each_graph(
        n,
        [&](const Graph& g) {
            if (bipartite_only && !is_bipartite(g)) return;
            if (cycles ? has_cycle(g, t) : has_path(g, t)) return;
            const auto tag = cycles ? classify_extremal_cycle(g, n, t) : classify_extremal_path(g, n, t);
            Member m{to_graph6(g), least_eigenvalue(g), tag != EqualityCase::None};
            std::lock_guard lock(mu);
            members.push_back(std::move(m));
        },
        jobs);
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) { return a.code < b.code; });

    res.family_size = members.size();
    if (members.empty()) {
        res.min_value = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    res.min_value = std::min_element(members.begin(), members.end(), [](const Member& a, const Member& b) {
                        return a.least < b.least;
                    })->least;
    for (const auto& m : members) {
        if (m.least <= res.min_value + eps_eq) res.argmin.push_back({m.code});
        if (m.recognized) res.recognized.push_back({m.code});
    }
    res.sound = res.min_value >= res.bound - eps_eq;
    res.sharp = res.argmin == res.recognized && std::abs(res.min_value - res.bound) <= eps_eq;
    return res;
}

}  // namespace sek

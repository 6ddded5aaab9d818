#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sek/extremal.hpp"

namespace sek {

// Inclusive integer range; "5" parses as 5..5 and "3..8" as 3..8.
struct Range {
    int lo = 0;
    int hi = -1;

    static Range parse(std::string_view text);
    static Range single(int v) { return {v, v}; }
    bool empty() const { return hi < lo; }
};

struct Finding {
    std::string graph6;
    std::string detail;
    std::vector<std::pair<std::string, std::int64_t>> context;  // e.g. n, t, k, u

    friend auto operator<=>(const Finding&, const Finding&) = default;
};

struct CampaignReport {
    std::string campaign;
    std::vector<std::pair<std::string, std::string>> params;
    std::int64_t checked = 0;
    std::vector<Finding> violations;
    std::vector<Finding> equality;
    std::map<std::string, std::int64_t> stats;
    double wall_time_ms = 0;

    // Counts add and lists concatenate; finalize() sorts, so the fold is order independent.
    void merge(const CampaignReport& other);
    void finalize();
    bool passed() const { return violations.empty(); }
};

// One line of JSON with fixed field order; reals are rounded to 12 significant digits.
std::string to_json_line(const CampaignReport& report, bool include_timing = true);

CampaignReport run_theorem_campaign(Family family, Range n, Range t, bool bipartite_radius_mode, int jobs = 1,
                                    double eps_eq = kDefaultEpsEq);
CampaignReport run_lemma1_campaign(Range x, Range y, Range k);
CampaignReport run_lemma2_campaign(Range x, Range y, Range k);
// b(u) <= 0 for every C_{2k+2}-free bipartite graph with n >= 2k+2, zero everywhere exactly on K_{k,n-k}.
CampaignReport run_rowsum_campaign(Range n, int jobs = 1);
// Spanning bipartite subgraph never raises the least eigenvalue.
CampaignReport run_bipartize_campaign(Range n, int jobs = 1, double eps_eq = kDefaultEpsEq);

// Rounds to 12 significant digits, the precision used in every printed record.
double round12(double v);

}  // namespace sek

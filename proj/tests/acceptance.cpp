// One PASS/FAIL line per acceptance criterion at the pinned tolerances. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sek/campaign.hpp"
#include "sek/enumerate.hpp"
#include "sek/forbidden.hpp"
#include "sek/graph6.hpp"
#include "sek/spectral.hpp"

using namespace sek;

namespace {

constexpr double kEps = 1e-8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void verdict(int id, bool pass, const std::string& what, const std::string& measured) {
    std::printf("%s  %d  %s | %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), measured.c_str());
    std::fflush(stdout);
    failures += !pass;
}

void note(const std::string& text) {
    std::printf("      %s\n", text.c_str());
    std::fflush(stdout);
}

std::int64_t ctx_value(const Finding& f, const std::string& key) {
    for (const auto& [k, v] : f.context) {
        if (k == key) return v;
    }
    return -1;
}

std::string first_violation(const CampaignReport& r) {
    if (r.violations.empty()) return "";
    const auto& f = r.violations.front();
    std::string out = "first: " + f.graph6 + " " + f.detail;
    for (const auto& [k, v] : f.context) out += " " + k + "=" + std::to_string(v);
    return out;
}

// Violations histogram over one context key, e.g. {t: count}.
std::string histogram(const CampaignReport& r, const std::string& key) {
    std::map<std::int64_t, int> h;
    for (const auto& f : r.violations) ++h[ctx_value(f, key)];
    std::string out;
    for (const auto& [v, c] : h) out += (out.empty() ? "" : ", ") + key + "=" + std::to_string(v) + ": " + std::to_string(c);
    return out;
}

std::map<int, std::vector<Graph>> corpus(int lo, int hi) {
    std::map<int, std::vector<Graph>> out;
    for (int n = lo; n <= hi; ++n) out[n] = enumerate_graphs(n);
    return out;
}

void criterion1() {
    const auto start = Clock::now();
    const auto r = run_theorem_campaign(Family::CycleFree, Range{3, 8}, Range{3, 8}, false, 1, kEps);
    const double secs = seconds_since(start);
    verdict(1, r.passed() && secs < 300, "C_t-free least-eigenvalue bound, n 3..8, t 3..8",
            std::to_string(r.checked) + " instances, " + std::to_string(r.violations.size()) + " violations, " +
                std::to_string(r.equality.size()) + " equality graphs, " + std::to_string(secs) + " s (limit 300 s)");
    if (!r.passed()) note(first_violation(r));
}

void criterion2() {
    const auto r = run_theorem_campaign(Family::PathFree, Range{3, 8}, Range{2, 8}, false, 1, kEps);
    std::map<std::pair<std::int64_t, std::int64_t>, std::set<std::string>> eq;
    for (const auto& f : r.equality) eq[{ctx_value(f, "n"), ctx_value(f, "t")}].insert(f.graph6);

    const std::set<std::string> sporadic{canonical_code(complete_bipartite(1, 4)).bytes,
                                         canonical_code(disjoint_union(complete_bipartite(2, 2), complete_graph(1))).bytes};
    bool shapes = true;
    std::string bad;
    for (int n = 3; n <= 8; ++n) {
        for (int t = 2; t <= 8; ++t) {
            std::set<std::string> expected;
            if (n == 5 && t == 5) {
                expected = sporadic;
            } else {
                const int k = n < t ? n / 2 : path_k(t);
                expected.insert(canonical_code(complete_bipartite(k, n - k)).bytes);
            }
            if (eq[{n, t}] != expected) {
                shapes = false;
                if (bad.empty()) bad = "(n,t)=(" + std::to_string(n) + "," + std::to_string(t) + ")";
            }
        }
    }
    verdict(2, r.passed() && shapes, "P_t-free least-eigenvalue bound, n 3..8, t 2..8, extremal sets exact",
            std::to_string(r.checked) + " instances, " + std::to_string(r.violations.size()) +
                " violations, (5,5) equality set " + (eq[{5, 5}] == sporadic ? "= {K_{1,4}, K_{2,2}+K_1}" : "wrong") +
                ", equality sets " + (shapes ? "exact" : "differ first at " + bad));
    if (!r.passed()) {
        note("violations by t: " + histogram(r, "t"));
        note(first_violation(r));
    }
}

void criterion3() {
    const auto start = Clock::now();
    const auto r = run_lemma1_campaign(Range{0, 4}, Range{0, 5}, Range{1, 3});
    const double secs = seconds_since(start);
    verdict(3, r.passed() && secs < 120, "bipartite edge bound with endpoint-constrained path premise, |X|<=4, |Y|<=5, k 1..3",
            std::to_string(r.checked) + " instances, " + std::to_string(r.violations.size()) + " violations, " +
                std::to_string(r.equality.size()) + " equality instances, " + std::to_string(secs) + " s (limit 120 s)");
    if (!r.passed()) {
        note("violations by k: " + histogram(r, "k"));
        int disconnected = 0;
        for (const auto& f : r.violations) disconnected += !is_connected(from_graph6(f.graph6));
        note(std::to_string(disconnected) + " of " + std::to_string(r.violations.size()) +
             " violating graphs are disconnected");
        note(first_violation(r));
    }
}

void criterion4() {
    const auto r = run_lemma2_campaign(Range{0, 4}, Range{0, 5}, Range{1, 3});
    auto stat = [&](const std::string& key) {
        const auto it = r.stats.find(key);
        return it == r.stats.end() ? std::int64_t{0} : it->second;
    };
    verdict(4, r.passed(), "neighbourhood cross-edge bound and equality cases, same size range, k 1..3",
            std::to_string(stat("graphs")) + " graphs, " + std::to_string(r.checked) + " (graph,u,k) instances, " +
                std::to_string(r.violations.size()) + " violations, case (ii) fired " +
                std::to_string(stat("case_ii_fired")) + " times");
    if (!r.passed()) {
        note("violations by k: " + histogram(r, "k"));
        note("shells below the size premise (|N(u)|<k or |N2(u)|<k-1): " + std::to_string(stat("violations_small_shells")) +
             ", other: " + std::to_string(stat("violations_other")));
        int k1_other = 0;
        for (const auto& f : r.violations) {
            const auto g = from_graph6(f.graph6);
            const int u = static_cast<int>(ctx_value(f, "u"));
            const int k = static_cast<int>(ctx_value(f, "k"));
            const bool small = neighborhood_shell(g, u, 1).size() < k || neighborhood_shell(g, u, 2).size() < k - 1;
            if (small || k != 1) continue;
            const auto again = verify_lemma2(g, u, k);
            k1_other += again.equality && again.equality_case == EqualityCase::None;
        }
        note(std::to_string(k1_other) + " of the other violations are k=1 equality instances no case accepts");
        note(first_violation(r));
    }
}

void criterion5() {
    const auto r = run_rowsum_campaign(Range{4, 9}, 1);
    verdict(5, r.passed(), "row sums of A^2 - k(n-k)I on C_{2k+2}-free bipartite graphs, n <= 9, exact",
            std::to_string(r.checked) + " (graph,k) instances, " + std::to_string(r.violations.size()) +
                " violations, " + std::to_string(r.equality.size()) + " identically-zero graphs (all K_{k,n-k})");
    if (!r.passed()) note(first_violation(r));
}

void criterion6() {
    const auto small = run_bipartize_campaign(Range{1, 7}, 1, kEps);
    const auto large = run_bipartize_campaign(Range{8, 8}, 1, kEps);
    const bool pass = small.passed() && large.passed();
    auto stat = [](const CampaignReport& r, const char* key) {
        const auto it = r.stats.find(key);
        return it == r.stats.end() ? std::int64_t{0} : it->second;
    };
    verdict(6, pass, "spanning bipartite subgraph never raises lambda_n, n <= 8",
            std::to_string(small.checked + large.checked) + " graphs, " +
                std::to_string(small.violations.size() + large.violations.size()) + " violations");
    int connected_ties = 0;
    for (const auto& f : small.equality) connected_ties += is_connected(from_graph6(f.graph6));
    note("n <= 7 non-bipartite: " + std::to_string(stat(small, "nonbipartite")) + ", strict decrease " +
         std::to_string(stat(small, "strict_decrease")) + ", ties " + std::to_string(stat(small, "ties")) + " (" +
         std::to_string(connected_ties) + " connected)");
}

void criterion7(const std::map<int, std::vector<Graph>>& graphs) {
    double worst_root = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : graphs.at(n)) {
            const auto exact = oracle::poly::eigenvalues(g);
            const auto s = spectrum(g);
            if (exact.size() != s.values.size()) {
                worst_root = INFINITY;
                continue;
            }
            for (std::size_t i = 0; i < exact.size(); ++i) worst_root = std::max(worst_root, std::abs(exact[i] - s.values[i]));
        }
    }
    double worst_trace = 0, worst_frob = 0, worst_neg = 0;
    std::size_t count = 0;
    for (const auto& [n, list] : graphs) {
        for (const auto& g : list) {
            const auto s = spectrum(g);
            double sum = 0, sq = 0;
            for (double v : s.values) {
                sum += v;
                sq += v * v;
            }
            worst_trace = std::max(worst_trace, std::abs(sum) / n);
            worst_frob = std::max(worst_frob, std::abs(sq - 2 * g.size()) / n);
            if (is_bipartite(g)) worst_neg = std::max(worst_neg, std::abs(s.values.back() + s.values.front()));
            ++count;
        }
    }
    const bool pass = worst_root <= kEps && worst_trace <= kSolverTol && worst_frob <= kSolverTol && worst_neg <= kEps;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "max |root error| n<=5 %.2e (<= 1e-8); %zu graphs n<=8: max trace/n %.2e, max frob/n %.2e (<= tol); "
                  "max |lambda_n + rho| bipartite %.2e (<= 1e-8)",
                  worst_root, count, worst_trace, worst_frob, worst_neg);
    verdict(7, pass, "spectral correctness", buf);
}

void criterion8(const std::map<int, std::vector<Graph>>& graphs) {
    bool counts = true;
    std::string shown;
    for (int n = 1; n <= 6; ++n) {
        const auto expected = oracle::class_count(n);
        counts = counts && graphs.at(n).size() == expected;
        shown += (n > 1 ? "," : "") + std::to_string(graphs.at(n).size()) + "/" + std::to_string(expected);
    }
    // Codes are recomputed after a random relabelling, so a repeat would show up as a collision.
    std::mt19937_64 rng(97);
    bool unique = true;
    std::size_t total = 0;
    std::vector<Graph> nine;
    for (int n = 1; n <= 9; ++n) {
        const auto& list = n <= 8 ? graphs.at(n) : (nine = enumerate_graphs(9));
        std::set<std::string> codes;
        for (const auto& g : list) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto code = canonical_code(relabel(g, perm)).bytes;
            unique = unique && code == to_graph6(g);
            codes.insert(code);
        }
        unique = unique && codes.size() == list.size();
        total += list.size();
    }
    verdict(8, counts && unique, "enumeration: counts vs labelled-dedup oracle, unique canonical codes n <= 9",
            "n=1..6 emitted/oracle " + shown + "; " + std::to_string(total) + " classes n<=9 (n=9: " +
                std::to_string(nine.size()) + "), codes " + (unique ? "unique and relabelling invariant" : "COLLIDE"));
}

void criterion9(const std::map<int, std::vector<Graph>>& graphs) {
    std::size_t checks = 0, mismatches = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : graphs.at(n)) {
            for (int t = 1; t <= n; ++t) {
                const auto ends = oracle::path_ends(g, t);
                bool any = false;
                for (auto e : ends) any = any || e != 0;
                mismatches += has_path(g, t) != any;
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                    mismatches += has_path_with_endpoints_in(g, t, VertexSet(s)) != oracle::ends_within(ends, s);
                }
                if (t >= 3) mismatches += has_cycle(g, t) != oracle::has_cycle(g, t);
                checks += 2 + (std::uint64_t{1} << n);
            }
            mismatches += has_path(g, n + 1);
        }
    }
    verdict(9, mismatches == 0, "path / cycle / endpoint-constrained detection vs sequence enumeration, n <= 7",
            std::to_string(checks) + " queries, " + std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const auto graphs = corpus(1, 8);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(graphs);
    criterion8(graphs);
    criterion9(graphs);
    std::printf("%d of 9 criteria failed, %.1f s total\n", failures, seconds_since(start));
    return failures == 0 ? 0 : 1;
}

#include "sek/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>
#include <thread>

#include "json.hpp"
#include "sek/enumerate.hpp"
#include "sek/forbidden.hpp"
#include "sek/graph6.hpp"
#include "sek/spectral.hpp"

namespace sek {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string range_text(Range r) {
    return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Applies fn(item, partial) over items on `jobs` threads and folds the partial reports.
template <typename Item, typename Fn>
CampaignReport parallel_fold(const std::vector<Item>& items, int jobs, Fn fn) {
    const int width = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    std::vector<CampaignReport> parts(width);
    if (width == 1) {
        for (const auto& item : items) fn(item, parts[0]);
    } else {
        std::vector<std::thread> workers;
        for (int j = 0; j < width; ++j) {
            workers.emplace_back([&, j] {
                for (std::size_t i = j; i < items.size(); i += width) fn(items[i], parts[j]);
            });
        }
        for (auto& w : workers) w.join();
    }
    CampaignReport out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Range Range::parse(std::string_view text) {
    auto number = [&](std::string_view s) {
        int v = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size()) {
            throw std::invalid_argument("invalid range '" + std::string(text) + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) return single(number(text));
    Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

double round12(double v) { return std::stod(fmt12(v)); }

void CampaignReport::merge(const CampaignReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    equality.insert(equality.end(), other.equality.begin(), other.equality.end());
    for (const auto& [key, value] : other.stats) stats[key] += value;
}

void CampaignReport::finalize() {
    std::sort(violations.begin(), violations.end());
    std::sort(equality.begin(), equality.end());
}

std::string to_json_line(const CampaignReport& report, bool include_timing) {
    using nlohmann::ordered_json;
    auto finding = [](const Finding& f, const char* label) {
        ordered_json j;
        j["graph6"] = f.graph6;
        j[label] = f.detail;
        for (const auto& [key, value] : f.context) j[key] = value;
        return j;
    };
    ordered_json j;
    j["campaign"] = report.campaign;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = params;
    j["checked"] = report.checked;
    j["violations"] = ordered_json::array();
    for (const auto& f : report.violations) j["violations"].push_back(finding(f, "detail"));
    j["equality"] = ordered_json::array();
    for (const auto& f : report.equality) j["equality"].push_back(finding(f, "case"));
    ordered_json stats = ordered_json::object();
    for (const auto& [key, value] : report.stats) stats[key] = value;
    j["stats"] = stats;
    j["wall_time_ms"] = include_timing ? round12(report.wall_time_ms) : 0.0;
    return j.dump();
}

CampaignReport run_theorem_campaign(Family family, Range n, Range t, bool bipartite_radius_mode, int jobs,
                                    double eps_eq) {
    const auto start = Clock::now();
    const bool cycles = family == Family::CycleFree;
    require(n.lo >= 1 && n.hi <= kMaxEnumerationOrder, "n must lie in 1.." + std::to_string(kMaxEnumerationOrder));
    require(t.lo >= (cycles ? 3 : 2), cycles ? "cycle order t must be at least 3" : "path order t must be at least 2");

    CampaignReport report;
    for (int order = n.lo; order <= n.hi; ++order) {
        GraphFilter filter;
        if (bipartite_radius_mode) filter = [](const Graph& g) { return is_bipartite(g); };
        const auto graphs = enumerate_graphs(order, filter, jobs);
        report.merge(parallel_fold(graphs, jobs, [&](const Graph& g, CampaignReport& part) {
            const auto code = to_graph6(g);
            for (int len = t.lo; len <= t.hi; ++len) {
                const auto r = verify_theorem_instance(g, len, family, bipartite_radius_mode, eps_eq);
                ++part.stats["scanned"];
                if (!r.premise_ok) continue;
                ++part.checked;
                std::vector<std::pair<std::string, std::int64_t>> ctx{{"n", order}, {"t", len}};
                if (r.violation()) {
                    part.violations.push_back(
                        {code,
                         std::string(bipartite_radius_mode ? "rho=" : "lambda=") + fmt12(r.lhs) + " bound=" +
                             fmt12(r.rhs) + " equality=" + (r.equality ? "1" : "0") + " recognized=" +
                             std::string(to_string(r.equality_case)),
                         ctx});
                }
                if (r.equality) part.equality.push_back({code, std::string(to_string(r.equality_case)), ctx});
            }
        }));
    }
    report.campaign = cycles ? "thm-cycle" : "thm-path";
    report.params = {{"n", range_text(n)},
                     {"t", range_text(t)},
                     {"family", std::string(to_string(family))},
                     {"mode", bipartite_radius_mode ? "bipartite-radius" : "least-eigenvalue"},
                     {"eps_eq", fmt12(eps_eq)}};
    report.finalize();
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

CampaignReport run_lemma1_campaign(Range x, Range y, Range k) {
    const auto start = Clock::now();
    require(x.lo >= 0 && y.lo >= 0, "side sizes must be nonnegative");
    require(k.lo >= 1, "k must be at least 1");
    require(x.hi * y.hi <= kMaxBipartiteCells, "x * y must not exceed " + std::to_string(kMaxBipartiteCells));

    CampaignReport report;
    for (int xs = x.lo; xs <= x.hi; ++xs) {
        for (int ys = y.lo; ys <= y.hi; ++ys) {
            std::vector<int> ks;
            for (int kk = k.lo; kk <= k.hi; ++kk) {
                if (xs >= kk && ys >= kk - 1) ks.push_back(kk);
            }
            if (ks.empty()) continue;
            for (const auto& [g, bp] : enumerate_bipartite(xs, ys)) {
                const auto code = to_graph6(g);
                for (int kk : ks) {
                    const auto r = verify_lemma1(g, bp, kk);
                    ++report.stats["scanned"];
                    if (!r.premise_ok) continue;
                    ++report.checked;
                    std::vector<std::pair<std::string, std::int64_t>> ctx{{"x", xs}, {"y", ys}, {"k", kk}};
                    if (r.violation()) {
                        report.violations.push_back({code,
                                                     "edges=" + fmt12(r.lhs) + " bound=" + fmt12(r.rhs) +
                                                         " recognized=" + std::string(to_string(r.equality_case)),
                                                     ctx});
                    }
                    if (r.equality) {
                        ++report.stats["equality"];
                        report.equality.push_back({code, std::string(to_string(r.equality_case)), ctx});
                    }
                }
            }
        }
    }
    report.campaign = "lemma1";
    report.params = {{"x", range_text(x)}, {"y", range_text(y)}, {"k", range_text(k)}};
    report.finalize();
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

CampaignReport run_lemma2_campaign(Range x, Range y, Range k) {
    const auto start = Clock::now();
    require(x.lo >= 0 && y.lo >= 0, "side sizes must be nonnegative");
    require(k.lo >= 1, "k must be at least 1");
    require(x.hi * y.hi <= kMaxBipartiteCells, "x * y must not exceed " + std::to_string(kMaxBipartiteCells));

    // The bound does not depend on the side labels, so each underlying graph is checked once.
    std::map<std::string, Graph> graphs;
    for (int xs = x.lo; xs <= x.hi; ++xs) {
        for (int ys = y.lo; ys <= y.hi; ++ys) {
            if (xs + ys == 0) continue;
            for (const auto& [g, bp] : enumerate_bipartite(xs, ys)) {
                auto form = canonical_form(g);
                graphs.emplace(std::move(form.code.bytes), std::move(form.graph));
            }
        }
    }

    CampaignReport report;
    for (int kk = k.lo; kk <= k.hi; ++kk) {
        for (const auto& [code, g] : graphs) {
            if (lemma2_premise_failure(g, kk)) {
                ++report.stats["premise_failed"];
                continue;
            }
            for (int u = 0; u < g.order(); ++u) {
                const auto r = verify_lemma2(g, u, kk);
                ++report.checked;
                std::vector<std::pair<std::string, std::int64_t>> ctx{{"k", kk}, {"u", u}};
                if (r.violation()) {
                    const auto a = neighborhood_shell(g, u, 1).size();
                    const auto b = neighborhood_shell(g, u, 2).size();
                    report.violations.push_back(
                        {code,
                         "N=" + std::to_string(a) + " N2=" + std::to_string(b) + " lhs=" + fmt12(r.lhs) +
                             " rhs=" + fmt12(r.rhs) + " recognized=" + std::string(to_string(r.equality_case)),
                         ctx});
                    ++report.stats[a < kk || b < kk - 1 ? "violations_small_shells" : "violations_other"];
                }
                if (r.equality) {
                    ++report.stats["equality_" + std::string(to_string(r.equality_case))];
                    report.equality.push_back({code, std::string(to_string(r.equality_case)), ctx});
                }
            }
        }
    }
    report.stats["graphs"] = static_cast<std::int64_t>(graphs.size());
    report.stats["case_ii_fired"] = report.stats["equality_LEMMA2_CASE_II"];
    report.stats.erase("equality_LEMMA2_CASE_II");
    report.campaign = "lemma2";
    report.params = {{"x", range_text(x)}, {"y", range_text(y)}, {"k", range_text(k)}};
    report.finalize();
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

CampaignReport run_rowsum_campaign(Range n, int jobs) {
    const auto start = Clock::now();
    require(n.lo >= 1 && n.hi <= kMaxEnumerationOrder, "n must lie in 1.." + std::to_string(kMaxEnumerationOrder));

    CampaignReport report;
    for (int order = n.lo; order <= n.hi; ++order) {
        if (order < 4) continue;
        const auto graphs = enumerate_graphs(order, [](const Graph& g) { return is_bipartite(g); }, jobs);
        report.merge(parallel_fold(graphs, jobs, [&](const Graph& g, CampaignReport& part) {
            const auto code = to_graph6(g);
            for (int k = 1; 2 * k + 2 <= order; ++k) {
                if (has_cycle(g, 2 * k + 2)) continue;
                ++part.checked;
                std::vector<std::pair<std::string, std::int64_t>> ctx{{"n", order}, {"k", k}};
                bool all_zero = true;
                for (int u = 0; u < order; ++u) {
                    const auto b = b_row_sum(g, u, k);
                    if (b > 0) {
                        part.violations.push_back({code, "b(" + std::to_string(u) + ")=" + std::to_string(b), ctx});
                    }
                    all_zero = all_zero && b == 0;
                }
                const bool extremal = is_isomorphic(g, complete_bipartite(k, order - k));
                if (all_zero != extremal) {
                    part.violations.push_back(
                        {code, all_zero ? "b vanishes on a non-extremal graph" : "b not identically zero on K_{k,n-k}",
                         ctx});
                }
                if (all_zero) part.equality.push_back({code, std::string(to_string(EqualityCase::KKNMinusK)), ctx});
            }
        }));
    }
    report.campaign = "rowsum";
    report.params = {{"n", range_text(n)}};
    report.finalize();
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

CampaignReport run_bipartize_campaign(Range n, int jobs, double eps_eq) {
    const auto start = Clock::now();
    require(n.lo >= 1 && n.hi <= kMaxEnumerationOrder, "n must lie in 1.." + std::to_string(kMaxEnumerationOrder));

    CampaignReport report;
    for (int order = n.lo; order <= n.hi; ++order) {
        const auto graphs = enumerate_graphs(order, {}, jobs);
        report.merge(parallel_fold(graphs, jobs, [&](const Graph& g, CampaignReport& part) {
            const auto code = to_graph6(g);
            const auto [h, sides] = spanning_bipartite_subgraph(g);
            ++part.checked;
            std::vector<std::pair<std::string, std::int64_t>> ctx{{"n", order}};
            bool spanning = h.order() == g.order();
            for (int v = 0; spanning && v < g.order(); ++v) spanning = h.neighbors(v).subset_of(g.neighbors(v));
            const bool bipartite = is_bipartite(g);
            if (!spanning || !is_valid_bipartition(h, sides) || (bipartite && !(h == g))) {
                part.violations.push_back({code, "malformed spanning bipartite subgraph", ctx});
                return;
            }
            const double before = least_eigenvalue(g);
            const double after = least_eigenvalue(h);
            if (after > before + eps_eq) {
                part.violations.push_back({code, "lambda(H)=" + fmt12(after) + " > lambda(G)=" + fmt12(before), ctx});
            }
            if (bipartite) return;
            ++part.stats["nonbipartite"];
            if (after < before - eps_eq) {
                ++part.stats["strict_decrease"];
            } else {
                ++part.stats["ties"];
                part.equality.push_back({code, "NON_BIPARTITE_TIE", ctx});
            }
        }));
    }
    report.campaign = "bipartize";
    report.params = {{"n", range_text(n)}, {"eps_eq", fmt12(eps_eq)}};
    report.finalize();
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

}  // namespace sek

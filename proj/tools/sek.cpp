#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sek/campaign.hpp"
#include "sek/extremal.hpp"
#include "sek/graph6.hpp"
#include "sek/search.hpp"
#include "sek/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

// Malformed input, reported with its line and byte offset.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double eps_from_env() {
    const char* text = std::getenv("SEK_EPS_EQ");
    if (!text || !*text) return sek::kDefaultEpsEq;
    char* end = nullptr;
    const double v = std::strtod(text, &end);
    if (*end != '\0' || !(v >= 0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("SEK_EPS_EQ is not a nonnegative number: ") + text);
    }
    return v;
}

struct GraphSource {
    std::string file;
    std::string literal;

    void attach(CLI::App& cmd) {
        cmd.add_option("file", file, "graph6 file, one graph per line (stdin if omitted)");
        cmd.add_option("--graph", literal, "single graph6 string");
    }

    std::vector<sek::Graph> read() const {
        if (!literal.empty()) return {parse(literal, 1)};
        std::ifstream in;
        if (!file.empty()) {
            in.open(file);
            if (!in) throw std::invalid_argument("cannot open " + file);
        }
        std::istream& src = file.empty() ? std::cin : in;
        std::vector<sek::Graph> out;
        std::string line;
        for (int number = 1; std::getline(src, line); ++number) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            out.push_back(parse(line, number));
        }
        return out;
    }

  private:
    static sek::Graph parse(const std::string& line, int number) {
        try {
            return sek::from_graph6(line);
        } catch (const sek::Graph6Error& e) {
            std::ostringstream msg;
            msg << "malformed graph6 on line " << number << ": " << e.what();
            throw InputError(msg.str());
        }
    }
};

class Output {
  public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw std::invalid_argument("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// Eigenvalues within solver accuracy of zero print as 0 so records carry no rounding noise.
double printable(double v) { return std::abs(v) <= sek::kSolverTol ? 0.0 : sek::round12(v); }

nlohmann::ordered_json spectrum_record(const sek::Graph& g) {
    const auto s = sek::spectrum(g);
    nlohmann::ordered_json j;
    j["graph6"] = sek::to_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.size();
    j["spectrum"] = nlohmann::ordered_json::array();
    for (double v : s.values) j["spectrum"].push_back(printable(v));
    j["least"] = printable(s.values.back());
    j["radius"] = printable(std::max(s.values.front(), -s.values.back()));
    j["bipartite"] = sek::is_bipartite(g);
    return j;
}

int cmd_spectrum(const GraphSource& source, Output& out) {
    const auto graphs = source.read();
    if (graphs.empty()) throw InputError("no graph6 input");
    for (const auto& g : graphs) out.stream() << spectrum_record(g).dump() << '\n';
    return kExitOk;
}

int cmd_bipartize(const GraphSource& source, Output& out, double eps) {
    const auto graphs = source.read();
    if (graphs.empty()) throw InputError("no graph6 input");
    int status = kExitOk;
    for (const auto& g : graphs) {
        const auto h = sek::spanning_bipartite_subgraph(g);
        const double before = sek::least_eigenvalue(g);
        const double after = sek::least_eigenvalue(h.graph);
        if (after > before + eps) {
            std::cerr << "monotonicity violated on " << sek::to_graph6(g) << '\n';
            status = kExitViolations;
            continue;
        }
        nlohmann::ordered_json j;
        j["input"] = sek::to_graph6(g);
        j["output"] = sek::to_graph6(h.graph);
        j["least_before"] = printable(before);
        j["least_after"] = printable(after);
        out.stream() << j.dump() << '\n';
    }
    return status;
}

struct VerifyOptions {
    std::string which;
    std::string n, t, k, x, y;
    bool radius = false;
    bool no_timing = false;
    int jobs = 1;
};

sek::Range need(const std::string& text, const char* flag) {
    if (text.empty()) throw CLI::RequiredError(flag);
    return sek::Range::parse(text);
}

int cmd_verify(const VerifyOptions& o, Output& out, double eps) {
    using sek::Family;
    sek::CampaignReport report;
    if (o.which == "lemma1") {
        report = sek::run_lemma1_campaign(need(o.x, "--x"), need(o.y, "--y"), need(o.k, "--k"));
    } else if (o.which == "lemma2") {
        report = sek::run_lemma2_campaign(need(o.x, "--x"), need(o.y, "--y"), need(o.k, "--k"));
    } else if (o.which == "thm-cycle" || o.which == "thm-path") {
        const Family f = o.which == "thm-cycle" ? Family::CycleFree : Family::PathFree;
        report = sek::run_theorem_campaign(f, need(o.n, "--n"), need(o.t, "--t"), o.radius, o.jobs, eps);
    } else if (o.which == "rowsum") {
        report = sek::run_rowsum_campaign(need(o.n, "--n"), o.jobs);
    } else {
        report = sek::run_bipartize_campaign(need(o.n, "--n"), o.jobs, eps);
    }
    out.stream() << sek::to_json_line(report, !o.no_timing) << '\n';
    return report.passed() ? kExitOk : kExitViolations;
}

struct SearchOptions {
    int n = 0;
    int t = 0;
    bool cycle = false;
    bool path = false;
    bool bipartite_only = false;
    int jobs = 1;
};

int cmd_search(const SearchOptions& o, Output& out, double eps) {
    if (o.cycle == o.path) throw CLI::ValidationError("search", "exactly one of --cycle or --path is required");
    const auto family = o.cycle ? sek::Family::CycleFree : sek::Family::PathFree;
    const auto res = sek::extremal_search(o.n, o.t, family, o.bipartite_only, o.jobs, eps);

    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["t"] = o.t;
    j["family"] = std::string(sek::to_string(family));
    j["bipartite_only"] = o.bipartite_only;
    j["family_size"] = res.family_size;
    if (res.family_size == 0) {
        j["min"] = nullptr;
    } else {
        j["min"] = sek::round12(res.min_value);
    }
    j["bound"] = sek::round12(res.bound);
    j["argmin"] = res.argmin.size();
    j["recognized"] = res.recognized.size();
    j["sound"] = res.sound;
    j["sharp"] = res.sharp;
    out.stream() << j.dump() << '\n';
    for (const auto& code : res.argmin) out.stream() << code.bytes << '\n';
    return res.sound ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Least-eigenvalue bounds for path- and cycle-free graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the report to FILE instead of stdout");

    GraphSource spectrum_src;
    auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum of graph6 input");
    spectrum_src.attach(*spectrum);

    GraphSource bipartize_src;
    auto* bipartize = app.add_subcommand("bipartize", "spanning bipartite subgraph from the least eigenvector");
    bipartize_src.attach(*bipartize);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "exhaustive verification campaign");
    verify->add_option("which", vo.which, "campaign")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "thm-cycle", "thm-path", "rowsum", "bipartize"}));
    verify->add_option("--n", vo.n, "graph order, N or LO..HI");
    verify->add_option("--t", vo.t, "forbidden order, N or LO..HI");
    verify->add_option("--k", vo.k, "lemma parameter, N or LO..HI");
    verify->add_option("--x", vo.x, "|X|, N or LO..HI");
    verify->add_option("--y", vo.y, "|Y|, N or LO..HI");
    verify->add_flag("--bipartite-radius", vo.radius, "bound the spectral radius of bipartite graphs instead");
    verify->add_flag("--no-timing", vo.no_timing, "print wall_time_ms as 0 for byte-identical reports");
    verify->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::PositiveNumber);

    SearchOptions so;
    auto* search = app.add_subcommand("search", "minimum least eigenvalue over an H-free family");
    search->add_option("--n", so.n, "graph order")->required();
    search->add_option("--t", so.t, "forbidden order")->required();
    search->add_flag("--cycle", so.cycle, "forbid C_t");
    search->add_flag("--path", so.path, "forbid P_t");
    search->add_flag("--bipartite-only", so.bipartite_only, "restrict to bipartite graphs");
    search->add_option("--jobs", so.jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const double eps = eps_from_env();
        Output out(out_path);
        if (*spectrum) return cmd_spectrum(spectrum_src, out);
        if (*bipartize) return cmd_bipartize(bipartize_src, out, eps);
        if (*verify) return cmd_verify(vo, out, eps);
        return cmd_search(so, out, eps);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitViolations;
    }
}

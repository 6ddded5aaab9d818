#include "sek/graph6.hpp"

#include <istream>
#include <ostream>

namespace sek {

namespace {

constexpr int kBias = 63;

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph6Error::Graph6Error(std::size_t offset, const std::string& what)
    : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.reserve(1 + body_length(n));
    out.push_back(static_cast<char>(n + kBias));
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error(0, "empty input");
    const int head = static_cast<unsigned char>(line[0]);
    if (head == 126) throw Graph6Error(0, "long-form order (n > 62) is not supported");
    if (head < kBias || head > kBias + kMaxOrder) throw Graph6Error(0, "invalid order byte");
    const int n = head - kBias;
    const std::size_t need = body_length(n);
    for (std::size_t pos = 1; pos < line.size() && pos <= need; ++pos) {
        const int c = static_cast<unsigned char>(line[pos]);
        if (c < kBias || c > kBias + 63) throw Graph6Error(pos, "byte outside printable graph6 range");
    }
    if (line.size() < need + 1) throw Graph6Error(line.size(), "truncated input");
    if (line.size() > need + 1) throw Graph6Error(need + 1, "trailing bytes after adjacency data");

    std::vector<std::uint64_t> rows(n, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int c = static_cast<unsigned char>(line[1 + bit / 6]) - kBias;
            if ((c >> (5 - bit % 6)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    if (bit % 6 != 0) {
        const int c = static_cast<unsigned char>(line[need]) - kBias;
        if (c & ((1 << (6 - bit % 6)) - 1)) throw Graph6Error(need, "nonzero padding bits");
    }
    return Graph::from_rows(n, std::move(rows));
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace sek

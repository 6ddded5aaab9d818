#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sek/graph.hpp"

namespace sek {

// Malformed graph6 input; offset() is the 0-based byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Short-form graph6 (n <= 62). Padding bits are written as zero and must be zero on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// One graph per line; blank lines are skipped and a trailing '\r' is tolerated.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace sek

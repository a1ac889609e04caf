#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satforge/graph.hpp"

namespace satforge {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record (no trailing newline, optional ">>graph6<<" prefix).
/// Throws Graph6Error on a malformed header, bad characters, wrong length,
/// nonzero padding bits, or n > 64.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// Reads one record per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace satforge

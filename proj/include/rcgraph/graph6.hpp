#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcgraph/small_graph.hpp"

namespace rcg {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Encode in graph6 text format, one token per graph (no trailing newline).
std::string g6_encode(const SmallGraph& g);

/// Decode a single graph6 token. Accepts an optional ">>graph6<<" prefix.
/// Throws Graph6Error on malformed headers, truncated or overlong bit
/// strings, characters outside the printable range and nonzero padding.
SmallGraph g6_decode(std::string_view text);

/// Decode a whole file, one graph per line. Blank lines are skipped.
std::vector<SmallGraph> g6_decode_lines(std::string_view text);

} // namespace rcg

#pragma once

#include <string>

#include "invgraph/graph.hpp"

namespace invgraph {

// graph6 codec, short form only (n <= 62): one header byte n+63, then the
// upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed into
// 6-bit groups, first bit high, zero-padded, each group +63.
// from_graph6 rejects bad headers, wrong length, and nonzero padding.
SimpleGraph from_graph6(const std::string& text);
std::string to_graph6(const SimpleGraph& g);

}  // namespace invgraph

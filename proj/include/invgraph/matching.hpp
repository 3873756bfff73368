#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invgraph/graph.hpp"

namespace invgraph {

// A perfect matching: n/2 disjoint edges covering every vertex,
// each edge (i, j) with i < j, edges sorted.
struct Matching {
  std::vector<std::pair<int, int>> edges;
  bool operator==(const Matching&) const = default;
};

// All perfect matchings, deterministic order (recursion branches on the
// lowest uncovered vertex, neighbors ascending). Empty for odd n; the
// order-0 graph has exactly the empty matching.
std::vector<Matching> perfect_matchings(const SimpleGraph& g);

// The unique perfect matching if exactly one exists, else nullopt.
// Stops counting at the second matching.
std::optional<Matching> has_unique_pm(const SimpleGraph& g);

// An edge of m that is a bridge of g (lowest such edge). Kotzig: when g is
// connected and m is its unique perfect matching, one always exists.
// Throws std::invalid_argument if m is not a perfect matching of g.
std::optional<std::pair<int, int>> kotzig_bridge(const SimpleGraph& g, const Matching& m);

// Corona g o K1: one pendant vertex n+i attached to each vertex i.
SimpleGraph corona(const SimpleGraph& g);

}  // namespace invgraph

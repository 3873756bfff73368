#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "invgraph/exact.hpp"
#include "invgraph/invert.hpp"

namespace invgraph {

// parallel uses the OpenMP kernels; serial is the reference implementation.
// Both return identical, deterministically ordered results.
enum class ExecMode { serial, parallel };

// Connected graphs on n vertices up to isomorphism, as canonical
// representatives in ascending canonical-form order. Exhaustive scan of all
// 2^(n(n-1)/2) edge subsets for n <= 6; for n in {7, 8} augmentation of the
// canonical (n-1)-vertex list by one new vertex (sound: every connected
// graph has a non-cut vertex). Requires 1 <= n <= 8.
std::vector<SimpleGraph> connected_graphs(int n, ExecMode mode = ExecMode::parallel);

// Connected graphs with a unique perfect matching, same order and canonical
// representation as connected_graphs. Empty for odd n.
std::vector<SimpleGraph> unique_pm_graphs(int n, ExecMode mode = ExecMode::parallel);

// Full classification of unique_pm_graphs(n). Indices below refer to
// positions in `graphs`. Containment relations come in two conventions:
//  - self_contained / mutual_pairs: plain subgraph embedding into the
//    inverse skeleton (embeds());
//  - max_self_contained / max_mutual_pairs: membership in the maximal
//    unique-perfect-matching subgraph classes of the inverse skeleton.
struct Census {
  int n = 0;
  std::vector<SimpleGraph> graphs;
  std::vector<Classification> classifications;
  std::vector<std::optional<InverseGraph>> inverses;       // nullopt when not signable
  std::vector<IntPolynomial> char_polys;
  std::vector<std::vector<SimpleGraph>> inverse_max_subgraphs;  // empty when no inverse
  std::map<Verdict, int> counts;
  std::vector<std::pair<int, int>> isospectral_pairs;      // equal char_poly, i < j
  std::vector<int> selfinvertible;
  std::vector<int> self_contained;
  std::vector<std::pair<int, int>> mutual_pairs;           // i < j
  std::vector<int> max_self_contained;
  std::vector<std::pair<int, int>> max_mutual_pairs;       // i < j
};

// n = 8 is supported but experimental (minutes of CPU, large output).
Census census(int n, ExecMode mode = ExecMode::parallel);

}  // namespace invgraph

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invgraph/exact.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

enum class SignTarget { nonnegative, nonpositive };

// Diagonal +-1 signing, d[v] in {+1, -1}. Canonical: the lowest-index
// vertex of every connected component of the off-diagonal support graph
// gets +1; vertices isolated in the support graph get +1.
struct Signing {
  std::vector<int> d;
  bool operator==(const Signing&) const = default;
};

enum class Verdict {
  bipartite_both,    // integral, signable to both signs (iff bipartite)
  positive_only,
  negative_only,
  integral_neither,
  non_integral,      // invertible, inverse not integral
  singular,
};

std::string to_string(Verdict v);
std::optional<Verdict> verdict_from_string(const std::string& s);

struct Classification {
  SimpleGraph graph;
  Int det;                                  // signed determinant
  bool integral = false;                    // A^-1 exists and is integral
  bool bipartite = false;
  std::optional<Signing> positive_signing;  // D with D A^-1 D >= 0
  std::optional<Signing> negative_signing;  // D with D A^-1 D <= 0
  Verdict verdict = Verdict::singular;
};

struct not_invertible_error : std::domain_error {
  Verdict verdict;
  explicit not_invertible_error(Verdict v)
      : std::domain_error("graph is not invertible: " + to_string(v)), verdict(v) {}
};

// The canonical signing D with D b D entrywise >= 0 (nonnegative) or <= 0
// (nonpositive), if one exists. Diagonal entries must already have the
// target sign; off-diagonal constraints propagate by parity.
// Throws std::invalid_argument if b is not symmetric.
std::optional<Signing> signability(const IntMatrix& b, SignTarget target);

Classification classify(const SimpleGraph& g);

// Inverse graph s * D A^-1 D of an invertible graph: a nonnegative integer
// matrix read back as a multigraph. sign is +1 (positive signing, preferred
// when both exist) or -1 (negative signing).
struct InverseGraph {
  Multigraph graph;
  Signing signing;
  int sign = 0;
  bool operator==(const InverseGraph&) const = default;
};

// Throws not_invertible_error unless the verdict admits a signing
// (bipartite_both, positive_only, negative_only).
InverseGraph inverse_graph(const SimpleGraph& g);

// Checks A = s * D (A_H)^-1 D exactly, i.e. inverting the inverse graph
// with the same signing returns g. Throws like inverse_graph.
bool involution_check(const SimpleGraph& g);

// g isomorphic to its own inverse graph as a multigraph (so the inverse
// must be simple: no loops, no multi-edges). Throws like inverse_graph.
bool is_selfinvertible(const SimpleGraph& g);

// Edge-maximal subgraphs of h's skeleton (on all order() vertices) that
// have a unique perfect matching, deduplicated up to isomorphism, as
// canonical representatives sorted by canonical form. Requires n <= 8.
std::vector<SimpleGraph> max_unique_pm_subgraphs(const Multigraph& h);

}  // namespace invgraph

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace invgraph {

// perm[v] = image of v. Valid iff it is a bijection on {0..n-1}.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);

// Undirected simple graph, no loops, vertices 0..n-1, n <= 62.
// Adjacency is kept as one 64-bit neighbor mask per vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;
  bool edge(int i, int j) const;
  void add_edge(int i, int j);     // i != j, both in range
  void remove_edge(int i, int j);
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, i < j

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Undirected multigraph with loops, stored as a symmetric nonnegative
// integer weight matrix. weight(i,i) is the loop multiplicity as-is
// (a weight-2 loop is stored as 2, not halved).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);
  static Multigraph from_simple(const SimpleGraph& g);

  int order() const { return n_; }
  int weight(int i, int j) const;
  void set_weight(int i, int j, int w);  // w >= 0, keeps symmetry
  int total_weight() const;              // sum over i <= j
  bool has_loops() const;
  bool has_multi_edges() const;          // some off-diagonal weight >= 2
  SimpleGraph skeleton() const;          // loops dropped, weights flattened to 1

  bool operator==(const Multigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<int> w_;  // row-major n*n
};

SimpleGraph relabel(const SimpleGraph& g, const Permutation& p);
Multigraph relabel(const Multigraph& g, const Permutation& p);

bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

// Bridges (cut edges), sorted with i < j.
std::vector<std::pair<int, int>> bridges(const SimpleGraph& g);

// Canonical form: the lexicographically smallest graph6 string of any
// relabeling of g. Equal strings iff isomorphic. Requires n <= 8.
std::string canonical_form(const SimpleGraph& g);
// The relabeling that realizes canonical_form.
SimpleGraph canonical_relabeling(const SimpleGraph& g);

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h);
// Multigraph isomorphism requires exact weight equality (loops included).
bool is_isomorphic(const Multigraph& g, const Multigraph& h);

// Injective vertex map of g into h sending every edge of g onto an edge of
// h's skeleton (loops in h ignored). Not induced. Returns a witness map.
std::optional<Permutation> find_embedding(const SimpleGraph& g, const Multigraph& h);
bool embeds(const SimpleGraph& g, const Multigraph& h);

// DOT output; vertices are printed 1-based.
std::string to_dot(const SimpleGraph& g);
std::string to_dot(const Multigraph& g);

}  // namespace invgraph

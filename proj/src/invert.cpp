#include "invgraph/invert.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "invgraph/graph6.hpp"
#include "invgraph/matching.hpp"

namespace invgraph {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bipartite_both: return "bipartite-both";
    case Verdict::positive_only: return "positive-only";
    case Verdict::negative_only: return "negative-only";
    case Verdict::integral_neither: return "integral-neither";
    case Verdict::non_integral: return "non-integral";
    case Verdict::singular: return "singular";
  }
  throw std::logic_error("to_string: bad verdict");
}

std::optional<Verdict> verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::bipartite_both, Verdict::positive_only, Verdict::negative_only,
                    Verdict::integral_neither, Verdict::non_integral, Verdict::singular})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::optional<Signing> signability(const IntMatrix& b, SignTarget target) {
  if (!b.is_symmetric()) throw std::invalid_argument("signability: matrix must be symmetric");
  int n = b.size();
  // Diagonal entries are invariant under diagonal similarity.
  for (int i = 0; i < n; ++i) {
    const Int& d = b.at(i, i);
    if (target == SignTarget::nonnegative ? d < 0 : d > 0) return std::nullopt;
  }
  // Off-diagonal support: entry b_ij != 0 forces d_i*d_j = sign(b_ij) for
  // the nonnegative target and the opposite for nonpositive. Propagate by
  // BFS; the lowest-indexed vertex of each support component gets +1.
  std::vector<int> d(n, 0);
  for (int root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (u == v || b.at(v, u) == 0) continue;
        int s = b.at(v, u) > 0 ? 1 : -1;
        int need = (target == SignTarget::nonnegative ? s : -s) * d[v];
        if (d[u] == 0) {
          d[u] = need;
          stack.push_back(u);
        } else if (d[u] != need) {
          return std::nullopt;
        }
      }
    }
  }
  return Signing{std::move(d)};
}

Classification classify(const SimpleGraph& g) {
  Classification c;
  c.graph = g;
  c.bipartite = is_bipartite(g);
  IntMatrix a = adjacency_matrix(g);
  c.det = determinant(a);
  if (c.det == 0) {
    c.verdict = Verdict::singular;
    return c;
  }
  auto integral = is_integral(inverse_exact(a));
  if (!integral) {
    c.verdict = Verdict::non_integral;
    return c;
  }
  c.integral = true;
  c.positive_signing = signability(*integral, SignTarget::nonnegative);
  c.negative_signing = signability(*integral, SignTarget::nonpositive);
  if (c.positive_signing && c.negative_signing) c.verdict = Verdict::bipartite_both;
  else if (c.positive_signing) c.verdict = Verdict::positive_only;
  else if (c.negative_signing) c.verdict = Verdict::negative_only;
  else c.verdict = Verdict::integral_neither;
  return c;
}

InverseGraph inverse_graph(const SimpleGraph& g) {
  Classification c = classify(g);
  const std::optional<Signing>* chosen = nullptr;
  int s = 0;
  if (c.positive_signing) {  // preferred when both signings exist
    chosen = &c.positive_signing;
    s = 1;
  } else if (c.negative_signing) {
    chosen = &c.negative_signing;
    s = -1;
  } else {
    throw not_invertible_error(c.verdict);
  }
  IntMatrix b = *is_integral(inverse_exact(adjacency_matrix(g)));
  int n = b.size();
  const std::vector<int>& d = (*chosen)->d;
  IntMatrix w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.at(i, j) = s * d[i] * d[j] * b.at(i, j);
  return InverseGraph{multigraph_from_matrix(w), **chosen, s};
}

bool involution_check(const SimpleGraph& g) {
  InverseGraph inv = inverse_graph(g);
  RationalMatrix r = inverse_exact(adjacency_matrix(inv.graph));
  int n = g.order();
  const std::vector<int>& d = inv.signing.d;
  IntMatrix a = adjacency_matrix(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (Rational(inv.sign * d[i] * d[j]) * r.at(i, j) != Rational(a.at(i, j))) return false;
  return true;
}

bool is_selfinvertible(const SimpleGraph& g) {
  InverseGraph inv = inverse_graph(g);
  return is_isomorphic(Multigraph::from_simple(g), inv.graph);
}

namespace {

// Perfect-matching count of an edge subset, capped at 2, memoized.
struct PmCounter {
  int n;
  std::vector<std::pair<int, int>> edges;
  std::unordered_map<std::uint32_t, int> memo;

  int count(std::uint32_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    SimpleGraph g(n);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1) g.add_edge(edges[e].first, edges[e].second);
    int c = std::min<int>(2, static_cast<int>(perfect_matchings(g).size()));
    memo.emplace(mask, c);
    return c;
  }
};

}  // namespace

std::vector<SimpleGraph> max_unique_pm_subgraphs(const Multigraph& h) {
  int n = h.order();
  if (n > 8) throw std::invalid_argument("max_unique_pm_subgraphs: order must be <= 8");
  SimpleGraph skel = h.skeleton();
  PmCounter pm{n, skel.edges(), {}};
  int m = static_cast<int>(pm.edges.size());
  std::uint32_t full = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;

  // Matching counts only drop when edges are removed, so the unique-PM
  // region is downward closed and no proper subset of a unique-PM set can
  // be edge-maximal. Walk down from the full skeleton through supersets
  // with >= 2 matchings; stop each branch at its first unique-PM set.
  std::vector<std::uint32_t> candidates;
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack{full};
  seen.insert(full);
  while (!stack.empty()) {
    std::uint32_t mask = stack.back();
    stack.pop_back();
    int c = pm.count(mask);
    if (c == 1) candidates.push_back(mask);
    if (c != 2) continue;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      std::uint32_t sub = mask & ~(std::uint32_t{1} << e);
      if (seen.insert(sub).second) stack.push_back(sub);
    }
  }

  std::map<std::string, SimpleGraph> classes;
  for (std::uint32_t mask : candidates) {
    bool maximal = true;
    for (int e = 0; e < m && maximal; ++e)
      if (!(mask >> e & 1)) maximal = pm.count(mask | (std::uint32_t{1} << e)) >= 2;
    if (!maximal) continue;
    SimpleGraph g(n);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) g.add_edge(pm.edges[e].first, pm.edges[e].second);
    SimpleGraph canon = canonical_relabeling(g);
    classes.emplace(to_graph6(canon), canon);
  }
  std::vector<SimpleGraph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(g);
  return out;
}

}  // namespace invgraph

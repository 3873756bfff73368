#include "invgraph/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace invgraph {

namespace {

// Branch on the lowest uncovered vertex, neighbors ascending. Edges enter
// the partial matching in increasing first-vertex order, so the output list
// is lexicographic by sorted edge list. Stops once `cap` matchings exist.
void pm_rec(const SimpleGraph& g, std::uint64_t covered, std::uint64_t all,
            std::vector<std::pair<int, int>>& partial,
            std::vector<Matching>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (covered == all) {
    out.push_back(Matching{partial});
    return;
  }
  int v = std::countr_zero(~covered);
  for (std::uint64_t m = g.neighbor_mask(v) & ~covered; m; m &= m - 1) {
    int u = std::countr_zero(m);
    partial.emplace_back(v, u);
    pm_rec(g, covered | (std::uint64_t{1} << v) | (std::uint64_t{1} << u), all, partial, out, cap);
    partial.pop_back();
    if (out.size() >= cap) return;
  }
}

std::vector<Matching> matchings_capped(const SimpleGraph& g, std::size_t cap) {
  std::vector<Matching> out;
  int n = g.order();
  if (n % 2 != 0) return out;
  std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::pair<int, int>> partial;
  partial.reserve(n / 2);
  pm_rec(g, 0, all, partial, out, cap);
  return out;
}

}  // namespace

std::vector<Matching> perfect_matchings(const SimpleGraph& g) {
  return matchings_capped(g, static_cast<std::size_t>(-1));
}

std::optional<Matching> has_unique_pm(const SimpleGraph& g) {
  auto found = matchings_capped(g, 2);
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

std::optional<std::pair<int, int>> kotzig_bridge(const SimpleGraph& g, const Matching& m) {
  int n = g.order();
  std::uint64_t covered = 0;
  for (auto [i, j] : m.edges) {
    if (i < 0 || j < 0 || i >= n || j >= n || !g.edge(i, j))
      throw std::invalid_argument("kotzig_bridge: matching uses a non-edge");
    std::uint64_t pair = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    if (covered & pair) throw std::invalid_argument("kotzig_bridge: matching edges overlap");
    covered |= pair;
  }
  if (covered != (std::uint64_t{1} << n) - 1)
    throw std::invalid_argument("kotzig_bridge: matching is not perfect");

  auto cut = bridges(g);
  std::vector<std::pair<int, int>> sorted_edges;
  for (auto [i, j] : m.edges) sorted_edges.emplace_back(std::min(i, j), std::max(i, j));
  std::sort(sorted_edges.begin(), sorted_edges.end());
  for (auto e : sorted_edges)
    if (std::binary_search(cut.begin(), cut.end(), e)) return e;
  return std::nullopt;
}

SimpleGraph corona(const SimpleGraph& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("corona: base graph must have a vertex");
  SimpleGraph out(2 * n);
  for (auto [i, j] : g.edges()) out.add_edge(i, j);
  for (int i = 0; i < n; ++i) out.add_edge(i, n + i);
  return out;
}

}  // namespace invgraph

#include "invgraph/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "invgraph/graph6.hpp"
#include "invgraph/matching.hpp"

namespace invgraph {

namespace {

std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

SimpleGraph graph_from_mask(int n, std::uint32_t mask,
                            const std::vector<std::pair<int, int>>& pairs) {
  SimpleGraph g(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
  return g;
}

bool unique_pm_filter(const SimpleGraph& g) { return has_unique_pm(g).has_value(); }

std::vector<SimpleGraph> from_canon_set(const std::set<std::string>& canon) {
  std::vector<SimpleGraph> out;
  out.reserve(canon.size());
  for (const std::string& s : canon) out.push_back(from_graph6(s));
  return out;
}

// Exhaustive scan over all 2^(n(n-1)/2) edge subsets, keeping connected
// graphs that pass `extra`, deduplicated by canonical form.
template <class Extra>
std::set<std::string> scan_subsets_serial(int n, Extra&& extra) {
  auto pairs = pair_order(n);
  std::uint32_t total = std::uint32_t{1} << pairs.size();
  std::set<std::string> canon;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    SimpleGraph g = graph_from_mask(n, mask, pairs);
    if (!is_connected(g) || !extra(g)) continue;
    canon.insert(canonical_form(g));
  }
  return canon;
}

template <class Extra>
std::set<std::string> scan_subsets_parallel(int n, Extra&& extra) {
#ifdef _OPENMP
  auto pairs = pair_order(n);
  std::int64_t total = std::int64_t{1} << pairs.size();
  std::set<std::string> canon;
#pragma omp parallel
  {
    std::set<std::string> local;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      SimpleGraph g = graph_from_mask(n, static_cast<std::uint32_t>(mask), pairs);
      if (!is_connected(g) || !extra(g)) continue;
      local.insert(canonical_form(g));
    }
#pragma omp critical(invgraph_scan_merge)
    canon.merge(local);
  }
  return canon;
#else
  return scan_subsets_serial(n, std::forward<Extra>(extra));
#endif
}

// One-vertex augmentation: attach a new vertex to every nonempty subset of
// a connected parent's vertices. Complete because every connected graph has
// a non-cut vertex whose removal leaves a connected parent.
std::set<std::string> augment_serial(int n, const std::vector<SimpleGraph>& parents) {
  std::set<std::string> canon;
  for (const SimpleGraph& parent : parents) {
    std::uint32_t subsets = std::uint32_t{1} << (n - 1);
    for (std::uint32_t s = 1; s < subsets; ++s) {
      SimpleGraph g(n);
      for (auto [i, j] : parent.edges()) g.add_edge(i, j);
      for (int v = 0; v < n - 1; ++v)
        if (s >> v & 1) g.add_edge(v, n - 1);
      canon.insert(canonical_form(g));
    }
  }
  return canon;
}

std::set<std::string> augment_parallel(int n, const std::vector<SimpleGraph>& parents) {
#ifdef _OPENMP
  std::set<std::string> canon;
  std::int64_t subsets = std::int64_t{1} << (n - 1);
  std::int64_t total = static_cast<std::int64_t>(parents.size()) * (subsets - 1);
#pragma omp parallel
  {
    std::set<std::string> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const SimpleGraph& parent = parents[idx / (subsets - 1)];
      std::uint32_t s = static_cast<std::uint32_t>(idx % (subsets - 1)) + 1;
      SimpleGraph g(n);
      for (auto [i, j] : parent.edges()) g.add_edge(i, j);
      for (int v = 0; v < n - 1; ++v)
        if (s >> v & 1) g.add_edge(v, n - 1);
      local.insert(canonical_form(g));
    }
#pragma omp critical(invgraph_augment_merge)
    canon.merge(local);
  }
  return canon;
#else
  return augment_serial(n, parents);
#endif
}

void check_n(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration: n must be in 1..8");
}

}  // namespace

std::vector<SimpleGraph> connected_graphs(int n, ExecMode mode) {
  check_n(n);
  if (n <= 6) {
    auto keep = [](const SimpleGraph&) { return true; };
    return from_canon_set(mode == ExecMode::parallel ? scan_subsets_parallel(n, keep)
                                                     : scan_subsets_serial(n, keep));
  }
  auto parents = connected_graphs(n - 1, mode);
  return from_canon_set(mode == ExecMode::parallel ? augment_parallel(n, parents)
                                                   : augment_serial(n, parents));
}

std::vector<SimpleGraph> unique_pm_graphs(int n, ExecMode mode) {
  check_n(n);
  if (n % 2 != 0) return {};
  if (n <= 6) {
    return from_canon_set(mode == ExecMode::parallel
                              ? scan_subsets_parallel(n, unique_pm_filter)
                              : scan_subsets_serial(n, unique_pm_filter));
  }
  // Augmented lists are already canonical and sorted; filtering keeps that.
  std::vector<SimpleGraph> out;
  for (const SimpleGraph& g : connected_graphs(n, mode))
    if (unique_pm_filter(g)) out.push_back(g);
  return out;
}

namespace {

template <class Body>
void for_each_index(int count, ExecMode mode, Body&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
#else
  (void)mode;
#endif
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace

Census census(int n, ExecMode mode) {
  check_n(n);
  Census c;
  c.n = n;
  c.graphs = unique_pm_graphs(n, mode);
  int k = static_cast<int>(c.graphs.size());
  c.classifications.resize(k);
  c.inverses.resize(k);
  c.char_polys.resize(k);
  c.inverse_max_subgraphs.resize(k);

  // Per-graph work is independent; results land at fixed indices, so the
  // assembly below is deterministic for either mode.
  for_each_index(k, mode, [&](int i) {
    const SimpleGraph& g = c.graphs[i];
    c.classifications[i] = classify(g);
    c.char_polys[i] = char_poly(adjacency_matrix(g));
    const Classification& cls = c.classifications[i];
    if (cls.positive_signing || cls.negative_signing) {
      c.inverses[i] = inverse_graph(g);
      c.inverse_max_subgraphs[i] = max_unique_pm_subgraphs(c.inverses[i]->graph);
    }
  });

  for (Verdict v : {Verdict::bipartite_both, Verdict::positive_only, Verdict::negative_only,
                    Verdict::integral_neither, Verdict::non_integral, Verdict::singular})
    c.counts[v] = 0;
  for (const Classification& cls : c.classifications) ++c.counts[cls.verdict];

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (c.char_polys[i] == c.char_polys[j]) c.isospectral_pairs.emplace_back(i, j);

  for (int i = 0; i < k; ++i)
    if (c.inverses[i] && is_isomorphic(Multigraph::from_simple(c.graphs[i]), c.inverses[i]->graph))
      c.selfinvertible.push_back(i);

  // Subgraph-embedding relations, then the maximal-subgraph variant.
  std::vector<std::uint8_t> embedded(static_cast<std::size_t>(k) * k, 0);
  for_each_index(k * k, mode, [&](int idx) {
    int i = idx / k, j = idx % k;
    if (c.inverses[j]) embedded[idx] = embeds(c.graphs[i], c.inverses[j]->graph) ? 1 : 0;
  });
  for (int i = 0; i < k; ++i)
    if (embedded[static_cast<std::size_t>(i) * k + i]) c.self_contained.push_back(i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (embedded[static_cast<std::size_t>(i) * k + j] &&
          embedded[static_cast<std::size_t>(j) * k + i])
        c.mutual_pairs.emplace_back(i, j);

  // Census members are canonical representatives, so membership in a
  // maximal class is plain graph6 equality.
  auto in_max_classes = [&](int member, int inverse_of) {
    const std::string key = to_graph6(c.graphs[member]);
    for (const SimpleGraph& s : c.inverse_max_subgraphs[inverse_of])
      if (to_graph6(s) == key) return true;
    return false;
  };
  for (int i = 0; i < k; ++i)
    if (c.inverses[i] && in_max_classes(i, i)) c.max_self_contained.push_back(i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (c.inverses[i] && c.inverses[j] && in_max_classes(i, j) && in_max_classes(j, i))
        c.max_mutual_pairs.emplace_back(i, j);

  return c;
}

}  // namespace invgraph

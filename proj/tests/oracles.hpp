// Independent reference implementations used only to cross-check the
// library. Deliberately naive: different algorithms, shared code kept to
// the public graph types.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "invgraph/exact.hpp"
#include "invgraph/graph.hpp"

namespace oracle {

using invgraph::Int;
using invgraph::IntMatrix;
using invgraph::Multigraph;
using invgraph::SimpleGraph;

// graph6 built bit-by-bit from the format definition.
inline std::string graph6_encode(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.edge(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = v * 2 + bits[k + t];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

// Component count by plain vertex-list flood fill.
inline int component_count(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int u = 0; u < n; ++u)
        if (g.edge(v, u) && comp[u] == -1) {
          comp[u] = count;
          queue.push_back(u);
        }
    }
    ++count;
  }
  return count;
}

// Bridges by delete-and-recount.
inline std::vector<std::pair<int, int>> bridges_naive(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  int base = component_count(g);
  for (auto [i, j] : g.edges()) {
    SimpleGraph h = g;
    h.remove_edge(i, j);
    if (component_count(h) > base) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Perfect matchings counted by scanning all (n/2)-subsets of the edge set.
inline int pm_count_subsets(const SimpleGraph& g) {
  int n = g.order();
  if (n % 2 != 0) return 0;
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  int want = n / 2;
  int count = 0;
  std::vector<int> idx(want);
  auto scan = [&](auto&& self, int pos, int from) -> void {
    if (pos == want) {
      std::uint64_t covered = 0;
      for (int k = 0; k < want; ++k) {
        auto [a, b] = edges[idx[k]];
        std::uint64_t bits = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        if (covered & bits) return;
        covered |= bits;
      }
      ++count;
      return;
    }
    for (int e = from; e < m; ++e) {
      idx[pos] = e;
      self(self, pos + 1, e + 1);
    }
  };
  if (want <= m) scan(scan, 0, 0);
  return count;
}

// Laplace cofactor expansion along the first row.
inline Int det_laplace(const std::vector<std::vector<Int>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int total = 0;
  for (int col = 0; col < n; ++col) {
    if (a[0][col] == 0) continue;
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][jj++] = a[i][j];
      }
    }
    Int term = a[0][col] * det_laplace(minor);
    total += (col % 2 == 0) ? term : -term;
  }
  return total;
}

inline Int det_laplace(const IntMatrix& m) {
  std::vector<std::vector<Int>> a(m.size(), std::vector<Int>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) a[i][j] = m.at(i, j);
  return det_laplace(a);
}

// All sign vectors d with diag(d) b diag(d) of the target sign, by brute
// force over all 2^n of them. d[0] spans both values, so existence here
// matches existence up to global flips.
inline std::vector<std::vector<int>> brute_signings(const IntMatrix& b, bool nonnegative) {
  int n = b.size();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = (mask >> i & 1) ? -1 : 1;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Int e = Int(d[i]) * d[j] * b.at(i, j);
        ok = nonnegative ? e >= 0 : e <= 0;
      }
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline invgraph::Permutation random_permutation(std::mt19937& rng, int n) {
  invgraph::Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline IntMatrix random_symmetric(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int v = dist(rng);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

inline IntMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace oracle

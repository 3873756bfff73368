#include "invgraph/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "invgraph/graph6.hpp"

namespace invgraph {

namespace {

constexpr int kMaxVertices = 62;   // short-form graph6 ceiling
constexpr int kCanonLimit = 8;     // permutation search ceiling

void check_vertex(const char* who, int n, int v) {
  if (v < 0 || v >= n) throw std::out_of_range(std::string(who) + ": vertex out of range");
}

}  // namespace

bool is_permutation(const Permutation& p) {
  std::uint64_t seen = 0;
  int n = static_cast<int>(p.size());
  for (int v : p) {
    if (v < 0 || v >= n || (seen >> v & 1)) return false;
    seen |= std::uint64_t{1} << v;
  }
  return true;
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("SimpleGraph: order must be in 0..62");
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (std::uint64_t row : adj_) total += std::popcount(row);
  return total / 2;
}

bool SimpleGraph::edge(int i, int j) const {
  check_vertex("edge", n_, i);
  check_vertex("edge", n_, j);
  return adj_[i] >> j & 1;
}

void SimpleGraph::add_edge(int i, int j) {
  check_vertex("add_edge", n_, i);
  check_vertex("add_edge", n_, j);
  if (i == j) throw std::invalid_argument("add_edge: loops are not allowed");
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

void SimpleGraph::remove_edge(int i, int j) {
  check_vertex("remove_edge", n_, i);
  check_vertex("remove_edge", n_, j);
  adj_[i] &= ~(std::uint64_t{1} << j);
  adj_[j] &= ~(std::uint64_t{1} << i);
}

int SimpleGraph::degree(int v) const {
  check_vertex("degree", n_, v);
  return std::popcount(adj_[v]);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (std::uint64_t m = adj_[i] >> (i + 1) << (i + 1); m; m &= m - 1)
      out.emplace_back(i, std::countr_zero(m));
  return out;
}

Multigraph::Multigraph(int n) : n_(n), w_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0)) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Multigraph: order must be in 0..62");
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
  Multigraph m(g.order());
  for (auto [i, j] : g.edges()) m.set_weight(i, j, 1);
  return m;
}

int Multigraph::weight(int i, int j) const {
  check_vertex("weight", n_, i);
  check_vertex("weight", n_, j);
  return w_[static_cast<std::size_t>(i) * n_ + j];
}

void Multigraph::set_weight(int i, int j, int w) {
  check_vertex("set_weight", n_, i);
  check_vertex("set_weight", n_, j);
  if (w < 0) throw std::invalid_argument("set_weight: weights must be nonnegative");
  w_[static_cast<std::size_t>(i) * n_ + j] = w;
  w_[static_cast<std::size_t>(j) * n_ + i] = w;
}

int Multigraph::total_weight() const {
  int total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) total += weight(i, j);
  return total;
}

bool Multigraph::has_loops() const {
  for (int i = 0; i < n_; ++i)
    if (weight(i, i) != 0) return true;
  return false;
}

bool Multigraph::has_multi_edges() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (weight(i, j) >= 2) return true;
  return false;
}

SimpleGraph Multigraph::skeleton() const {
  SimpleGraph g(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (weight(i, j) >= 1) g.add_edge(i, j);
  return g;
}

SimpleGraph relabel(const SimpleGraph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.order() || !is_permutation(p))
    throw std::invalid_argument("relabel: not a permutation of the vertex set");
  SimpleGraph out(g.order());
  for (auto [i, j] : g.edges()) out.add_edge(p[i], p[j]);
  return out;
}

Multigraph relabel(const Multigraph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.order() || !is_permutation(p))
    throw std::invalid_argument("relabel: not a permutation of the vertex set");
  Multigraph out(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i; j < g.order(); ++j) out.set_weight(p[i], p[j], g.weight(i, j));
  return out;
}

bool is_connected(const SimpleGraph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == all;
}

bool is_bipartite(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> bridges(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> tin(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> out;
  int timer = 0;
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    tin[v] = low[v] = timer++;
    for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (u == parent) continue;  // simple graph: exactly one parent edge
      if (tin[u] != -1) {
        low[v] = std::min(low[v], tin[u]);
      } else {
        self(self, u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] > tin[v]) out.emplace_back(std::min(v, u), std::max(v, u));
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (tin[v] == -1) dfs(dfs, v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Upper-triangle bits in graph6 column order (0,1),(0,2),(1,2),(0,3),...
// packed MSB-first into one word; lexicographic order on the bit string is
// numeric order on the word. n <= 8 keeps this within 28 bits.
int pair_pos(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint32_t upper_bits(const SimpleGraph& g) {
  int n = g.order(), m = n * (n - 1) / 2;
  std::uint32_t bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.edge(i, j)) bits |= std::uint32_t{1} << (m - 1 - pair_pos(i, j));
  return bits;
}

SimpleGraph graph_from_bits(int n, std::uint32_t bits) {
  int m = n * (n - 1) / 2;
  SimpleGraph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits >> (m - 1 - pair_pos(i, j)) & 1) g.add_edge(i, j);
  return g;
}

struct CanonState {
  const SimpleGraph* g = nullptr;
  int n = 0, m = 0;
  std::uint32_t best = 0;
  std::uint32_t cur = 0;
  std::uint32_t used = 0;
  std::array<int, kCanonLimit> chosen{};
};

// Branch and bound over positions: chosen[d] is the old vertex placed at
// new position d; a branch dies as soon as its bit prefix exceeds the
// current best. Pruning against a shrinking best is always sound.
void canon_rec(CanonState& s, int depth) {
  if (depth == s.n) {
    if (s.cur < s.best) s.best = s.cur;
    return;
  }
  int filled = depth * (depth + 1) / 2;
  std::uint32_t prefix_mask =
      filled == 0 ? 0 : ~((std::uint32_t{1} << (s.m - filled)) - 1);
  for (int v = 0; v < s.n; ++v) {
    if (s.used >> v & 1) continue;
    std::uint32_t nxt = s.cur;
    for (int i = 0; i < depth; ++i)
      if (s.g->edge(s.chosen[i], v)) nxt |= std::uint32_t{1} << (s.m - 1 - pair_pos(i, depth));
    if ((nxt & prefix_mask) > (s.best & prefix_mask)) continue;
    s.chosen[depth] = v;
    s.used |= std::uint32_t{1} << v;
    std::uint32_t saved = s.cur;
    s.cur = nxt;
    canon_rec(s, depth + 1);
    s.cur = saved;
    s.used &= ~(std::uint32_t{1} << v);
  }
}

}  // namespace

SimpleGraph canonical_relabeling(const SimpleGraph& g) {
  if (g.order() > kCanonLimit)
    throw std::invalid_argument("canonical_form: order must be <= 8");
  if (g.order() < 2) return g;
  CanonState s;
  s.g = &g;
  s.n = g.order();
  s.m = s.n * (s.n - 1) / 2;
  s.best = upper_bits(g);
  canon_rec(s, 0);
  return graph_from_bits(s.n, s.best);
}

std::string canonical_form(const SimpleGraph& g) {
  return to_graph6(canonical_relabeling(g));
}

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() > kCanonLimit || h.order() > kCanonLimit)
    throw std::invalid_argument("is_isomorphic: order must be <= 8");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace {

bool mg_iso_rec(const Multigraph& a, const Multigraph& b, std::vector<int>& map,
                std::uint32_t used, int depth) {
  int n = a.order();
  if (depth == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used >> v & 1) continue;
    if (a.weight(depth, depth) != b.weight(v, v)) continue;
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i)
      ok = a.weight(i, depth) == b.weight(map[i], v);
    if (!ok) continue;
    map[depth] = v;
    if (mg_iso_rec(a, b, map, used | (std::uint32_t{1} << v), depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.order() > kCanonLimit || h.order() > kCanonLimit)
    throw std::invalid_argument("is_isomorphic: order must be <= 8");
  if (g.order() != h.order()) return false;
  int n = g.order();
  auto profile = [n](const Multigraph& m) {
    std::vector<std::pair<int, int>> p(n);  // (loop, weighted degree)
    for (int i = 0; i < n; ++i) {
      int deg = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) deg += m.weight(i, j);
      p[i] = {m.weight(i, i), deg};
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(g) != profile(h)) return false;
  std::vector<int> map(n);
  return mg_iso_rec(g, h, map, 0, 0);
}

namespace {

bool embed_rec(const SimpleGraph& g, const SimpleGraph& skel, std::vector<int>& map,
               std::uint32_t used, int depth) {
  int n = g.order();
  if (depth == n) return true;
  for (int v = 0; v < skel.order(); ++v) {
    if (used >> v & 1) continue;
    if (skel.degree(v) < g.degree(depth)) continue;
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i)
      if (g.edge(i, depth)) ok = skel.edge(map[i], v);
    if (!ok) continue;
    map[depth] = v;
    if (embed_rec(g, skel, map, used | (std::uint32_t{1} << v), depth + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<Permutation> find_embedding(const SimpleGraph& g, const Multigraph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("embeds: orders must be equal");
  if (g.order() > kCanonLimit) throw std::invalid_argument("embeds: order must be <= 8");
  SimpleGraph skel = h.skeleton();
  std::vector<int> map(g.order());
  if (!embed_rec(g, skel, map, 0, 0)) return std::nullopt;
  return map;
}

bool embeds(const SimpleGraph& g, const Multigraph& h) {
  return find_embedding(g, h).has_value();
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << (v + 1) << ";\n";
  for (auto [i, j] : g.edges()) out << "  " << (i + 1) << " -- " << (j + 1) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << (v + 1) << ";\n";
  for (int i = 0; i < g.order(); ++i)
    for (int j = i; j < g.order(); ++j)
      for (int k = 0; k < g.weight(i, j); ++k)
        out << "  " << (i + 1) << " -- " << (j + 1) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace invgraph

#include "invgraph/exact.hpp"

#include <limits>
#include <utility>

namespace invgraph {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Bareiss fraction-free elimination: every division is exact by the
// previous pivot, so all intermediates stay integers.
Int determinant(const IntMatrix& a) {
  int n = a.size();
  if (n == 0) return 1;
  IntMatrix w = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (w.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot == -1) return 0;
      for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

RationalMatrix inverse_exact(const IntMatrix& a) {
  int n = a.size();
  // Gauss-Jordan on [a | I] over the rationals.
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rational(a.at(i, j));
    w[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (w[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) throw singular_matrix_error();
    std::swap(w[col], w[pivot]);
    Rational p = w[col][col];
    for (int j = col; j < 2 * n; ++j) w[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || w[r][col] == 0) continue;
      Rational f = w[r][col];
      for (int j = col; j < 2 * n; ++j) w[r][j] -= f * w[col][j];
    }
  }
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = w[i][n + j];
  return out;
}

std::optional<IntMatrix> is_integral(const RationalMatrix& r) {
  int n = r.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& e = r.at(i, j);
      if (denominator(e) != 1) return std::nullopt;
      out.at(i, j) = numerator(e);
    }
  return out;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
// The divisions are exact over the integers; deliberately shares nothing
// with the Bareiss elimination so the two can cross-check each other.
IntPolynomial char_poly(const IntMatrix& a) {
  int n = a.size();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix am(n);  // A * M_{k-1}, zero for k = 1
  for (int k = 1; k <= n; ++k) {
    IntMatrix mk = am;
    for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
    am = a * mk;
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += am.at(i, i);
    Int q = -tr / k;
    if (q * k != -tr) throw std::logic_error("char_poly: non-exact division");
    c[n - k] = q;
  }
  return IntPolynomial{std::move(c)};
}

IntMatrix adjacency_matrix(const SimpleGraph& g) {
  IntMatrix m(g.order());
  for (auto [i, j] : g.edges()) {
    m.at(i, j) = 1;
    m.at(j, i) = 1;
  }
  return m;
}

IntMatrix adjacency_matrix(const Multigraph& g) {
  IntMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) m.at(i, j) = g.weight(i, j);
  return m;
}

Multigraph multigraph_from_matrix(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("multigraph_from_matrix: not symmetric");
  Multigraph g(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) {
      const Int& e = m.at(i, j);
      if (e < 0 || e > std::numeric_limits<int>::max())
        throw std::invalid_argument("multigraph_from_matrix: entry out of range");
      g.set_weight(i, j, e.convert_to<int>());
    }
  return g;
}

}  // namespace invgraph

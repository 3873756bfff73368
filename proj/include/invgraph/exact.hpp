#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

#include "invgraph/graph.hpp"

namespace invgraph {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct singular_matrix_error : std::domain_error {
  singular_matrix_error() : std::domain_error("matrix is singular") {}
};

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  bool is_symmetric() const;

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Int> e_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> e_;
};

// Coefficients ascending: coeffs[k] multiplies x^k. Normalized so that the
// top coefficient is nonzero (zero polynomial has empty coeffs).
struct IntPolynomial {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int eval(const Int& x) const;
  bool operator==(const IntPolynomial&) const = default;
};

// Exact determinant via Bareiss fraction-free elimination with row pivoting.
Int determinant(const IntMatrix& a);

// Exact inverse via Gauss-Jordan over the rationals.
// Throws singular_matrix_error when det(a) == 0.
RationalMatrix inverse_exact(const IntMatrix& a);

// The integer matrix equal to r, or nullopt if any entry is non-integral.
std::optional<IntMatrix> is_integral(const RationalMatrix& r);

// Monic characteristic polynomial det(xI - a) via Faddeev-LeVerrier.
// Independent of the Bareiss routine by design.
IntPolynomial char_poly(const IntMatrix& a);

IntMatrix adjacency_matrix(const SimpleGraph& g);
IntMatrix adjacency_matrix(const Multigraph& g);
// Requires every entry of m to be a nonnegative machine int; symmetric.
Multigraph multigraph_from_matrix(const IntMatrix& m);

}  // namespace invgraph

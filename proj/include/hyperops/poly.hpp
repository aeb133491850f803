#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hyperops/matrix.hpp"

namespace hyperops {

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Zero coefficients are never stored, so `is_zero()` is an exact test.
class Poly {
public:
  using Exponents = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(std::size_t variables) : vars_(variables) {}

  static Poly constant(std::size_t variables, const Scalar& c);
  static Poly variable(std::size_t variables, std::size_t index);

  std::size_t variables() const noexcept { return vars_; }
  const std::map<Exponents, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned total_degree() const;

  Scalar evaluate(const Vector& point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  /// Text in the variables t1..tn, terms in descending lexicographic order.
  std::string str() const;

private:
  void add_term(const Exponents& e, const Scalar& c);

  std::size_t vars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

/// det(particular + Σ t_k·basis_k) as a polynomial in t_1..t_dim, where each
/// solution vector is reshaped row-major into a shape×shape matrix.
Poly generic_determinant(const AffineSolutionSpace& space, std::size_t shape);

/// Determinant of a square matrix of polynomials by first-row Laplace
/// expansion memoized on the set of remaining columns.
Poly poly_determinant(const std::vector<std::vector<Poly>>& m, std::size_t variables);

}  // namespace hyperops

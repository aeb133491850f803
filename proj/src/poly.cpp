#include "hyperops/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "hyperops/errors.hpp"

namespace hyperops {

Poly Poly::constant(std::size_t variables, const Scalar& c) {
  Poly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Poly Poly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw DimensionError("variable index out of range");
  Poly p(variables);
  Exponents e(variables, 0);
  e[index] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

unsigned Poly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Poly::evaluate(const Vector& point) const {
  if (point.size() != vars_)
    throw DimensionError("evaluate: expected " + std::to_string(vars_) + " values, got " +
                         std::to_string(point.size()));
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t v = 0; v < vars_; ++v)
      for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
    total += term;
  }
  return total;
}

Poly& Poly::operator+=(const Poly& o) {
  if (vars_ != o.vars_) throw DimensionError("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (vars_ != o.vars_) throw DimensionError("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomial variable count mismatch");
  Poly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e(a.vars_);
      for (std::size_t v = 0; v < a.vars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const Scalar& s, const Poly& a) {
  Poly out(a.vars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.str();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    std::string mono;
    for (std::size_t v = 0; v < vars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "t" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string term;
    if (mono.empty())
      term = compound ? "(" + coeff + ")" : coeff;
    else if (c.is_one())
      term = mono;
    else if (c == Scalar(-1))
      term = "-" + mono;
    else
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
    if (!first) s += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else s += term;
    first = false;
  }
  return s;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m, std::size_t variables) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("polynomial determinant of non-square matrix");
  if (n == 0) return Poly::constant(variables, Scalar(1));
  if (n > 24) throw DimensionError("polynomial determinant limited to 24x24");

  // minors[mask] = determinant of rows (n - popcount(mask))..n-1 restricted to columns in mask.
  std::unordered_map<std::uint32_t, Poly> memo;
  auto rec = [&](auto&& self, std::uint32_t mask, std::size_t row) -> Poly {
    if (row == n) return Poly::constant(variables, Scalar(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Poly total(variables);
    bool negative = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        Poly term = m[row][c] * self(self, mask & ~(1u << c), row + 1);
        if (negative) total -= term;
        else total += term;
      }
      negative = !negative;
    }
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, (n == 32 ? 0xffffffffu : ((1u << n) - 1u)), 0);
}

Poly generic_determinant(const AffineSolutionSpace& space, std::size_t shape) {
  if (space.ambient() != shape * shape)
    throw DimensionError("solution vectors of length " + std::to_string(space.ambient()) +
                         " do not reshape to " + std::to_string(shape) + "x" + std::to_string(shape));
  const std::size_t vars = space.dim();
  std::vector<std::vector<Poly>> m(shape, std::vector<Poly>(shape, Poly(vars)));
  for (std::size_t r = 0; r < shape; ++r)
    for (std::size_t c = 0; c < shape; ++c) {
      const std::size_t idx = r * shape + c;
      Poly entry = Poly::constant(vars, space.particular[idx]);
      for (std::size_t k = 0; k < vars; ++k)
        if (!space.basis[k][idx].is_zero()) entry += space.basis[k][idx] * Poly::variable(vars, k);
      m[r][c] = std::move(entry);
    }
  return poly_determinant(m, vars);
}

}  // namespace hyperops

#include "hyperops/algebra.hpp"

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

void check_index(std::size_t dim, const StructureEntry& e) {
  auto bad = [dim](int x) { return x < 1 || static_cast<std::size_t>(x) > dim; };
  if (bad(e.i) || bad(e.j) || bad(e.k))
    throw DimensionError("structure constant (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                         std::to_string(e.k) + ") out of range for dimension " + std::to_string(dim));
}

Vector tensor_row(const StructureTensor& t, std::size_t i, std::size_t j) {
  Vector v(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) v[k] = t(i, j, k);
  return v;
}

Vector tensor_apply(const StructureTensor& t, const Vector& x, const Vector& y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("vector length does not match algebra dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out[k] += w * t(i, j, k);
    }
  }
  return out;
}

std::vector<int> one_based(std::initializer_list<std::size_t> xs) {
  std::vector<int> out;
  for (auto x : xs) out.push_back(static_cast<int>(x) + 1);
  return out;
}

}  // namespace

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const { return tensor_row(c, i, j); }
Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return tensor_apply(c, x, y); }

LieAlgebra LieAlgebra::from_entries(std::size_t dim, const std::vector<StructureEntry>& entries,
                                    bool antisymmetric) {
  LieAlgebra g{StructureTensor(dim)};
  for (const auto& e : entries) {
    check_index(dim, e);
    g.c(e.i - 1, e.j - 1, e.k - 1) += e.coeff;
    if (antisymmetric) g.c(e.j - 1, e.i - 1, e.k - 1) -= e.coeff;
  }
  return g;
}

Vector PreLieAlgebra::basis_product(std::size_t i, std::size_t j) const { return tensor_row(p, i, j); }
Vector PreLieAlgebra::product(const Vector& x, const Vector& y) const { return tensor_apply(p, x, y); }

PreLieAlgebra PreLieAlgebra::from_entries(std::size_t dim, const std::vector<StructureEntry>& entries) {
  PreLieAlgebra g{StructureTensor(dim)};
  for (const auto& e : entries) {
    check_index(dim, e);
    g.p(e.i - 1, e.j - 1, e.k - 1) += e.coeff;
  }
  return g;
}

Matrix Representation::of(const Vector& x) const {
  if (x.size() != mats.size()) throw DimensionError("ρ(x): vector length does not match algebra dimension");
  Matrix m(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += mats[i].scaled(x[i]);
  return m;
}

Report check_lie(const LieAlgebra& g) {
  Report report;
  const std::size_t n = g.dim();
  bool antisym = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k)) {
          antisym = false;
          report.fail("lie.antisymmetry", {}, {one_based({i, j, k}),
                      "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                          ")=" + g.c(i, j, k).str() + " but c(" + std::to_string(j + 1) + "," +
                          std::to_string(i + 1) + "," + std::to_string(k + 1) + ")=" + g.c(j, i, k).str()});
        }
  if (antisym) report.pass("lie.antisymmetry");

  bool jacobi = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vector sum = g.bracket(g.basis_bracket(i, j), ek) + g.bracket(g.basis_bracket(j, k), ei) +
                     g.bracket(g.basis_bracket(k, i), ej);
        if (!is_zero(sum)) {
          jacobi = false;
          report.fail("lie.jacobi", {}, {one_based({i, j, k}), "[[x,y],z]+[[y,z],x]+[[z,x],y]=" + vector_str(sum)});
        }
      }
  if (jacobi) report.pass("lie.jacobi");
  return report;
}

Report check_prelie(const PreLieAlgebra& g) {
  Report report;
  const std::size_t n = g.dim();
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit(n, k);
        Vector lhs = g.product(g.basis_product(i, j), ek) - g.product(unit(n, i), g.basis_product(j, k));
        Vector rhs = g.product(g.basis_product(j, i), ek) - g.product(unit(n, j), g.basis_product(i, k));
        if (lhs != rhs) {
          ok = false;
          report.fail("prelie.left_symmetry", {},
                      {one_based({i, j, k}), "(x,y,z) associator " + vector_str(lhs) + " vs (y,x,z) " + vector_str(rhs)});
        }
      }
  if (ok) report.pass("prelie.left_symmetry");
  return report;
}

Report check_representation(const Representation& r) {
  Report report;
  const std::size_t n = r.algebra.dim();
  if (r.mats.size() != n) {
    report.fail("rep.shape", {}, {{}, std::to_string(r.mats.size()) + " matrices for algebra of dimension " + std::to_string(n)});
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (r.mats[i].rows() != r.module_dim || r.mats[i].cols() != r.module_dim) {
      report.fail("rep.shape", {}, {one_based({i}), "ρ(e_" + std::to_string(i + 1) + ") has shape " +
                                                    r.mats[i].shape_str()});
      return report;
    }
  report.pass("rep.shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = r.of(r.algebra.basis_bracket(i, j));
      Matrix rhs = r.mats[i] * r.mats[j] - r.mats[j] * r.mats[i];
      if (lhs != rhs) {
        report.fail("rep.homomorphism", {}, {one_based({i, j}), "ρ([x,y])=" + lhs.str() + " but [ρ(x),ρ(y)]=" + rhs.str()});
        return report;
      }
    }
  report.pass("rep.homomorphism");
  return report;
}

LieAlgebra subadjacent(const PreLieAlgebra& g) {
  const std::size_t n = g.dim();
  LieAlgebra out{StructureTensor(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = g.p(i, j, k) - g.p(j, i, k);
  return out;
}

Representation adjoint_rep(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Representation r{g, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = g.c(i, j, k);
    r.mats.push_back(std::move(m));
  }
  return r;
}

Matrix left_multiplication(const PreLieAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = g.product(x, unit(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Representation regular_rep(const PreLieAlgebra& g) {
  const std::size_t n = g.dim();
  Representation r{subadjacent(g), n, {}};
  for (std::size_t i = 0; i < n; ++i) r.mats.push_back(left_multiplication(g, unit(n, i)));
  return r;
}

Representation dual_rep(const Representation& r) {
  Representation out{r.algebra, r.module_dim, {}};
  for (const auto& m : r.mats) out.mats.push_back(-m.transpose());
  return out;
}

Representation trivial_rep(const LieAlgebra& g, std::size_t module_dim) {
  return {g, module_dim, std::vector<Matrix>(g.dim(), Matrix(module_dim, module_dim))};
}

Report check_lie_derivation(const LieAlgebra& g, const Matrix& d) {
  Report report;
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n)
    throw DimensionError("derivation must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " + d.shape_str());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d * g.basis_bracket(i, j);
      Vector rhs = g.bracket(d.col(i), unit(n, j)) + g.bracket(unit(n, i), d.col(j));
      if (lhs != rhs) {
        report.fail("derivation", {}, {one_based({i, j}), "D[x,y]=" + vector_str(lhs) + " but [Dx,y]+[x,Dy]=" + vector_str(rhs)});
        return report;
      }
    }
  report.pass("derivation");
  return report;
}

Report check_prelie_derivation(const PreLieAlgebra& g, const Matrix& d) {
  Report report;
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n)
    throw DimensionError("derivation must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " + d.shape_str());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = d * g.basis_product(i, j);
      Vector rhs = g.product(d.col(i), unit(n, j)) + g.product(unit(n, i), d.col(j));
      if (lhs != rhs) {
        report.fail("prelie_derivation", {}, {one_based({i, j}), "D(x·y)=" + vector_str(lhs) + " but Dx·y+x·Dy=" + vector_str(rhs)});
        return report;
      }
    }
  report.pass("prelie_derivation");
  return report;
}

}  // namespace hyperops

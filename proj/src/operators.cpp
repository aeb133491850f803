#include "hyperops/operators.hpp"

#include <string>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

void require_shape(const Matrix& a, std::size_t rows, std::size_t cols, const char* what) {
  if (a.rows() != rows || a.cols() != cols)
    throw DimensionError(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", got " + a.shape_str());
}

std::vector<int> pair_basis(std::size_t i, std::size_t j) { return {static_cast<int>(i) + 1, static_cast<int>(j) + 1}; }

/// First column where two equally shaped matrices differ, if any.
std::optional<std::size_t> first_column_mismatch(const Matrix& a, const Matrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, j) != b(r, j)) return j;
  return std::nullopt;
}

Vector t_bracket(const OperatorContext& ctx, const Matrix& t, const Vector& u, const Vector& v) {
  return ctx.rep.of(t * u) * v - ctx.rep.of(t * v) * u;
}

Matrix varrho(const OperatorContext& ctx, const Matrix& n, const Matrix& s, const Vector& x) {
  const Matrix rx = ctx.rep.of(x);
  return ctx.rep.of(n * x) - rx * s + s * rx;
}

}  // namespace

void require_tagged_shape(const OperatorContext& ctx, const LinMap& map) {
  auto size = [&](Space sp) { return sp == Space::Algebra ? ctx.n() : ctx.m(); };
  require_shape(map.matrix, size(map.codomain), size(map.domain), "linear map");
}

Report is_rdo(const OperatorContext& ctx, const Matrix& d) {
  require_shape(d, ctx.m(), ctx.n(), "relative differential operator");
  Report report;
  const std::size_t n = ctx.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d * ctx.g.basis_bracket(i, j);
      Vector rhs = ctx.rep.of_basis(i) * d.col(j) - ctx.rep.of_basis(j) * d.col(i);
      if (lhs != rhs)
        return report.fail("rdo", {}, {pair_basis(i, j), "d[x,y]=" + vector_str(lhs) + " but ρ(x)dy−ρ(y)dx=" + vector_str(rhs)});
    }
  return report.pass("rdo");
}

Matrix inner_rdo(const OperatorContext& ctx, const Vector& u) {
  if (u.size() != ctx.m()) throw DimensionError("module vector has length " + std::to_string(u.size()) +
                                                ", expected " + std::to_string(ctx.m()));
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < ctx.n(); ++j) cols.push_back(ctx.rep.of_basis(j) * u);
  return Matrix::from_columns(cols, ctx.m());
}

Report is_o_operator(const OperatorContext& ctx, const Matrix& t) {
  require_shape(t, ctx.n(), ctx.m(), "O-operator");
  Report report;
  const std::size_t m = ctx.m();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      const Vector tu = t.col(u), tv = t.col(v);
      Vector lhs = ctx.g.bracket(tu, tv);
      Vector rhs = t * (ctx.rep.of(tu).col(v) - ctx.rep.of(tv).col(u));
      if (lhs != rhs)
        return report.fail("o_operator", {}, {pair_basis(u, v), "[Tu,Tv]=" + vector_str(lhs) + " but T(ρ(Tu)v−ρ(Tv)u)=" + vector_str(rhs)});
    }
  return report.pass("o_operator");
}

NijenhuisResult is_nijenhuis(const LieAlgebra& g, const Matrix& n) {
  require_shape(n, g.dim(), g.dim(), "Nijenhuis operator");
  NijenhuisResult out;
  const std::size_t dim = g.dim();
  bool ok = true;
  for (std::size_t i = 0; i < dim && ok; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Vector ni = n.col(i), nj = n.col(j);
      Vector lhs = g.bracket(ni, nj);
      Vector rhs = n * (g.bracket(ni, unit(dim, j)) + g.bracket(unit(dim, i), nj) - n * g.basis_bracket(i, j));
      if (lhs != rhs) {
        out.report.fail("nijenhuis", {}, {pair_basis(i, j), "[Nx,Ny]=" + vector_str(lhs) + " but N([Nx,y]+[x,Ny]−N[x,y])=" + vector_str(rhs)});
        ok = false;
        break;
      }
    }
  if (ok) out.report.pass("nijenhuis");
  const Matrix sq = n * n;
  out.complex = sq == -Matrix::identity(dim);
  out.para_complex = sq.is_identity();
  return out;
}

LieAlgebra deformed_bracket(const LieAlgebra& g, const Matrix& n) {
  const NijenhuisResult nij = is_nijenhuis(g, n);
  if (const Claim* f = nij.report.first_failure())
    throw PreconditionError("deformed bracket needs a Nijenhuis operator: " + f->counterexample->detail,
                            f->counterexample->basis);
  const std::size_t dim = g.dim();
  LieAlgebra out{StructureTensor(dim)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vector v = g.bracket(n.col(i), unit(dim, j)) + g.bracket(unit(dim, i), n.col(j)) - n * g.basis_bracket(i, j);
      for (std::size_t k = 0; k < dim; ++k) out.c(i, j, k) = v[k];
    }
  return out;
}

Report is_dual_nijenhuis_pair(const OperatorContext& ctx, const Matrix& n, const Matrix& s) {
  require_shape(s, ctx.m(), ctx.m(), "dual-Nijenhuis S");
  Report report;
  report.merge_as_precondition(is_nijenhuis(ctx.g, n).report, "N");
  const Matrix s2 = s * s;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    const Matrix rx = ctx.rep.of_basis(i);
    const Matrix rnx = ctx.rep.of(n.col(i));
    const Matrix lhs = rnx * s;
    const Matrix rhs = s * rnx + rx * s2 - s * rx * s;
    if (auto v = first_column_mismatch(lhs, rhs))
      return report.fail("dual_nijenhuis", {}, {pair_basis(i, *v), "ρ(Nx)Sv=" + vector_str(lhs.col(*v)) +
                                                                  " but S ρ(Nx)v+ρ(x)S²v−Sρ(x)Sv=" + vector_str(rhs.col(*v))});
  }
  return report.pass("dual_nijenhuis");
}

Representation deformed_representation(const OperatorContext& ctx, const Matrix& n, const Matrix& s) {
  const Report pair = is_dual_nijenhuis_pair(ctx, n, s);
  if (const Claim* f = pair.first_failure())
    throw PreconditionError("deformed representation needs a dual-Nijenhuis pair (" + f->id + "): " +
                                f->counterexample->detail,
                            f->counterexample->basis);
  Representation out{deformed_bracket(ctx.g, n), ctx.m(), {}};
  for (std::size_t i = 0; i < ctx.n(); ++i) out.mats.push_back(varrho(ctx, n, s, unit(ctx.n(), i)));
  return out;
}

InducedStructure bracket_T(const OperatorContext& ctx, const Matrix& t) {
  const Report rep = is_o_operator(ctx, t);
  if (const Claim* f = rep.first_failure())
    throw PreconditionError("induced bracket needs an O-operator: " + f->counterexample->detail, f->counterexample->basis);
  const std::size_t m = ctx.m();
  InducedStructure out{PreLieAlgebra{StructureTensor(m)}, LieAlgebra{StructureTensor(m)}};
  for (std::size_t u = 0; u < m; ++u) {
    const Matrix rtu = ctx.rep.of(t.col(u));
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t k = 0; k < m; ++k) out.star.p(u, v, k) = rtu(k, v);
  }
  out.bracket = subadjacent(out.star);
  return out;
}

Report brackets_coincide(const OperatorContext& ctx, const Matrix& t, const Matrix& s, const Matrix& n) {
  require_shape(t, ctx.n(), ctx.m(), "O-operator");
  require_shape(s, ctx.m(), ctx.m(), "S");
  require_shape(n, ctx.n(), ctx.n(), "N");
  const Matrix nt = n * t;
  if (auto j = first_column_mismatch(nt, t * s))
    throw PreconditionError("N∘T ≠ T∘S on basis vector u" + std::to_string(*j + 1), {static_cast<int>(*j) + 1});

  Report report;
  const std::size_t m = ctx.m();
  bool ts_ok = true, rho_ok = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector u = unit(m, a), v = unit(m, b);
      const Vector bnt = t_bracket(ctx, nt, u, v);
      const Vector bts = t_bracket(ctx, t, s * u, v) + t_bracket(ctx, t, u, s * v) - s * t_bracket(ctx, t, u, v);
      const Vector brho = varrho(ctx, n, s, t * u) * v - varrho(ctx, n, s, t * v) * u;
      if (ts_ok && bnt != bts) {
        ts_ok = false;
        report.fail("brackets.NT_vs_TS", {}, {pair_basis(a, b), "[u,v]^NT=" + vector_str(bnt) + " but [u,v]^T_S=" + vector_str(bts)});
      }
      if (rho_ok && bnt != brho) {
        rho_ok = false;
        report.fail("brackets.NT_vs_varrho", {}, {pair_basis(a, b), "[u,v]^NT=" + vector_str(bnt) + " but {u,v}^T_ϱ=" + vector_str(brho)});
      }
    }
  if (ts_ok) report.pass("brackets.NT_vs_TS");
  if (rho_ok) report.pass("brackets.NT_vs_varrho");
  return report;
}

Report is_dn(const OperatorContext& ctx, const Matrix& d, const Matrix& n) {
  Report report;
  report.merge_as_precondition(is_rdo(ctx, d), "d");
  report.merge_as_precondition(is_nijenhuis(ctx.g, n).report, "N");
  report.merge_as_check(is_rdo(ctx, d * n), "dN");
  return report;
}

Report dn_powers(const OperatorContext& ctx, const Matrix& d, const Matrix& n, unsigned kmax) {
  Report report;
  report.merge_as_precondition(is_dn(ctx, d, n), "dn");
  Matrix nk = Matrix::identity(ctx.n());
  for (unsigned k = 1; k <= kmax; ++k) {
    nk = nk * n;
    const Matrix dk = d * nk;
    report.merge_as_check(is_rdo(ctx, dk), "power", {static_cast<int>(k)});
    report.merge_as_check(is_dn(ctx, dk, nk), "power_dn", {static_cast<int>(k)});
  }
  return report;
}

Report is_kd(const OperatorContext& ctx, const Matrix& t, const Matrix& d) {
  Report report;
  report.merge_as_precondition(is_o_operator(ctx, t), "T");
  report.merge_as_precondition(is_rdo(ctx, d), "d");
  report.merge_as_check(is_rdo(ctx, d * (t * d)), "dN");
  return report;
}

Report is_kn(const OperatorContext& ctx, const Matrix& t, const Matrix& s, const Matrix& n) {
  Report report;
  report.merge_as_precondition(is_o_operator(ctx, t), "T");
  report.merge_as_precondition(is_dual_nijenhuis_pair(ctx, n, s), "NS");

  const Matrix nt = n * t;
  const Matrix ts = t * s;
  const auto tn1_bad = first_column_mismatch(nt, ts);
  if (tn1_bad)
    report.fail("tn1", {}, {{static_cast<int>(*tn1_bad) + 1}, "N∘T u=" + vector_str(nt.col(*tn1_bad)) +
                                                             " but T∘S u=" + vector_str(ts.col(*tn1_bad))});
  else
    report.pass("tn1");

  const std::size_t m = ctx.m();
  bool tn2 = true;
  for (std::size_t a = 0; a < m && tn2; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector u = unit(m, a), v = unit(m, b);
      const Vector bnt = t_bracket(ctx, nt, u, v);
      const Vector bts = t_bracket(ctx, t, s * u, v) + t_bracket(ctx, t, u, s * v) - s * t_bracket(ctx, t, u, v);
      if (bnt != bts) {
        report.fail("tn2", {}, {pair_basis(a, b), "[u,v]^NT=" + vector_str(bnt) + " but [u,v]^T_S=" + vector_str(bts)});
        tn2 = false;
        break;
      }
    }
  if (tn2) report.pass("tn2");

  if (report.preconditions_ok()) {
    const OperatorContext deformed(deformed_representation(ctx, n, s));
    report.merge_as_check(is_o_operator(deformed, t), "T_on_deformed");
  }
  report.merge_as_check(is_o_operator(ctx, nt), "NT");
  if (!tn1_bad) report.merge_as_check(brackets_coincide(ctx, t, s, n), "coincide");
  return report;
}

SamplePairs default_samples() {
  SamplePairs out;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) out.emplace_back(a, b);
  return out;
}

Report are_compatible(const OperatorContext& ctx, const Matrix& t1, const Matrix& t2, const SamplePairs& samples) {
  Report report;
  report.merge_as_precondition(is_o_operator(ctx, t1), "T1");
  report.merge_as_precondition(is_o_operator(ctx, t2), "T2");
  const std::size_t m = ctx.m();
  bool ok = true;
  for (std::size_t a = 0; a < m && ok; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector u = unit(m, a), v = unit(m, b);
      const Vector t1u = t1 * u, t1v = t1 * v, t2u = t2 * u, t2v = t2 * v;
      const Vector lhs = ctx.g.bracket(t1u, t2v) + ctx.g.bracket(t2u, t1v);
      const Vector rhs = t1 * (ctx.rep.of(t2u) * v - ctx.rep.of(t2v) * u) + t2 * (ctx.rep.of(t1u) * v - ctx.rep.of(t1v) * u);
      if (lhs != rhs) {
        report.fail("mixed", {}, {pair_basis(a, b), "[T1u,T2v]+[T2u,T1v]=" + vector_str(lhs) + " but mixed right side=" + vector_str(rhs)});
        ok = false;
        break;
      }
    }
  if (ok) report.pass("mixed");
  for (const auto& [k1, k2] : samples)
    report.merge_as_check(is_o_operator(ctx, t1.scaled(Scalar(k1)) + t2.scaled(Scalar(k2))), "sample", {k1, k2});
  return report;
}

Report kn_hierarchy(const OperatorContext& ctx, const Matrix& t, const Matrix& s, const Matrix& n, unsigned kmax) {
  Report report;
  report.merge_as_precondition(is_kn(ctx, t, s, n), "kn");
  std::vector<Matrix> nkt{t};
  for (unsigned k = 1; k <= kmax; ++k) nkt.push_back(n * nkt.back());
  for (unsigned k = 0; k <= kmax; ++k)
    report.merge_as_check(is_o_operator(ctx, nkt[k]), "power", {static_cast<int>(k)});
  for (unsigned k = 0; k <= kmax; ++k)
    for (unsigned l = k + 1; l <= kmax; ++l)
      report.merge_as_check(are_compatible(ctx, nkt[k], nkt[l]), "compatible", {static_cast<int>(k), static_cast<int>(l)});
  return report;
}

}  // namespace hyperops

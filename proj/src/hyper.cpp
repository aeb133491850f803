#include "hyperops/hyper.hpp"

#include <string>

#include "claim_util.hpp"
#include "hyperops/errors.hpp"

namespace hyperops {

using detail::expect_equal;
using detail::sign;

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Symplectic: return "symplectic";
    case Flavor::Hessian: return "hessian";
    case Flavor::Rdo: break;
  }
  return "rdo";
}

int identity_sign(const Matrix& m) {
  if (!m.is_square()) return 0;
  if (m.is_identity()) return 1;
  if (m == -Matrix::identity(m.rows())) return -1;
  return 0;
}

HyperClassification classify_hyper(const OperatorContext& ctx, const std::array<Matrix, 3>& d, Flavor flavor) {
  HyperClassification out;
  Report& report = out.report;
  bool ok = true;
  std::array<Matrix, 3> t;
  for (int i = 1; i <= 3; ++i) {
    const Matrix& di = d[i - 1];
    if (di.rows() != ctx.m() || di.cols() != ctx.n())
      throw DimensionError("d" + std::to_string(i) + " must be " + std::to_string(ctx.m()) + "x" +
                           std::to_string(ctx.n()) + ", got " + di.shape_str());
    try {
      t[i - 1] = invert(di);
      report.pass("invertible", {i});
    } catch (const SingularError& e) {
      report.fail("invertible", {i}, {{}, "d" + std::to_string(i) + " has rank " + std::to_string(e.rank())});
      ok = false;
    }
    Report rdo = is_rdo(ctx, di);
    ok = ok && rdo.ok();
    report.merge(rdo, "", {i});
  }
  if (!ok) return out;

  HyperTriple h{ctx, d, t, {}, {}, {}, {}, flavor};
  for (int i = 1; i <= 3; ++i) {
    h.n[HyperTriple::slot(i)] = h.T(i - 1) * h.D(i + 1);
    h.s[HyperTriple::slot(i)] = h.D(i + 1) * h.T(i - 1);
  }
  for (int i = 1; i <= 3; ++i) {
    const Matrix sq = h.N(i) * h.N(i);
    const int e = identity_sign(sq);
    if (e == 0) {
      const Matrix id = Matrix::identity(ctx.n());
      std::size_t col = 0;
      while (col < sq.cols() && (sq.col(col) == id.col(col) || sq.col(col) == scaled(id.col(col), Scalar(-1)))) ++col;
      if (col == sq.cols()) col = 0;
      report.fail("square", {i}, {{static_cast<int>(col) + 1}, "N" + std::to_string(i) + "² is not ±Id: N" +
                                                                 std::to_string(i) + "²=" + sq.str()});
      ok = false;
    } else {
      h.eps[HyperTriple::slot(i)] = e;
      report.pass("square", {i});
    }
  }
  if (!ok) return out;
  h.hflat = (sign(h.E(3) * h.E(2)) * (h.D(3) * h.T(1) * h.D(2)));
  out.triple = std::move(h);
  return out;
}

Report verify_hflat_identities(const HyperTriple& t) {
  Report r;
  const Scalar p = sign(t.eps_product());
  const Matrix hinv = invert(t.hflat);
  for (int i = 1; i <= 3; ++i) {
    expect_equal(r, "hflat.cyclic", {i}, t.hflat, sign(t.E(i - 1) * t.E(i + 1)) * (t.D(i - 1) * t.T(i) * t.D(i + 1)),
                 "h♭", "ε(i−1)ε(i+1) d(i−1)T(i)d(i+1)");
    expect_equal(r, "hflat.TS_eq_NT", {i}, t.T(i) * t.S(i), p * (t.N(i) * t.T(i)), "T(i)S(i)", "ε₁ε₂ε₃ N(i)T(i)");
    expect_equal(r, "hflat.TS_eq_hinv", {i}, t.T(i) * t.S(i), sign(t.E(i + 1)) * hinv, "T(i)S(i)", "ε(i+1)(h♭)⁻¹");
    expect_equal(r, "hflat.dN_eq_Sd", {i}, t.D(i) * t.N(i), p * (t.S(i) * t.D(i)), "d(i)N(i)", "ε₁ε₂ε₃ S(i)d(i)");
    expect_equal(r, "hflat.dN_eq_h", {i}, t.D(i) * t.N(i), sign(t.E(i - 1)) * t.hflat, "d(i)N(i)", "ε(i−1)h♭");
    expect_equal(r, "hflat.hN_eq_Sh", {i}, t.hflat * t.N(i), p * (t.S(i) * t.hflat), "h♭N(i)", "ε₁ε₂ε₃ S(i)h♭");
    expect_equal(r, "hflat.hN_eq_d", {i}, t.hflat * t.N(i), sign(t.E(i) * t.E(i - 1)) * t.D(i), "h♭N(i)",
                 "ε(i)ε(i−1) d(i)");
    expect_equal(r, "swap.dT", {i}, t.D(i + 1) * t.T(i - 1), sign(t.E(i)) * (t.D(i - 1) * t.T(i + 1)),
                 "d(i+1)T(i−1)", "ε(i) d(i−1)T(i+1)");
    expect_equal(r, "swap.Td", {i}, t.T(i + 1) * t.D(i - 1), sign(t.E(i)) * (t.T(i - 1) * t.D(i + 1)),
                 "T(i+1)d(i−1)", "ε(i) T(i−1)d(i+1)");
  }
  return r;
}

Report verify_cross_identities(const HyperTriple& t) {
  Report r;
  const Scalar p = sign(t.eps_product());
  const Matrix id_g = Matrix::identity(t.ctx.n());
  const Matrix id_v = Matrix::identity(t.ctx.m());
  for (int i = 1; i <= 3; ++i) {
    for (int j : {i + 1, i - 1}) {
      const int jj = static_cast<int>(HyperTriple::slot(j)) + 1;
      const bool next = j == i + 1;
      const std::vector<int> idx{i, jj};

      expect_equal(r, "TS.commute", idx, t.T(i) * t.S(j), t.N(j) * t.T(i), "T(i)S(j)", "N(j)T(i)");
      expect_equal(r, "TS.value", idx, t.T(i) * t.S(j),
                   next ? sign(t.E(i + 1)) * t.T(i - 1) : t.T(i + 1), "T(i)S(j)",
                   next ? "ε(i+1)T(i−1)" : "T(i+1)");

      expect_equal(r, "dN.commute", idx, t.D(i) * t.N(j), t.S(j) * t.D(i), "d(i)N(j)", "S(j)d(i)");
      expect_equal(r, "dN.value", idx, t.D(i) * t.N(j),
                   next ? t.D(i - 1) : sign(t.E(i - 1)) * t.D(i + 1), "d(i)N(j)",
                   next ? "d(i−1)" : "ε(i−1)d(i+1)");

      expect_equal(r, "NN.commute", idx, t.N(i) * t.N(j), p * (t.N(j) * t.N(i)), "N(i)N(j)", "ε₁ε₂ε₃ N(j)N(i)");
      expect_equal(r, "NN.value", idx, t.N(i) * t.N(j),
                   next ? sign(t.E(i) * t.E(i + 1)) * t.N(i - 1) : sign(t.E(i + 1)) * t.N(i + 1), "N(i)N(j)",
                   next ? "ε(i)ε(i+1)N(i−1)" : "ε(i+1)N(i+1)");

      expect_equal(r, "SS.commute", idx, t.S(i) * t.S(j), p * (t.S(j) * t.S(i)), "S(i)S(j)", "ε₁ε₂ε₃ S(j)S(i)");
      expect_equal(r, "SS.value", idx, t.S(i) * t.S(j),
                   next ? sign(t.E(i - 1)) * t.S(i - 1) : (p * sign(t.E(i + 1))) * t.S(i + 1), "S(i)S(j)",
                   next ? "ε(i−1)S(i−1)" : "ε₁ε₂ε₃ε(i+1)S(i+1)");
    }
    expect_equal(r, "SS.square", {i}, t.S(i) * t.S(i), sign(t.E(i)) * id_v, "S(i)²", "ε(i)Id");

    for (int k : {i, i + 1, i - 1}) {
      const std::vector<int> idx{static_cast<int>(HyperTriple::slot(k)) + 1, i};
      const Matrix td = k == i ? id_g : k == i + 1 ? t.N(i - 1) : sign(t.E(i + 1)) * t.N(i + 1);
      const char* td_name = k == i ? "Id" : k == i + 1 ? "N(i−1)" : "ε(i+1)N(i+1)";
      expect_equal(r, "Td.value", idx, t.T(k) * t.D(i), td, "T(k)d(i)", td_name);
      const Matrix dt = k == i ? id_v : k == i + 1 ? t.S(i - 1) : sign(t.E(i + 1)) * t.S(i + 1);
      const char* dt_name = k == i ? "Id" : k == i + 1 ? "S(i−1)" : "ε(i+1)S(i+1)";
      expect_equal(r, "dT.value", {i, idx[0]}, t.D(i) * t.T(k), dt, "d(i)T(k)", dt_name);
    }
  }
  return r;
}

Report product_one_suite(const HyperTriple& t) {
  if (t.eps_product() != 1)
    throw DomainError("this suite needs ε₁ε₂ε₃ = 1; the triple has ε = (" + std::to_string(t.eps[0]) + "," +
                      std::to_string(t.eps[1]) + "," + std::to_string(t.eps[2]) + ")");
  Report r;
  const OperatorContext& ctx = t.ctx;
  const Matrix hinv = invert(t.hflat);
  const std::size_t m = ctx.m();
  for (int i = 1; i <= 3; ++i) {
    r.merge_as_check(is_dn(ctx, t.D(i), t.N(i)), "dn_same", {i});

    bool rel = true;
    for (std::size_t a = 0; a < m && rel; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        const Vector u = unit(m, a), v = unit(m, b);
        const Matrix ru = ctx.rep.of(t.T(i) * u), rv = ctx.rep.of(t.T(i) * v);
        const Vector lhs = t.S(i) * (ru * v) - t.S(i) * (rv * u) - ru * (t.S(i) * v) + rv * (t.S(i) * u);
        if (!is_zero(lhs)) {
          r.fail("module_relation", {i}, {{static_cast<int>(a) + 1, static_cast<int>(b) + 1},
                                          "Sρ(Tu)v−Sρ(Tv)u−ρ(Tu)Sv+ρ(Tv)Su=" + vector_str(lhs)});
          rel = false;
          break;
        }
      }
    if (rel) r.pass("module_relation", {i});

    r.merge_as_check(is_kd(ctx, t.K(i), t.D(i)), "kd_K", {i});
    r.merge_as_check(is_kn(ctx, t.T(i), t.S(i), t.N(i)), "kn_same", {i});
  }
  r.merge_as_check(is_rdo(ctx, t.hflat), "hflat");
  for (int i = 1; i <= 3; ++i) {
    expect_equal(r, "Th_eq_N", {i}, t.T(i) * t.hflat, sign(t.E(i - 1)) * t.N(i), "T(i)h♭", "ε(i−1)N(i)");
    r.merge_as_check(is_dn(ctx, t.hflat, t.T(i) * t.hflat), "dn_hflat", {i});
    expect_equal(r, "hinvd_eq_N", {i}, hinv * t.D(i), sign(t.E(i + 1)) * t.N(i), "(h♭)⁻¹d(i)", "ε(i+1)N(i)");
    r.merge_as_check(is_dn(ctx, t.D(i), hinv * t.D(i)), "dn_hinv", {i});
    r.merge_as_check(is_dn(ctx, t.hflat, t.N(i)), "dn_hflat_N", {i});
    r.merge_as_check(is_kd(ctx, t.T(i), t.hflat), "kd_T_hflat", {i});
    r.merge_as_check(is_kd(ctx, hinv, t.D(i)), "kd_hinv_d", {i});
    r.merge_as_check(is_kn(ctx, t.T(i), t.hflat * t.T(i), t.T(i) * t.hflat), "kn_T_hflat", {i});
    r.merge_as_check(is_kn(ctx, hinv, t.D(i) * hinv, hinv * t.D(i)), "kn_hinv_d", {i});
    r.merge_as_check(is_kn(ctx, hinv, t.S(i), t.N(i)), "kn_hinv", {i});
    r.merge_as_check(are_compatible(ctx, t.T(i), hinv), "compatible_hinv", {i});
  }
  return r;
}

Report derived_structures_report(const HyperTriple& t) {
  Report r;
  const OperatorContext& ctx = t.ctx;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      if (i == k) continue;
      r.merge_as_check(is_kd(ctx, t.T(i), t.D(k)), "kd", {i, k});
      r.merge_as_check(is_dn(ctx, t.D(i), t.N(k)), "dn", {i, k});
      r.merge_as_check(is_kn(ctx, t.T(i), t.S(k), t.N(k)), "kn", {i, k});
      r.merge_as_check(are_compatible(ctx, t.N(k) * t.T(i), t.T(i)), "compatible_NT", {i, k});
    }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) r.merge_as_check(are_compatible(ctx, t.T(i), t.T(j)), "compatible", {i, j});
  for (int i = 1; i <= 3; ++i) {
    const NijenhuisResult nij = is_nijenhuis(ctx.g, t.N(i));
    r.merge_as_check(nij.report, "", {i});
    const bool flag = t.E(i) == -1 ? nij.complex : nij.para_complex;
    if (flag)
      r.pass("nijenhuis_kind", {i});
    else
      r.fail("nijenhuis_kind", {i}, {{}, std::string("ε=") + std::to_string(t.E(i)) + " but N is not " +
                                             (t.E(i) == -1 ? "complex" : "para-complex")});
  }
  return r;
}

Report hierarchy_report(const HyperTriple& t, unsigned kn_kmax, unsigned dn_kmax) {
  Report r;
  const OperatorContext& ctx = t.ctx;
  for (int i = 1; i <= 3; ++i) {
    const bool rdo = is_rdo(ctx, t.D(i)).ok();
    const bool oop = is_o_operator(ctx, t.T(i)).ok();
    if (rdo == oop)
      r.pass("inverse_duality", {i});
    else
      r.fail("inverse_duality", {i}, {{}, std::string("is_rdo(d)=") + (rdo ? "true" : "false") +
                                             " but is_o_operator(d⁻¹)=" + (oop ? "true" : "false")});
  }
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      if (i == k) continue;
      r.merge_as_check(kn_hierarchy(ctx, t.T(i), t.S(k), t.N(k), kn_kmax), "kn_hierarchy", {i, k});
      r.merge_as_check(dn_powers(ctx, t.D(i), t.N(k), dn_kmax), "dn_powers", {i, k});
    }
  return r;
}

Decomposition decompose_hyper(const HyperTriple& t) {
  if (t.eps_product() != -1)
    throw DomainError("decomposition needs ε₁ε₂ε₃ = −1; the triple has ε = (" + std::to_string(t.eps[0]) + "," +
                      std::to_string(t.eps[1]) + "," + std::to_string(t.eps[2]) + ")");
  Decomposition out;
  out.para = !(t.eps[0] == -1 && t.eps[1] == -1 && t.eps[2] == -1);
  int shift = 0;
  if (out.para)
    while (t.E(3 + shift) != -1) ++shift;

  const HyperTriple* src = &t;
  std::optional<HyperClassification> shifted;
  if (shift != 0) {
    std::array<Matrix, 3> d{t.D(1 + shift), t.D(2 + shift), t.D(3 + shift)};
    shifted = classify_hyper(t.ctx, d, t.flavor);
    src = &*shifted->triple;
  }
  for (int i = 1; i <= 3; ++i) out.renumbering[i - 1] = static_cast<int>(HyperTriple::slot(i + shift)) + 1;
  const HyperTriple& h = *src;
  out.eps = h.eps;
  out.hflat = h.hflat;
  for (int i = 1; i <= 3; ++i) out.I[i - 1] = sign(h.E(i) * h.E(i - 1)) * h.N(i);

  Report& r = out.report;
  for (int i = 1; i <= 3; ++i)
    expect_equal(r, "factor", {i}, h.D(i), h.hflat * out.I[i - 1], "d(i)", "h♭I(i)");
  expect_equal(r, "anticommute", {}, out.I[0] * out.I[1], -(out.I[1] * out.I[0]), "I1I2", "−I2I1");
  expect_equal(r, "product", {}, out.I[2], out.I[0] * out.I[1], "I3", "I1I2");
  for (int i = 1; i <= 3; ++i)
    expect_equal(r, "square", {i}, out.I[i - 1] * out.I[i - 1], sign(h.E(i)) * Matrix::identity(t.ctx.n()), "I(i)²",
                 "ε(i)Id");
  return out;
}

HyperClassification reconstruct_hyper(const OperatorContext& ctx, const Matrix& hflat, const Matrix& i1,
                                      const Matrix& i2, Flavor flavor) {
  HyperClassification out;
  Report& r = out.report;
  const std::size_t n = ctx.n();
  if (hflat.rows() != ctx.m() || hflat.cols() != n)
    throw DimensionError("h♭ must be " + std::to_string(ctx.m()) + "x" + std::to_string(n) + ", got " + hflat.shape_str());
  if (i1.rows() != n || i1.cols() != n || i2.rows() != n || i2.cols() != n)
    throw DimensionError("I1 and I2 must be " + std::to_string(n) + "x" + std::to_string(n));

  const std::size_t rk = rank(hflat);
  r.precondition("hflat_invertible", {}, rk == n, Counterexample{{}, "h♭ has rank " + std::to_string(rk)});
  const Matrix* is[2] = {&i1, &i2};
  for (int k = 0; k < 2; ++k) {
    const Matrix sq = *is[k] * *is[k];
    r.precondition("square", {k + 1}, identity_sign(sq) != 0,
                   Counterexample{{}, "I" + std::to_string(k + 1) + "²=" + sq.str() + " is not ±Id"});
  }
  expect_equal(r, "anticommute", {}, i1 * i2, -(i2 * i1), "I1I2", "−I2I1", ClaimKind::Precondition);
  if (!r.preconditions_ok()) return out;

  HyperClassification c = classify_hyper(ctx, {hflat * i1, hflat * i2, hflat * (i1 * i2)}, flavor);
  r.merge(c.report, "classify");
  out.triple = std::move(c.triple);
  return out;
}

}  // namespace hyperops

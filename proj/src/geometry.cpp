#include "hyperops/geometry.hpp"

#include <string>

#include "claim_util.hpp"
#include "hyperops/errors.hpp"

namespace hyperops {

using detail::expect_equal;
using detail::sign;

namespace {

std::vector<int> basis1(std::initializer_list<std::size_t> xs) {
  std::vector<int> out;
  for (auto x : xs) out.push_back(static_cast<int>(x) + 1);
  return out;
}

bool has_symmetry(const Matrix& m, Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return m.is_symmetric();
    case Symmetry::Skew: return m.is_skew();
    case Symmetry::None: break;
  }
  return m.is_square();
}

void require_form(const BilForm& f, std::size_t dim, Symmetry s, const char* what) {
  if (f.dim() != dim || !f.matrix.is_square())
    throw DimensionError(std::string(what) + " form must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                         ", got " + f.matrix.shape_str());
  if (!has_symmetry(f.matrix, s))
    throw PreconditionError(std::string(what) + " form must be " + symmetry_name(s));
}

void nondegeneracy_claim(Report& r, const BilForm& f, ClaimKind kind) {
  const std::size_t rk = rank(f.matrix);
  if (rk == f.dim()) {
    if (kind == ClaimKind::Precondition)
      r.precondition("nondegenerate", {}, true);
    else
      r.pass("nondegenerate");
  } else {
    r.fail("nondegenerate", {}, {{}, "form has rank " + std::to_string(rk) + " < " + std::to_string(f.dim())}, kind);
  }
}

std::size_t parse_index(std::string_view s, std::string_view whole, std::size_t dim) {
  if (s.size() < 4 || s.front() != 'e' || s.substr(s.size() - 2) != "^*")
    throw ParseError("malformed form term '" + std::string(whole) + "'");
  const std::string_view digits = s.substr(1, s.size() - 3);
  std::size_t idx = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed form term '" + std::string(whole) + "'");
    idx = idx * 10 + static_cast<std::size_t>(c - '0');
  }
  if (digits.empty() || idx < 1 || idx > dim)
    throw ParseError("form term '" + std::string(whole) + "' index out of range for dimension " + std::to_string(dim));
  return idx - 1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

LieAlgebra lie_of(const AlgebraRef& g) {
  if (const auto* lie = std::get_if<LieAlgebra>(&g)) return *lie;
  return subadjacent(std::get<PreLieAlgebra>(g));
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Skew: return "skew";
    case Symmetry::None: break;
  }
  return "none";
}

Scalar BilForm::operator()(const Vector& x, const Vector& y) const {
  Scalar acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) acc += x[i] * matrix(i, j) * y[j];
  }
  return acc;
}

BilForm BilForm::make(Matrix m, Symmetry s) {
  if (!has_symmetry(m, s)) throw DimensionError(std::string("form matrix is not ") + symmetry_name(s) + ": " + m.str());
  return {std::move(m), s};
}

BilForm form_from_terms(std::size_t dim, const std::vector<FormTerm>& terms, Symmetry declared) {
  static constexpr std::string_view wedge = "∧";
  static constexpr std::string_view tensor = "⊗";
  Matrix m(dim, dim);
  for (const auto& t : terms) {
    const std::string_view s = t.term;
    bool is_wedge = true;
    auto pos = s.find(wedge);
    std::size_t op_len = wedge.size();
    if (pos == std::string_view::npos) {
      pos = s.find(tensor);
      op_len = tensor.size();
      is_wedge = false;
    }
    if (pos == std::string_view::npos) throw ParseError("form term '" + t.term + "' has neither ∧ nor ⊗");
    const std::size_t i = parse_index(trim(s.substr(0, pos)), s, dim);
    const std::size_t j = parse_index(trim(s.substr(pos + op_len)), s, dim);
    m(i, j) += t.coeff;
    if (is_wedge) m(j, i) -= t.coeff;
  }
  if (!has_symmetry(m, declared))
    throw ParseError(std::string("form declared ") + symmetry_name(declared) + " but its terms give " + m.str());
  return {std::move(m), declared};
}

Matrix form_to_map(const BilForm& f) { return f.matrix.transpose(); }
BilForm map_to_form(const Matrix& map, Symmetry s) { return {map.transpose(), s}; }

Representation coadjoint_rep(const LieAlgebra& g) { return dual_rep(adjoint_rep(g)); }
Representation coregular_rep(const PreLieAlgebra& g) { return dual_rep(regular_rep(g)); }

Report is_symplectic(const LieAlgebra& g, const BilForm& w) {
  const std::size_t n = g.dim();
  require_form(w, n, Symmetry::Skew, "symplectic");
  Report r;
  r.note_inputs_real(w.matrix.is_real());
  bool cocycle = true;
  for (std::size_t i = 0; i < n && cocycle; ++i)
    for (std::size_t j = i + 1; j < n && cocycle; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        const Scalar s = w(g.basis_bracket(i, j), ek) + w(g.basis_bracket(k, i), ej) + w(g.basis_bracket(j, k), ei);
        if (!s.is_zero()) {
          r.fail("cocycle", {}, {basis1({i, j, k}), "ω([x,y],z)+ω([z,x],y)+ω([y,z],x)=" + s.str()});
          cocycle = false;
          break;
        }
      }
  if (cocycle) r.pass("cocycle");
  nondegeneracy_claim(r, w, ClaimKind::Check);

  const OperatorContext ctx(coadjoint_rep(g));
  const Report rdo = is_rdo(ctx, form_to_map(w));
  r.merge(rdo, "coadjoint");
  if (rdo.ok() == cocycle)
    r.pass("routes_agree");
  else
    r.fail("routes_agree", {}, {{}, std::string("cocycle=") + (cocycle ? "true" : "false") + " but ω♮ rdo=" +
                                       (rdo.ok() ? "true" : "false")});
  return r;
}

Report is_hessian(const PreLieAlgebra& g, const BilForm& b) {
  const std::size_t n = g.dim();
  require_form(b, n, Symmetry::Symmetric, "Hessian");
  Report r;
  r.note_inputs_real(b.matrix.is_real());
  bool ident = true;
  for (std::size_t i = 0; i < n && ident; ++i)
    for (std::size_t j = 0; j < n && ident; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        const Scalar lhs = b(g.basis_product(i, j), ek) - b(ei, g.basis_product(j, k));
        const Scalar rhs = b(g.basis_product(j, i), ek) - b(ej, g.basis_product(i, k));
        if (lhs != rhs) {
          r.fail("identity", {}, {basis1({i, j, k}), "B(x·y,z)−B(x,y·z)=" + lhs.str() + " but B(y·x,z)−B(y,x·z)=" + rhs.str()});
          ident = false;
          break;
        }
      }
  if (ident) r.pass("identity");
  nondegeneracy_claim(r, b, ClaimKind::Check);

  const OperatorContext ctx(coregular_rep(g));
  const Report rdo = is_rdo(ctx, form_to_map(b));
  r.merge(rdo, "coregular");
  if (rdo.ok() == ident)
    r.pass("routes_agree");
  else
    r.fail("routes_agree", {}, {{}, std::string("identity=") + (ident ? "true" : "false") + " but B♮ rdo=" +
                                       (rdo.ok() ? "true" : "false")});
  return r;
}

HyperClassification classify_hyper_symplectic(const LieAlgebra& g, const std::array<BilForm, 3>& w) {
  HyperClassification out;
  for (int i = 0; i < 3; ++i) out.report.merge_as_precondition(is_symplectic(g, w[i]), "form", {i + 1});
  if (!out.report.preconditions_ok()) return out;
  HyperClassification c = classify_hyper(OperatorContext(coadjoint_rep(g)),
                                         {form_to_map(w[0]), form_to_map(w[1]), form_to_map(w[2])}, Flavor::Symplectic);
  out.report.merge(c.report);
  out.triple = std::move(c.triple);
  return out;
}

HyperClassification classify_hyper_hessian(const PreLieAlgebra& g, const std::array<BilForm, 3>& b) {
  HyperClassification out;
  for (int i = 0; i < 3; ++i) out.report.merge_as_precondition(is_hessian(g, b[i]), "form", {i + 1});
  if (!out.report.preconditions_ok()) return out;
  HyperClassification c = classify_hyper(OperatorContext(coregular_rep(g)),
                                         {form_to_map(b[0]), form_to_map(b[1]), form_to_map(b[2])}, Flavor::Hessian);
  out.report.merge(c.report);
  out.triple = std::move(c.triple);
  return out;
}

const char* hermitian_variant_name(HermitianVariant v) {
  switch (v) {
    case HermitianVariant::Hermitian: return "hermitian";
    case HermitianVariant::ParaHermitian: return "para-hermitian";
    case HermitianVariant::AntiHermitian: return "anti-hermitian";
    case HermitianVariant::ParaAntiHermitian: return "para-anti-hermitian";
  }
  return "?";
}

std::optional<HermitianVariant> parse_hermitian_variant(std::string_view s) {
  for (auto v : {HermitianVariant::Hermitian, HermitianVariant::ParaHermitian, HermitianVariant::AntiHermitian,
                 HermitianVariant::ParaAntiHermitian})
    if (s == hermitian_variant_name(v)) return v;
  return std::nullopt;
}

Report check_hermitian_variant(const LieAlgebra& g, const BilForm& f, const Matrix& I, HermitianVariant variant) {
  const bool anti = variant == HermitianVariant::AntiHermitian || variant == HermitianVariant::ParaAntiHermitian;
  const bool para = variant == HermitianVariant::ParaHermitian || variant == HermitianVariant::ParaAntiHermitian;
  const std::size_t n = g.dim();
  require_form(f, n, anti ? Symmetry::Skew : Symmetry::Symmetric, hermitian_variant_name(variant));
  if (I.rows() != n || I.cols() != n) throw DimensionError("I must be " + std::to_string(n) + "x" + std::to_string(n));

  Report r;
  r.note_inputs_real(f.matrix.is_real() && I.is_real());
  nondegeneracy_claim(r, f, ClaimKind::Precondition);
  const NijenhuisResult nij = is_nijenhuis(g, I);
  r.merge_as_precondition(nij.report, "I");
  const bool square_ok = para ? nij.para_complex : nij.complex;
  r.precondition("I_square", {}, square_ok,
                 Counterexample{{}, std::string("I² must be ") + (para ? "Id" : "−Id") + ", got " + (I * I).str()});

  const Matrix lhs = I.transpose() * f.matrix * I;
  const Matrix rhs = para ? -f.matrix : f.matrix;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lhs(a, b) != rhs(a, b))
        return r.fail("invariance", {}, {basis1({a, b}), "f(Ix,Iy)=" + lhs(a, b).str() + " but " +
                                                          (para ? "−f(x,y)=" : "f(x,y)=") + rhs(a, b).str()});
  return r.pass("invariance");
}

const char* kahler_variant_name(KahlerVariant v) {
  switch (v) {
    case KahlerVariant::HyperKahler: return "hyper-kahler";
    case KahlerVariant::ParaHyperKahler: return "para-hyper-kahler";
    case KahlerVariant::HyperAntiKahler: return "hyper-anti-kahler";
    case KahlerVariant::ParaHyperAntiKahler: return "para-hyper-anti-kahler";
  }
  return "?";
}

std::array<BilForm, 3> induced_forms(const KahlerQuad& q) {
  const bool anti = q.variant == KahlerVariant::HyperAntiKahler || q.variant == KahlerVariant::ParaHyperAntiKahler;
  const Symmetry s = anti ? Symmetry::Symmetric : Symmetry::Skew;
  std::array<BilForm, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = {q.I[i].transpose() * q.form.matrix, s};
  return out;
}

KahlerQuad quad_from_decomposition(const Decomposition& dec, bool anti) {
  KahlerQuad q;
  q.form = map_to_form(dec.hflat, anti ? Symmetry::Skew : Symmetry::Symmetric);
  q.I = dec.I;
  if (anti)
    q.variant = dec.para ? KahlerVariant::ParaHyperAntiKahler : KahlerVariant::HyperAntiKahler;
  else
    q.variant = dec.para ? KahlerVariant::ParaHyperKahler : KahlerVariant::HyperKahler;
  return q;
}

Report check_kahler_quad(const AlgebraRef& g, const KahlerQuad& q) {
  const bool anti = q.variant == KahlerVariant::HyperAntiKahler || q.variant == KahlerVariant::ParaHyperAntiKahler;
  const bool para = q.variant == KahlerVariant::ParaHyperKahler || q.variant == KahlerVariant::ParaHyperAntiKahler;
  if (anti && !std::holds_alternative<PreLieAlgebra>(g))
    throw PreconditionError("anti-Kähler checks need the pre-Lie structure supplied explicitly");
  const LieAlgebra lie = lie_of(g);
  const std::size_t n = lie.dim();
  for (const auto& m : q.I)
    if (m.rows() != n || m.cols() != n) throw DimensionError("I must be " + std::to_string(n) + "x" + std::to_string(n));
  if (q.form.dim() != n || !q.form.matrix.is_square())
    throw DimensionError("form must be " + std::to_string(n) + "x" + std::to_string(n));

  Report r;
  r.note_inputs_real(q.form.matrix.is_real() && q.I[0].is_real() && q.I[1].is_real() && q.I[2].is_real());
  const Matrix id = Matrix::identity(n);
  expect_equal(r, "I3_product", {}, q.I[2], q.I[0] * q.I[1], "I3", "I1I2", ClaimKind::Precondition);
  expect_equal(r, "anticommute", {}, q.I[0] * q.I[1], -(q.I[1] * q.I[0]), "I1I2", "−I2I1", ClaimKind::Precondition);
  for (int i = 0; i < 2; ++i)
    expect_equal(r, "square", {i + 1}, q.I[i] * q.I[i], para ? id : -id, "I(i)²", para ? "Id" : "−Id",
                 ClaimKind::Precondition);
  if (!r.preconditions_ok()) return r;

  const Symmetry form_sym = anti ? Symmetry::Skew : Symmetry::Symmetric;
  if (!has_symmetry(q.form.matrix, form_sym)) {
    r.fail("form_symmetry", {}, {{}, std::string("form is not ") + symmetry_name(form_sym) + ": " + q.form.matrix.str()});
    return r;
  }
  r.pass("form_symmetry");
  BilForm form{q.form.matrix, form_sym};

  const HermitianVariant hv = anti ? (para ? HermitianVariant::ParaAntiHermitian : HermitianVariant::AntiHermitian)
                                   : (para ? HermitianVariant::ParaHermitian : HermitianVariant::Hermitian);
  for (int i = 0; i < 2; ++i) r.merge_as_check(check_hermitian_variant(lie, form, q.I[i], hv), "hermitian", {i + 1});

  const std::array<BilForm, 3> forms = induced_forms(q);
  bool forms_ok = true;
  for (int i = 0; i < 3; ++i) {
    if (!has_symmetry(forms[i].matrix, forms[i].symmetry)) {
      r.fail("induced_symmetry", {i + 1}, {{}, std::string("induced form is not ") + symmetry_name(forms[i].symmetry)});
      forms_ok = false;
      continue;
    }
    r.pass("induced_symmetry", {i + 1});
    const Report fr = anti ? is_hessian(std::get<PreLieAlgebra>(g), forms[i]) : is_symplectic(lie, forms[i]);
    forms_ok = forms_ok && fr.ok();
    r.merge_as_check(fr, "induced", {i + 1});
  }
  if (!forms_ok) return r;

  HyperClassification c = anti ? classify_hyper_hessian(std::get<PreLieAlgebra>(g), forms)
                               : classify_hyper_symplectic(lie, forms);
  r.merge_as_check(c.report, "classify");
  if (!c.triple) return r;
  const std::array<int, 3> want = para ? std::array<int, 3>{1, 1, -1} : std::array<int, 3>{-1, -1, -1};
  const HyperTriple& t = *c.triple;
  if (t.eps == want)
    r.pass("eps");
  else
    r.fail("eps", {}, {{}, "induced ε=(" + std::to_string(t.eps[0]) + "," + std::to_string(t.eps[1]) + "," +
                               std::to_string(t.eps[2]) + "), predicted (" + std::to_string(want[0]) + "," +
                               std::to_string(want[1]) + "," + std::to_string(want[2]) + ")"});

  if (t.eps_product() != -1) return r;
  const Decomposition dec = decompose_hyper(t);
  r.merge_as_check(dec.report, "decompose");
  expect_equal(r, "round_trip.hflat", {}, dec.hflat, form_to_map(form), "decomposed h♭", "form♮");
  for (int i = 0; i < 3; ++i)
    expect_equal(r, "round_trip.I", {i + 1}, dec.I[i], q.I[i], "decomposed I(i)", "I(i)");
  const HyperClassification rebuilt = reconstruct_hyper(t.ctx, dec.hflat, dec.I[0], dec.I[1], t.flavor);
  r.merge_as_check(rebuilt.report, "rebuild");
  if (rebuilt.triple)
    for (int i = 1; i <= 3; ++i)
      expect_equal(r, "rebuild.d", {i}, rebuilt.triple->D(i), t.D(i), "rebuilt d(i)", "d(i)");
  return r;
}

Report is_invariant_form(const AlgebraRef& g, const BilForm& f) {
  Report r;
  if (const auto* lie = std::get_if<LieAlgebra>(&g)) {
    const std::size_t n = lie->dim();
    require_form(f, n, Symmetry::Symmetric, "ad-invariant");
    r.note_inputs_real(f.matrix.is_real());
    nondegeneracy_claim(r, f, ClaimKind::Precondition);
    bool ident = true;
    for (std::size_t i = 0; i < n && ident; ++i)
      for (std::size_t j = 0; j < n && ident; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar s = f(lie->basis_bracket(i, j), unit(n, k)) + f(unit(n, j), lie->basis_bracket(i, k));
          if (!s.is_zero()) {
            r.fail("identity", {}, {basis1({i, j, k}), "B([x,y],z)+B(y,[x,z])=" + s.str()});
            ident = false;
            break;
          }
        }
    if (ident) r.pass("identity");
    const Matrix sharp = form_to_map(f);
    const Representation ad = adjoint_rep(*lie);
    bool conj = true;
    for (std::size_t i = 0; i < n && conj; ++i)
      conj = expect_equal(r, "sharp_conjugation", {static_cast<int>(i) + 1}, -ad.mats[i].transpose() * sharp,
                          sharp * ad.mats[i], "ad*(x)B♯", "B♯ad(x)");
    if (ident == conj)
      r.pass("routes_agree");
    else
      r.fail("routes_agree", {}, {{}, "identity and B♯ conjugation disagree"});
    return r;
  }
  const auto& pre = std::get<PreLieAlgebra>(g);
  const LieAlgebra lie = subadjacent(pre);
  const std::size_t n = pre.dim();
  require_form(f, n, Symmetry::Skew, "invariant");
  r.note_inputs_real(f.matrix.is_real());
  nondegeneracy_claim(r, f, ClaimKind::Precondition);
  bool ident = true;
  for (std::size_t i = 0; i < n && ident; ++i)
    for (std::size_t j = 0; j < n && ident; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar s = f(pre.basis_product(i, j), unit(n, k)) + f(unit(n, j), lie.basis_bracket(i, k));
        if (!s.is_zero()) {
          r.fail("identity", {}, {basis1({i, j, k}), "ω(x·y,z)+ω(y,[x,z])=" + s.str()});
          ident = false;
          break;
        }
      }
  if (ident) r.pass("identity");
  const Matrix flat = form_to_map(f);
  const Representation ad = adjoint_rep(lie);
  bool conj = true;
  for (std::size_t i = 0; i < n && conj; ++i) {
    const Matrix l = left_multiplication(pre, unit(n, i));
    conj = expect_equal(r, "flat_conjugation", {static_cast<int>(i) + 1}, -l.transpose() * flat, flat * ad.mats[i],
                        "L*(x)ω♮", "ω♮ad(x)");
  }
  if (ident == conj)
    r.pass("routes_agree");
  else
    r.fail("routes_agree", {}, {{}, "identity and ω♮ conjugation disagree"});
  return r;
}

Report endomorphism_symmetry(const BilForm& f, const Matrix& phi, EndoKind kind) {
  const std::size_t n = f.dim();
  if (phi.rows() != n || phi.cols() != n)
    throw DimensionError("endomorphism must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " + phi.shape_str());
  Report r;
  const Matrix g = phi.transpose() * f.matrix;
  const char* id = kind == EndoKind::Symmetric ? "symmetric_endomorphism" : "skew_endomorphism";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Scalar want = kind == EndoKind::Symmetric ? g(b, a) : -g(b, a);
      if (g(a, b) != want)
        return r.fail(id, {}, {basis1({a, b}), "f(φx,y)=" + g(a, b).str() + " but f(φy,x)=" + g(b, a).str()});
    }
  return r.pass(id);
}

CorrespondenceResult endo_triple_correspondence(const AlgebraRef& g, const BilForm& f, const std::array<Matrix, 3>& d,
                                                CorrespondenceSetting setting) {
  const bool lie_b = setting == CorrespondenceSetting::LieB;
  if (lie_b && !std::holds_alternative<LieAlgebra>(g))
    throw PreconditionError("the lie-B setting needs a Lie algebra");
  if (!lie_b && !std::holds_alternative<PreLieAlgebra>(g))
    throw PreconditionError("the prelie-omega setting needs a pre-Lie algebra");

  CorrespondenceResult out;
  Report& r = out.report;
  r.merge_as_precondition(is_invariant_form(g, f), "invariant");
  for (int i = 1; i <= 3; ++i) {
    const Matrix& di = d[i - 1];
    const std::size_t rk = rank(di);
    r.precondition("invertible", {i}, rk == f.dim() && di.is_square(),
                   Counterexample{{}, "d" + std::to_string(i) + " has rank " + std::to_string(rk)});
    r.merge_as_precondition(endomorphism_symmetry(f, di, lie_b ? EndoKind::Skew : EndoKind::Symmetric), "", {i});
    if (lie_b)
      r.merge_as_precondition(check_lie_derivation(std::get<LieAlgebra>(g), di), "", {i});
    else
      r.merge_as_precondition(check_prelie_derivation(std::get<PreLieAlgebra>(g), di), "", {i});
  }
  if (!r.preconditions_ok()) return out;

  const OperatorContext op_ctx(lie_b ? adjoint_rep(std::get<LieAlgebra>(g)) : regular_rep(std::get<PreLieAlgebra>(g)));
  const HyperClassification op_side = classify_hyper(op_ctx, d);

  std::array<BilForm, 3> forms;
  for (int i = 0; i < 3; ++i) forms[i] = {d[i].transpose() * f.matrix, lie_b ? Symmetry::Skew : Symmetry::Symmetric};
  const HyperClassification form_side = lie_b ? classify_hyper_symplectic(std::get<LieAlgebra>(g), forms)
                                              : classify_hyper_hessian(std::get<PreLieAlgebra>(g), forms);
  if (op_side.triple) out.operator_eps = op_side.triple->eps;
  if (form_side.triple) out.form_eps = form_side.triple->eps;

  auto eps_str = [](const std::optional<std::array<int, 3>>& e) {
    if (!e) return std::string("unclassified");
    return "(" + std::to_string((*e)[0]) + "," + std::to_string((*e)[1]) + "," + std::to_string((*e)[2]) + ")";
  };
  if (out.operator_eps == out.form_eps)
    r.pass("directions_agree");
  else
    r.fail("directions_agree", {}, {{}, "operator side " + eps_str(out.operator_eps) + " but form side " +
                                            eps_str(out.form_eps)});
  if (!op_side.triple || !form_side.triple) return out;

  const HyperTriple& ot = *op_side.triple;
  const HyperTriple& ft = *form_side.triple;
  for (int i = 1; i <= 3; ++i) expect_equal(r, "N_match", {i}, ft.N(i), ot.N(i), "N(i) of forms", "d(i−1)⁻¹d(i+1)");
  const Matrix endo = sign(ot.E(3) * ot.E(2)) * (d[2] * invert(d[0]) * d[1]);
  expect_equal(r, "hflat_factorization", {}, ft.hflat, form_to_map(f) * endo, "h♭ of forms", "f♮∘ε₃ε₂d₃d₁⁻¹d₂");
  return out;
}

}  // namespace hyperops

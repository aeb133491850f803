#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperops/hyper.hpp"

namespace hyperops {

using AlgebraRef = std::variant<LieAlgebra, PreLieAlgebra>;
/// The Lie algebra of `g`, taking the sub-adjacent algebra of a pre-Lie one.
LieAlgebra lie_of(const AlgebraRef& g);

enum class Symmetry { Symmetric, Skew, None };
const char* symmetry_name(Symmetry s);

/// Bilinear form with M(i,j) = f(eᵢ, eⱼ).
struct BilForm {
  Matrix matrix;
  Symmetry symmetry = Symmetry::None;

  std::size_t dim() const noexcept { return matrix.rows(); }
  bool nondegenerate() const { return is_invertible(matrix); }
  /// f(x, y) = xᵀ M y.
  Scalar operator()(const Vector& x, const Vector& y) const;
  /// Throws DimensionError if the matrix does not have the declared symmetry.
  static BilForm make(Matrix m, Symmetry s);
};

/// "e1^*∧e2^*" adds +1 at (1,2) and −1 at (2,1); "e1^*⊗e2^*" adds +1 at (1,2).
struct FormTerm {
  std::string term;
  Scalar coeff;
};
/// Throws ParseError on malformed terms.
BilForm form_from_terms(std::size_t dim, const std::vector<FormTerm>& terms, Symmetry declared);

/// Matrix of x ↦ f(x, ·) in dual bases, i.e. Mᵀ in the column convention.
Matrix form_to_map(const BilForm& f);
/// Inverse of form_to_map.
BilForm map_to_form(const Matrix& map, Symmetry s);

Representation coadjoint_rep(const LieAlgebra& g);
/// Coregular representation of the sub-adjacent algebra.
Representation coregular_rep(const PreLieAlgebra& g);

Report is_symplectic(const LieAlgebra& g, const BilForm& w);
Report is_hessian(const PreLieAlgebra& g, const BilForm& b);

/// Each form must pass its own check (preconditions) before classification.
HyperClassification classify_hyper_symplectic(const LieAlgebra& g, const std::array<BilForm, 3>& w);
HyperClassification classify_hyper_hessian(const PreLieAlgebra& g, const std::array<BilForm, 3>& b);

enum class HermitianVariant { Hermitian, ParaHermitian, AntiHermitian, ParaAntiHermitian };
const char* hermitian_variant_name(HermitianVariant v);
std::optional<HermitianVariant> parse_hermitian_variant(std::string_view s);
/// f(Ix, Iy) = ±f(x, y) with the variant's sign.
Report check_hermitian_variant(const LieAlgebra& g, const BilForm& f, const Matrix& I, HermitianVariant variant);

enum class KahlerVariant { HyperKahler, ParaHyperKahler, HyperAntiKahler, ParaHyperAntiKahler };
const char* kahler_variant_name(KahlerVariant v);

struct KahlerQuad {
  BilForm form;
  std::array<Matrix, 3> I;
  KahlerVariant variant = KahlerVariant::HyperKahler;
};
/// Induced forms fᵢ(x,y) = f(Iᵢx, y).
std::array<BilForm, 3> induced_forms(const KahlerQuad& q);
/// Builds the quad (h♭ read as a form, I₁, I₂, I₃) from a decomposition.
KahlerQuad quad_from_decomposition(const Decomposition& dec, bool anti);
Report check_kahler_quad(const AlgebraRef& g, const KahlerQuad& q);

/// B([x,y],z) + B(y,[x,z]) = 0 for a symmetric form on a Lie algebra;
/// ω(x·y,z) + ω(y,[x,z]) = 0 for a skew form on a pre-Lie algebra.
/// Both are cross-checked against the ♯/♮ conjugation identities.
Report is_invariant_form(const AlgebraRef& g, const BilForm& f);

enum class EndoKind { Symmetric, Skew };
/// (x,y) ↦ f(φx, y) is symmetric or skew.
Report endomorphism_symmetry(const BilForm& f, const Matrix& phi, EndoKind kind);

enum class CorrespondenceSetting { LieB, PreLieOmega };
struct CorrespondenceResult {
  Report report;
  std::optional<std::array<int, 3>> operator_eps;  // the endomorphism triple
  std::optional<std::array<int, 3>> form_eps;      // the induced forms
};
CorrespondenceResult endo_triple_correspondence(const AlgebraRef& g, const BilForm& f, const std::array<Matrix, 3>& d,
                                                CorrespondenceSetting setting);

}  // namespace hyperops

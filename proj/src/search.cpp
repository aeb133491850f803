#include "hyperops/search.hpp"

#include <functional>
#include <string>

#include "hyperops/errors.hpp"

namespace hyperops {

const char* form_target_name(FormTarget t) {
  switch (t) {
    case FormTarget::Symplectic: return "symplectic";
    case FormTarget::Hessian: return "hessian";
    case FormTarget::AdInvariant: return "ad-invariant";
    case FormTarget::PreLieInvariant: return "prelie-invariant";
  }
  return "?";
}

std::optional<FormTarget> parse_form_target(std::string_view s) {
  for (auto t : {FormTarget::Symplectic, FormTarget::Hessian, FormTarget::AdInvariant, FormTarget::PreLieInvariant})
    if (s == form_target_name(t)) return t;
  return std::nullopt;
}

Symmetry target_symmetry(FormTarget t) {
  return t == FormTarget::Symplectic || t == FormTarget::PreLieInvariant ? Symmetry::Skew : Symmetry::Symmetric;
}

std::vector<std::pair<std::size_t, std::size_t>> form_coordinates(std::size_t dim, Symmetry s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = s == Symmetry::Skew ? i + 1 : i; j < dim; ++j) out.emplace_back(i, j);
  return out;
}

Vector coordinates_of(const BilForm& f) {
  Vector out;
  for (auto [i, j] : form_coordinates(f.dim(), f.symmetry)) out.push_back(f.matrix(i, j));
  return out;
}

BilForm form_from_coordinates(std::size_t dim, Symmetry s, const Vector& coords) {
  const auto cs = form_coordinates(dim, s);
  if (coords.size() != cs.size())
    throw DimensionError("expected " + std::to_string(cs.size()) + " coordinates, got " + std::to_string(coords.size()));
  Matrix m(dim, dim);
  for (std::size_t c = 0; c < cs.size(); ++c) {
    auto [i, j] = cs[c];
    m(i, j) = coords[c];
    if (i != j) m(j, i) = s == Symmetry::Skew ? -coords[c] : coords[c];
  }
  return {std::move(m), s};
}

namespace {

using Residuals = std::function<Vector(const BilForm&)>;

Residuals residuals_for(const AlgebraRef& g, FormTarget target) {
  const bool lie_target = target == FormTarget::Symplectic || target == FormTarget::AdInvariant;
  if (lie_target && !std::holds_alternative<LieAlgebra>(g))
    throw PreconditionError(std::string("target ") + form_target_name(target) + " needs a Lie algebra");
  if (!lie_target && !std::holds_alternative<PreLieAlgebra>(g))
    throw PreconditionError(std::string("target ") + form_target_name(target) + " needs a pre-Lie algebra");

  switch (target) {
    case FormTarget::Symplectic:
      return [lie = std::get<LieAlgebra>(g)](const BilForm& w) {
        const std::size_t n = lie.dim();
        Vector out;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
              out.push_back(w(lie.basis_bracket(i, j), unit(n, k)) + w(lie.basis_bracket(k, i), unit(n, j)) +
                            w(lie.basis_bracket(j, k), unit(n, i)));
        return out;
      };
    case FormTarget::AdInvariant:
      return [lie = std::get<LieAlgebra>(g)](const BilForm& b) {
        const std::size_t n = lie.dim();
        Vector out;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              out.push_back(b(lie.basis_bracket(i, j), unit(n, k)) + b(unit(n, j), lie.basis_bracket(i, k)));
        return out;
      };
    case FormTarget::Hessian:
      return [pre = std::get<PreLieAlgebra>(g)](const BilForm& b) {
        const std::size_t n = pre.dim();
        Vector out;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              out.push_back(b(pre.basis_product(i, j), unit(n, k)) - b(unit(n, i), pre.basis_product(j, k)) -
                            b(pre.basis_product(j, i), unit(n, k)) + b(unit(n, j), pre.basis_product(i, k)));
        return out;
      };
    case FormTarget::PreLieInvariant:
      return [pre = std::get<PreLieAlgebra>(g), lie = subadjacent(std::get<PreLieAlgebra>(g))](const BilForm& w) {
        const std::size_t n = pre.dim();
        Vector out;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              out.push_back(w(pre.basis_product(i, j), unit(n, k)) + w(unit(n, j), lie.basis_bracket(i, k)));
        return out;
      };
  }
  throw PreconditionError("unknown target");
}

/// The same space expressed over all n² matrix entries, row-major.
AffineSolutionSpace matrix_space(const FormSpaceResult& r) {
  const Symmetry s = target_symmetry(r.target);
  auto entries = [&](const Vector& coords) { return form_from_coordinates(r.dim, s, coords).matrix.entries(); };
  AffineSolutionSpace out{entries(r.space.particular), {}};
  for (const auto& b : r.space.basis) out.basis.push_back(entries(b));
  return out;
}

}  // namespace

FormSpaceResult solve_forms(const AlgebraRef& g, FormTarget target) {
  const Residuals residuals = residuals_for(g, target);
  const std::size_t n = std::holds_alternative<LieAlgebra>(g) ? std::get<LieAlgebra>(g).dim()
                                                               : std::get<PreLieAlgebra>(g).dim();
  const Symmetry s = target_symmetry(target);
  const std::size_t ncoords = form_coordinates(n, s).size();

  std::vector<Vector> cols;
  for (std::size_t c = 0; c < ncoords; ++c) {
    Vector e(ncoords);
    e[c] = Scalar(1);
    cols.push_back(residuals(form_from_coordinates(n, s, e)));
  }
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  const Matrix a = rows == 0 ? Matrix(0, ncoords) : Matrix::from_columns(cols, rows);

  FormSpaceResult out;
  out.target = target;
  out.dim = n;
  if (rows == 0) {
    out.space.particular = Vector(ncoords);
    for (std::size_t c = 0; c < ncoords; ++c) out.space.basis.push_back(unit(ncoords, c));
  } else {
    out.space = *solve_affine(a, Vector(rows));
  }
  out.generic_det = generic_determinant(matrix_space(out), n);
  out.exists_nondegenerate = !out.generic_det.is_zero();
  return out;
}

BilForm instantiate(const FormSpaceResult& result, const Vector& params) {
  if (params.size() != result.space.dim())
    throw DimensionError("expected " + std::to_string(result.space.dim()) + " parameters, got " +
                         std::to_string(params.size()));
  return form_from_coordinates(result.dim, target_symmetry(result.target), result.space.point(params));
}

std::optional<Vector> FormSpaceResult::parameters_of(const BilForm& f) const {
  if (f.dim() != dim) return std::nullopt;
  const Symmetry s = target_symmetry(target);
  if (s == Symmetry::Skew ? !f.matrix.is_skew() : !f.matrix.is_symmetric()) return std::nullopt;
  const Vector coords = coordinates_of(BilForm{f.matrix, s});
  const Vector rhs = coords - space.particular;
  if (space.basis.empty()) return is_zero(rhs) ? std::optional<Vector>(Vector{}) : std::nullopt;
  const Matrix b = Matrix::from_columns(space.basis, coords.size());
  auto sol = solve_affine(b, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace hyperops

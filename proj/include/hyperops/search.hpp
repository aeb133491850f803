#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperops/geometry.hpp"
#include "hyperops/poly.hpp"

namespace hyperops {

enum class FormTarget { Symplectic, Hessian, AdInvariant, PreLieInvariant };
const char* form_target_name(FormTarget t);
std::optional<FormTarget> parse_form_target(std::string_view s);
Symmetry target_symmetry(FormTarget t);

/// Free coordinates of a symmetry class, row-major over the upper triangle
/// (i<j for skew forms, i≤j for symmetric ones), 0-based.
std::vector<std::pair<std::size_t, std::size_t>> form_coordinates(std::size_t dim, Symmetry s);
Vector coordinates_of(const BilForm& f);
BilForm form_from_coordinates(std::size_t dim, Symmetry s, const Vector& coords);

struct FormSpaceResult {
  FormTarget target = FormTarget::Symplectic;
  std::size_t dim = 0;
  AffineSolutionSpace space;  // over form_coordinates(dim, target_symmetry(target))
  Poly generic_det;
  bool exists_nondegenerate = false;

  /// Parameters p with particular + Σ p_k basis_k = coordinates_of(f), if f
  /// lies in the space.
  std::optional<Vector> parameters_of(const BilForm& f) const;
};

/// Throws PreconditionError when the algebra kind does not fit the target.
FormSpaceResult solve_forms(const AlgebraRef& g, FormTarget target);
/// Throws DimensionError unless params.size() == space dimension.
BilForm instantiate(const FormSpaceResult& result, const Vector& params);

}  // namespace hyperops

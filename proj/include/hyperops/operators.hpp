#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperops/algebra.hpp"
#include "hyperops/matrix.hpp"
#include "hyperops/report.hpp"

namespace hyperops {

/// A Lie algebra together with a representation on a module V.
struct OperatorContext {
  LieAlgebra g;
  Representation rep;

  explicit OperatorContext(Representation r) : g(r.algebra), rep(std::move(r)) {}
  std::size_t n() const noexcept { return g.dim(); }
  std::size_t m() const noexcept { return rep.module_dim; }
};

enum class Space { Algebra, Module };

/// Matrix with domain/codomain tags. d: 𝔤→V is m×n, T: V→𝔤 is n×m,
/// N: 𝔤→𝔤 is n×n, S: V→V is m×m.
struct LinMap {
  Matrix matrix;
  Space domain = Space::Algebra;
  Space codomain = Space::Algebra;
};

/// Throws DimensionError unless `map` has the shape its tags require in `ctx`.
void require_tagged_shape(const OperatorContext& ctx, const LinMap& map);

/// d[x,y] = ρ(x)d(y) − ρ(y)d(x) on basis pairs i<j.
Report is_rdo(const OperatorContext& ctx, const Matrix& d);
/// x ↦ ρ(x)u.
Matrix inner_rdo(const OperatorContext& ctx, const Vector& u);
/// [Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u) on module basis pairs.
Report is_o_operator(const OperatorContext& ctx, const Matrix& t);

struct NijenhuisResult {
  Report report;
  bool complex = false;       // N² = −Id
  bool para_complex = false;  // N² = Id
};
NijenhuisResult is_nijenhuis(const LieAlgebra& g, const Matrix& n);

/// [x,y]_N = [Nx,y] + [x,Ny] − N[x,y]. Throws PreconditionError with the
/// violating pair if N is not Nijenhuis.
LieAlgebra deformed_bracket(const LieAlgebra& g, const Matrix& n);

Report is_dual_nijenhuis_pair(const OperatorContext& ctx, const Matrix& n, const Matrix& s);
/// ϱ(x) = ρ(Nx) − [ρ(x), S], a representation of (𝔤, [·,·]_N).
Representation deformed_representation(const OperatorContext& ctx, const Matrix& n, const Matrix& s);

struct InducedStructure {
  PreLieAlgebra star;  // u ⋆ v = ρ(Tu)v
  LieAlgebra bracket;  // [u,v]^T
};
/// Throws PreconditionError if T is not an O-operator.
InducedStructure bracket_T(const OperatorContext& ctx, const Matrix& t);

/// Compares [·,·]^{N∘T}, [·,·]^T_S and {·,·}^T_ϱ on module basis pairs.
/// Throws PreconditionError naming the basis vector where N∘T ≠ T∘S.
Report brackets_coincide(const OperatorContext& ctx, const Matrix& t, const Matrix& s, const Matrix& n);

Report is_dn(const OperatorContext& ctx, const Matrix& d, const Matrix& n);
Report dn_powers(const OperatorContext& ctx, const Matrix& d, const Matrix& n, unsigned kmax);
/// N := T∘d; passes iff d∘N is an RDO.
Report is_kd(const OperatorContext& ctx, const Matrix& t, const Matrix& d);
Report is_kn(const OperatorContext& ctx, const Matrix& t, const Matrix& s, const Matrix& n);

using SamplePairs = std::vector<std::pair<int, int>>;
SamplePairs default_samples();
Report are_compatible(const OperatorContext& ctx, const Matrix& t1, const Matrix& t2,
                      const SamplePairs& samples = default_samples());
/// Nᵏ∘T are O-operators and pairwise compatible for 0 ≤ k < l ≤ kmax.
Report kn_hierarchy(const OperatorContext& ctx, const Matrix& t, const Matrix& s, const Matrix& n, unsigned kmax);

}  // namespace hyperops

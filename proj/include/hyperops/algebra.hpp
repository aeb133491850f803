#pragma once

#include <cstddef>
#include <vector>

#include "hyperops/matrix.hpp"
#include "hyperops/report.hpp"

namespace hyperops {

/// Cubic array t[i][j][k] of scalars (0-based storage).
class StructureTensor {
public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
  std::size_t dim_ = 0;
  Vector data_;
};

/// One structure-constant record: e_i ∘ e_j has coefficient `coeff` on e_k
/// (1-based, as in all I/O).
struct StructureEntry {
  int i;
  int j;
  int k;
  Scalar coeff;
};

/// Lie algebra by structure constants: [e_i, e_j] = Σ_k c(i,j,k) e_k.
/// Stored as plain data; validity is a separate step (check_lie).
struct LieAlgebra {
  StructureTensor c;

  std::size_t dim() const noexcept { return c.dim(); }
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  static LieAlgebra abelian(std::size_t dim) { return {StructureTensor(dim)}; }
  /// Builds from records; with `antisymmetric` each record also sets the
  /// (j,i,k) entry to −coeff.
  static LieAlgebra from_entries(std::size_t dim, const std::vector<StructureEntry>& entries,
                                 bool antisymmetric = true);
  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

/// Pre-Lie algebra by structure constants: e_i · e_j = Σ_k p(i,j,k) e_k.
struct PreLieAlgebra {
  StructureTensor p;

  std::size_t dim() const noexcept { return p.dim(); }
  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector product(const Vector& x, const Vector& y) const;

  static PreLieAlgebra zero(std::size_t dim) { return {StructureTensor(dim)}; }
  static PreLieAlgebra from_entries(std::size_t dim, const std::vector<StructureEntry>& entries);
  friend bool operator==(const PreLieAlgebra&, const PreLieAlgebra&) = default;
};

/// ρ: g → gl(V), stored as one module_dim × module_dim matrix per basis
/// element of g.
struct Representation {
  LieAlgebra algebra;
  std::size_t module_dim = 0;
  std::vector<Matrix> mats;

  /// ρ(x) = Σ x_i ρ(e_i).
  Matrix of(const Vector& x) const;
  const Matrix& of_basis(std::size_t i) const { return mats.at(i); }
};

/// Antisymmetry and Jacobi on basis triples; one failing claim per violation.
Report check_lie(const LieAlgebra& g);
/// Left-symmetry of the associator on basis triples.
Report check_prelie(const PreLieAlgebra& g);
/// Shapes plus ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)] on basis pairs.
Report check_representation(const Representation& r);

/// [x,y] = x·y − y·x.
LieAlgebra subadjacent(const PreLieAlgebra& g);
Representation adjoint_rep(const LieAlgebra& g);
/// L(e_i) e_j = e_i·e_j, as a representation of the sub-adjacent algebra.
Representation regular_rep(const PreLieAlgebra& g);
/// ρ*(x) = −ρ(x)ᵀ in the dual basis.
Representation dual_rep(const Representation& r);
Representation trivial_rep(const LieAlgebra& g, std::size_t module_dim);

/// D[x,y] = [Dx,y] + [x,Dy] on basis pairs.
Report check_lie_derivation(const LieAlgebra& g, const Matrix& d);
/// D(x·y) = D(x)·y + x·D(y) on basis pairs.
Report check_prelie_derivation(const PreLieAlgebra& g, const Matrix& d);

/// Left multiplication matrix L(x) of a pre-Lie algebra.
Matrix left_multiplication(const PreLieAlgebra& g, const Vector& x);

}  // namespace hyperops

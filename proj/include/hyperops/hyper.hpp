#pragma once

#include <array>
#include <optional>

#include "hyperops/operators.hpp"

namespace hyperops {

enum class Flavor { Rdo, Symplectic, Hessian };
const char* flavor_name(Flavor f);

/// Three invertible relative differential operators d₁,d₂,d₃ with the
/// derived maps Tᵢ = dᵢ⁻¹, Nᵢ = T_{i−1}∘d_{i+1}, Sᵢ = d_{i+1}∘T_{i−1}.
/// All accessors take 1-based indices read cyclically (0 ≡ 3, 4 ≡ 1).
struct HyperTriple {
  OperatorContext ctx;
  std::array<Matrix, 3> d, t, n, s;
  std::array<int, 3> eps{};
  Matrix hflat;
  Flavor flavor = Flavor::Rdo;

  static std::size_t slot(int i) { return static_cast<std::size_t>(((i - 1) % 3 + 3) % 3); }
  const Matrix& D(int i) const { return d[slot(i)]; }
  const Matrix& T(int i) const { return t[slot(i)]; }
  const Matrix& N(int i) const { return n[slot(i)]; }
  const Matrix& S(int i) const { return s[slot(i)]; }
  int E(int i) const { return eps[slot(i)]; }
  Matrix K(int i) const { return N(i) * T(i); }
  int eps_product() const { return eps[0] * eps[1] * eps[2]; }
};

struct HyperClassification {
  Report report;
  std::optional<HyperTriple> triple;
};

/// Computes ε from Nᵢ²; fails on a singular dᵢ, an RDO violation, or an Nᵢ²
/// that is not ±Id.
HyperClassification classify_hyper(const OperatorContext& ctx, const std::array<Matrix, 3>& d,
                                   Flavor flavor = Flavor::Rdo);

/// h♭ in every cyclic form, its relations to dᵢ, Tᵢ, Nᵢ, Sᵢ, and the
/// swap rules d_{i+1}T_{i−1} = εᵢ d_{i−1}T_{i+1}, T_{i+1}d_{i−1} = εᵢ T_{i−1}d_{i+1}.
Report verify_hflat_identities(const HyperTriple& t);
/// Composition tables of T, d, N and S for all index pairs.
Report verify_cross_identities(const HyperTriple& t);
/// Claims that need ε₁ε₂ε₃ = 1; throws DomainError otherwise.
Report product_one_suite(const HyperTriple& t);
/// KD, DN, KN, compatibility and Nijenhuis claims for all admissible pairs.
Report derived_structures_report(const HyperTriple& t);
/// Inverse duality per dᵢ, KN hierarchies and DN powers for all i ≠ k.
Report hierarchy_report(const HyperTriple& t, unsigned kn_kmax = 3, unsigned dn_kmax = 4);

struct Decomposition {
  Report report;
  Matrix hflat;
  std::array<Matrix, 3> I;
  std::array<int, 3> eps{};
  /// renumbering[i-1] is the input index that became index i.
  std::array<int, 3> renumbering{1, 2, 3};
  bool para = false;
};
/// Needs ε₁ε₂ε₃ = −1 (DomainError otherwise). Para-hyper inputs are
/// cyclically renumbered to ε = (1,1,−1) first.
Decomposition decompose_hyper(const HyperTriple& t);

/// dᵢ = h♭∘Iᵢ with I₃ = I₁I₂. Invertibility, squares and anticommutation
/// are recorded as preconditions; classification failures as checks.
HyperClassification reconstruct_hyper(const OperatorContext& ctx, const Matrix& hflat, const Matrix& i1,
                                      const Matrix& i2, Flavor flavor = Flavor::Rdo);

/// ±1 if m = ±Id, 0 otherwise.
int identity_sign(const Matrix& m);

}  // namespace hyperops

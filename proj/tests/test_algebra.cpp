#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace hyperops;
using namespace hyperops::test;

namespace {

std::set<std::vector<int>> failing_bases(const Report& r, const std::string& id) {
  std::set<std::vector<int>> out;
  for (const auto& c : r.claims())
    if (c.id == id && !c.pass) out.insert(c.counterexample->basis);
  return out;
}

}  // namespace

TEST_CASE("corpus Lie algebras satisfy antisymmetry and Jacobi") {
  CHECK(check_lie(lie(corpus_bundle("lie.L4sym"), "L4sym")).ok());
  CHECK(check_lie(lie(corpus_bundle("lie.heis4"), "heis4")).ok());
  CHECK(check_lie(lie(corpus_bundle("broken.derivation"), "tstar")).ok());
}

TEST_CASE("Jacobi violation is reported on the offending triple") {
  const Report r = check_lie(lie(corpus_bundle("broken.jacobi"), "broken"));
  CHECK_FALSE(r.ok());
  CHECK(failing_bases(r, "lie.jacobi") == std::set<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("non-antisymmetric constants are caught") {
  const LieAlgebra g = LieAlgebra::from_entries(2, {{1, 2, 1, 1}}, false);
  const Report r = check_lie(g);
  CHECK_FALSE(r.ok());
  CHECK(failing_bases(r, "lie.antisymmetry").count({1, 2, 1}) == 1);
}

TEST_CASE("structure constant indices are validated") {
  CHECK_THROWS_AS(LieAlgebra::from_entries(2, {{1, 3, 1, 1}}), DimensionError);
  CHECK_THROWS_AS(PreLieAlgebra::from_entries(2, {{0, 1, 1, 1}}), DimensionError);
}

TEST_CASE("corpus pre-Lie algebras are left-symmetric") {
  CHECK(check_prelie(prelie(corpus_bundle("prelie.I4"), "I4")).ok());
  CHECK(check_prelie(prelie(corpus_bundle("prelie.A4"), "A4")).ok());
  CHECK(check_prelie(prelie(corpus_bundle("prelie.B4"), "B4")).ok());
  CHECK(check_prelie(prelie(corpus_bundle("prelie.rot4"), "rot4")).ok());
}

TEST_CASE("left-symmetry violations match the oracle") {
  const PreLieAlgebra bad = PreLieAlgebra::from_entries(2, {{1, 1, 2, 1}, {2, 1, 1, 1}});
  const Report r = check_prelie(bad);
  CHECK(failing_bases(r, "prelie.left_symmetry") == std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 1}});
}

TEST_CASE("sub-adjacent bracket of rot4") {
  const LieAlgebra g = subadjacent(prelie(corpus_bundle("prelie.rot4"), "rot4"));
  CHECK(g.basis_bracket(2, 0) == Vector{0, 1, 0, 0});
  CHECK(g.basis_bracket(0, 2) == Vector{0, -1, 0, 0});
  CHECK(g.basis_bracket(2, 1) == Vector{-1, 0, 0, 0});
  CHECK(g.basis_bracket(0, 1) == Vector{0, 0, 0, 0});
  CHECK(check_lie(g).ok());
}

TEST_CASE("standard representations are representations") {
  for (const char* id : {"lie.L4sym", "lie.heis4", "broken.derivation"}) {
    const Bundle b = corpus_bundle(id);
    const LieAlgebra& g = lie(b, b.document().at("algebras").begin().key());
    CHECK(check_representation(adjoint_rep(g)).ok());
    CHECK(check_representation(coadjoint_rep(g)).ok());
    CHECK(check_representation(trivial_rep(g, 3)).ok());
  }
  for (const char* id : {"prelie.I4", "prelie.A4", "prelie.B4", "prelie.rot4"}) {
    const Bundle b = corpus_bundle(id);
    const PreLieAlgebra& g = prelie(b, b.document().at("algebras").begin().key());
    CHECK(check_representation(regular_rep(g)).ok());
    CHECK(check_representation(coregular_rep(g)).ok());
  }
}

TEST_CASE("adjoint matrices hold structure constants column-wise") {
  const LieAlgebra g = lie(corpus_bundle("lie.L4sym"), "L4sym");
  const Representation ad = adjoint_rep(g);
  CHECK(ad.of_basis(0) == Matrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
  CHECK(dual_rep(ad).of_basis(0) == -ad.of_basis(0).transpose());
}

TEST_CASE("a non-representation is rejected") {
  const LieAlgebra g = lie(corpus_bundle("lie.heis4"), "heis4");
  Representation r = trivial_rep(g, 2);
  r.mats[0] = Matrix{{1, 0}, {0, 0}};
  r.mats[1] = Matrix{{0, 1}, {0, 0}};
  CHECK_FALSE(check_representation(r).ok());
}

TEST_CASE("derivations") {
  const Bundle b = corpus_bundle("broken.derivation");
  const LieAlgebra& g = lie(b, "tstar");
  CHECK(check_lie_derivation(g, b.map("d1").map.matrix).ok());
  const Report r = check_lie_derivation(g, b.map("d2").map.matrix);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->counterexample->basis == std::vector<int>{1, 2});

  const PreLieAlgebra rot = prelie(corpus_bundle("prelie.rot4"), "rot4");
  CHECK(check_prelie_derivation(rot, Matrix::zero(4, 4)).ok());
  CHECK_FALSE(check_prelie_derivation(rot, Matrix::identity(4)).ok());
}

#include <doctest.h>

#include "support.hpp"

using namespace hyperops;
using namespace hyperops::test;

namespace {

OperatorContext coadjoint_of(const LieAlgebra& g) { return OperatorContext(coadjoint_rep(g)); }

}  // namespace

TEST_CASE("flat maps of the L4sym symplectic forms are RDOs into the coadjoint module") {
  const Bundle b = corpus_bundle("lie.L4sym");
  const OperatorContext ctx = coadjoint_of(lie(b, "L4sym"));
  for (const char* w : {"w1", "w2", "w3"}) CHECK(is_rdo(ctx, form_map(b, w)).ok());
}

TEST_CASE("inverse of an invertible RDO is an O-operator (oracle value)") {
  const Bundle b = corpus_bundle("lie.L4sym");
  const OperatorContext ctx = coadjoint_of(lie(b, "L4sym"));
  const Matrix t = invert(form_map(b, "w1"));
  CHECK(t == Matrix{{0, 1, 0, 0}, {-1, 0, 0, -1}, {0, 0, 0, 1}, {0, 1, -1, 0}});
  CHECK(is_o_operator(ctx, t).ok());
}

TEST_CASE("a non-cocycle form gives a non-RDO with a basis counterexample") {
  const Bundle b = corpus_bundle("lie.heis4");
  const LieAlgebra& g = lie(b, "heis4");
  const BilForm w = form_from_terms(4, {{"e3^*∧e4^*", Scalar(1)}}, Symmetry::Skew);
  const Report r = is_rdo(coadjoint_of(g), form_to_map(w));
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->counterexample->basis == std::vector<int>{1, 2});
}

TEST_CASE("inner RDOs are RDOs") {
  std::mt19937 rng(99);
  const Bundle b = corpus_bundle("lie.L4sym");
  const OperatorContext ctx = coadjoint_of(lie(b, "L4sym"));
  for (int t = 0; t < 20; ++t) CHECK(is_rdo(ctx, inner_rdo(ctx, random_vector(rng, 4))).ok());
}

TEST_CASE("Nijenhuis operators") {
  const Bundle b = corpus_bundle("lie.heis4");
  const LieAlgebra& g = lie(b, "heis4");
  const NijenhuisResult n = is_nijenhuis(g, b.map("I").map.matrix);
  CHECK(n.report.ok());
  CHECK(n.complex);
  CHECK_FALSE(n.para_complex);

  // N e1 = e1, N e3 = e2 makes the torsion nonzero on (e1, e3): [Ne1, Ne3] = [e1,e2] = e3.
  const Matrix bad{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_FALSE(is_nijenhuis(g, bad).report.ok());
  CHECK_THROWS_AS(deformed_bracket(g, bad), PreconditionError);
  const LieAlgebra deformed = deformed_bracket(g, b.map("I").map.matrix);
  CHECK(check_lie(deformed).ok());
}

TEST_CASE("KD, DN and KN structures derived from the L4sym triple") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  const OperatorContext& ctx = t.ctx;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      if (i == k) continue;
      CAPTURE(i);
      CAPTURE(k);
      CHECK(is_kd(ctx, t.T(i), t.D(k)).ok());
      CHECK(is_dn(ctx, t.D(i), t.N(k)).ok());
      CHECK(is_kn(ctx, t.T(i), t.S(k), t.N(k)).ok());
      CHECK(is_dual_nijenhuis_pair(ctx, t.N(k), t.S(k)).ok());
      CHECK(check_representation(deformed_representation(ctx, t.N(k), t.S(k))).ok());
      CHECK(brackets_coincide(ctx, t.T(i), t.S(k), t.N(k)).ok());
    }
}

TEST_CASE("mismatched KN data") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  CHECK_THROWS_AS(brackets_coincide(t.ctx, t.T(1), Matrix::identity(4), t.N(2)), PreconditionError);
  const Report r = is_kn(t.ctx, t.T(1), Matrix::identity(4), t.N(2));
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->id == "tn1");
}

TEST_CASE("compatible O-operators from a hyper triple") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  CHECK(are_compatible(t.ctx, t.T(1), t.T(2)).ok());
  CHECK(are_compatible(t.ctx, t.T(2), t.T(3)).ok());
}

TEST_CASE("induced pre-Lie structure of an O-operator") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  const InducedStructure s = bracket_T(t.ctx, t.T(1));
  CHECK(check_prelie(s.star).ok());
  CHECK(check_lie(s.bracket).ok());
  CHECK_FALSE(is_o_operator(t.ctx, Matrix::identity(4)).ok());
  CHECK_THROWS_AS(bracket_T(t.ctx, Matrix::identity(4)), PreconditionError);
}

TEST_CASE("hierarchies on the L4sym triple") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  CHECK(kn_hierarchy(t.ctx, t.T(1), t.S(2), t.N(2), 3).ok());
  CHECK(dn_powers(t.ctx, t.D(1), t.N(2), 4).ok());
}

TEST_CASE("tagged shapes are enforced") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  CHECK_NOTHROW(require_tagged_shape(t.ctx, {t.D(1), Space::Algebra, Space::Module}));
  CHECK_THROWS_AS(require_tagged_shape(t.ctx, {Matrix(3, 4), Space::Algebra, Space::Module}), DimensionError);
}

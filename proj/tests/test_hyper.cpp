#include <doctest.h>

#include "support.hpp"

using namespace hyperops;
using namespace hyperops::test;

namespace {

std::array<BilForm, 3> forms_of(const Bundle& b, const std::array<std::string, 3>& names) {
  return {b.form(names[0]).form, b.form(names[1]).form, b.form(names[2]).form};
}

}  // namespace

TEST_CASE("L4sym symplectic triple: signs, h-flat and N maps (oracle values)") {
  const HyperTriple t = corpus_triple("lie.L4sym", "omegas");
  CHECK(t.eps == std::array<int, 3>{1, 1, -1});
  CHECK(t.flavor == Flavor::Symplectic);
  CHECK(t.hflat == Matrix{{2, 0, 0, -1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
  CHECK(t.N(1) == Matrix{{0, 0, 1, 0}, {1, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 1, 0}});
  CHECK(t.N(2) == Matrix{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {-2, 0, 0, 1}});
  CHECK(t.N(3) == Matrix{{0, 0, 1, 0}, {1, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 1, 0}});
  for (int i = 1; i <= 3; ++i) CHECK(identity_sign(t.N(i) * t.N(i)) == t.E(i));
}

TEST_CASE("rot4 Hessian triple (oracle values)") {
  const HyperTriple t = corpus_triple("prelie.rot4", "hessians");
  CHECK(t.eps == std::array<int, 3>{-1, -1, 1});
  CHECK(t.eps_product() == 1);
  const Scalar i = Scalar::imaginary_unit();
  CHECK(t.hflat == Matrix{{i, 0, 0, 0}, {0, i, 0, 0}, {0, 0, Scalar(-2) * i, -i}, {0, 0, -i, 0}});
  CHECK(determinant(t.D(1)) == Scalar(-1));
  CHECK(determinant(t.D(2)) == Scalar(1));
  CHECK(determinant(t.D(3)) == Scalar(1));
}

TEST_CASE("identity suites hold on every corpus triple") {
  for (const auto& [id, name] : corpus_triples()) {
    CAPTURE(id);
    const HyperTriple t = corpus_triple(id, name);
    CHECK(verify_hflat_identities(t).ok());
    CHECK(verify_cross_identities(t).ok());
    CHECK(derived_structures_report(t).ok());
    CHECK(hierarchy_report(t).ok());
    if (t.eps_product() == 1) {
      CHECK(product_one_suite(t).ok());
      CHECK_THROWS_AS(decompose_hyper(t), DomainError);
    } else {
      CHECK_THROWS_AS(product_one_suite(t), DomainError);
      CHECK(decompose_hyper(t).report.ok());
    }
  }
}

TEST_CASE("the swap rules and the cross identity with the sign product") {
  for (const auto& [id, name] : corpus_triples()) {
    CAPTURE(id);
    const HyperTriple t = corpus_triple(id, name);
    const Scalar p(t.eps_product());
    for (int i = 1; i <= 3; ++i) {
      CHECK(t.S(i) * t.S(i - 1) == (p * Scalar(t.E(i + 1))) * t.S(i + 1));
      CHECK(t.T(i) * t.S(i) == p * (t.N(i) * t.T(i)));
    }
  }
}

TEST_CASE("a singular member is reported, not thrown") {
  const Bundle b = corpus_bundle("abelian.quat");
  const OperatorContext ctx = b.context_of_rep("triv");
  const HyperClassification c =
      classify_hyper(ctx, {b.map("q1").map.matrix, Matrix::zero(4, 4), b.map("q3").map.matrix});
  CHECK_FALSE(c.triple);
  CHECK_FALSE(c.report.ok());
}

TEST_CASE("a non-square N is reported with its sign unset") {
  const Bundle b = corpus_bundle("abelian.quat");
  const OperatorContext ctx = b.context_of_rep("triv");
  const Matrix& q1 = b.map("q1").map.matrix;
  const HyperClassification c = classify_hyper(ctx, {q1, q1, Matrix::diagonal({1, 2, 1, 1})});
  CHECK_FALSE(c.triple);
}

TEST_CASE("decomposition factors d_i through h-flat") {
  for (const auto& [id, name] : corpus_triples()) {
    const HyperTriple t = corpus_triple(id, name);
    if (t.eps_product() != -1) continue;
    CAPTURE(id);
    const Decomposition dec = decompose_hyper(t);
    REQUIRE(dec.report.ok());
    CHECK(dec.I[2] == dec.I[0] * dec.I[1]);
    CHECK(dec.I[0] * dec.I[1] == -(dec.I[1] * dec.I[0]));
    for (int i = 0; i < 3; ++i) CHECK(identity_sign(dec.I[i] * dec.I[i]) == dec.eps[i]);
    if (!dec.para) {
      for (int i = 1; i <= 3; ++i) CHECK(t.D(i) == dec.hflat * dec.I[i - 1]);
    }

    const HyperClassification back = reconstruct_hyper(t.ctx, dec.hflat, dec.I[0], dec.I[1], t.flavor);
    REQUIRE(back.triple);
    CHECK(back.report.ok());
    CHECK(back.triple->eps == dec.eps);
    CHECK(back.triple->hflat == dec.hflat);
  }
}

TEST_CASE("para inputs are renumbered cyclically") {
  const Bundle b = corpus_bundle("lie.L4sym");
  const LieAlgebra& g = lie(b, "L4sym");
  const Decomposition base = decompose_hyper(corpus_triple("lie.L4sym", "omegas"));
  CHECK(base.para);
  CHECK(base.renumbering == std::array<int, 3>{1, 2, 3});
  CHECK(base.eps == std::array<int, 3>{1, 1, -1});

  const HyperClassification rotated = classify_hyper_symplectic(g, forms_of(b, {"w2", "w3", "w1"}));
  REQUIRE(rotated.triple);
  CHECK(rotated.triple->eps == std::array<int, 3>{1, -1, 1});
  const Decomposition dec = decompose_hyper(*rotated.triple);
  CHECK(dec.report.ok());
  CHECK(dec.eps == std::array<int, 3>{1, 1, -1});
  CHECK(dec.renumbering == std::array<int, 3>{3, 1, 2});
  CHECK(dec.hflat == base.hflat);
  for (int i = 0; i < 3; ++i) CHECK(dec.I[i] == base.I[i]);
}

TEST_CASE("reconstruction rejects commuting I maps as a precondition") {
  const Bundle b = corpus_bundle("broken.anticommute");
  const OperatorContext ctx = b.context_of_rep("coad");
  const Matrix& I = b.map("I").map.matrix;
  const HyperClassification c = reconstruct_hyper(ctx, b.map("hflat").map.matrix, I, I);
  CHECK_FALSE(c.triple);
  CHECK_FALSE(c.report.preconditions_ok());
  const Claim* f = c.report.first_failure();
  REQUIRE(f);
  CHECK(f->id == "anticommute");
  CHECK(f->kind == ClaimKind::Precondition);
}

TEST_CASE("reconstruction checks shapes") {
  const Bundle b = corpus_bundle("abelian.quat");
  const OperatorContext ctx = b.context_of_rep("triv");
  CHECK_THROWS_AS(reconstruct_hyper(ctx, Matrix::identity(3), Matrix::identity(4), Matrix::identity(4)),
                  DimensionError);
}

#include <doctest.h>

#include "support.hpp"

using namespace hyperops;
using namespace hyperops::test;

namespace {

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST_CASE("determinants multiply") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK(determinant(a.transpose()) == determinant(a));
  }
}

TEST_CASE("inner derivations are derivations") {
  std::mt19937 rng(202);
  for (const char* id : {"lie.L4sym", "lie.heis4", "broken.derivation"}) {
    const Bundle b = corpus_bundle(id);
    const LieAlgebra& g = lie(b, b.document().at("algebras").begin().key());
    const Representation ad = adjoint_rep(g);
    for (int trial = 0; trial < 10; ++trial) CHECK(check_lie_derivation(g, ad.of(random_vector(rng, g.dim()))).ok());
  }
}

TEST_CASE("RDOs form a linear space containing the inner ones") {
  std::mt19937 rng(303);
  const Bundle b = corpus_bundle("lie.L4sym");
  const OperatorContext ctx(coadjoint_rep(lie(b, "L4sym")));
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix d = random_scalar(rng) * form_map(b, "w1") + random_scalar(rng) * form_map(b, "w2") +
                     inner_rdo(ctx, random_vector(rng, 4));
    CHECK(is_rdo(ctx, d).ok());
  }
}

TEST_CASE("hyper triples on the abelian quaternions survive two-sided changes of basis") {
  std::mt19937 rng(404);
  const Bundle b = corpus_bundle("abelian.quat");
  const OperatorContext ctx = b.context_of_rep("triv");
  const std::array<Matrix, 3> q{b.map("q1").map.matrix, b.map("q2").map.matrix, b.map("q3").map.matrix};
  for (int trial = 0; trial < 8; ++trial) {
    const Matrix left = random_invertible(rng, 4), right = random_invertible(rng, 4);
    const std::array<Matrix, 3> d{left * q[0] * right, left * q[1] * right, left * q[2] * right};
    const HyperClassification c = classify_hyper(ctx, d);
    REQUIRE(c.triple);
    const HyperTriple& t = *c.triple;
    CHECK(t.eps == std::array<int, 3>{-1, -1, -1});
    CHECK(verify_hflat_identities(t).ok());
    CHECK(verify_cross_identities(t).ok());
    CHECK(derived_structures_report(t).ok());
    const Decomposition dec = decompose_hyper(t);
    CHECK(dec.report.ok());
    const HyperClassification back = reconstruct_hyper(ctx, dec.hflat, dec.I[0], dec.I[1]);
    REQUIRE(back.triple);
    for (int i = 1; i <= 3; ++i) CHECK(back.triple->D(i) == t.D(i));
  }
}

TEST_CASE("para triples on the abelian plane survive changes of basis") {
  std::mt19937 rng(505);
  const Bundle b = corpus_bundle("abelian.para");
  const OperatorContext ctx = b.context_of_rep("triv");
  const NamedTriple& nt = b.triple("pt");
  for (int trial = 0; trial < 8; ++trial) {
    const Matrix left = random_invertible(rng, 2), right = random_invertible(rng, 2);
    std::array<Matrix, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = left * b.map(nt.members[i]).map.matrix * right;
    const HyperClassification c = classify_hyper(ctx, d);
    REQUIRE(c.triple);
    CHECK(c.triple->eps == std::array<int, 3>{1, 1, 1});
    CHECK(product_one_suite(*c.triple).ok());
    CHECK(hierarchy_report(*c.triple).ok());
  }
}

TEST_CASE("scaling a symplectic triple keeps its signs") {
  std::mt19937 rng(606);
  const Bundle b = corpus_bundle("lie.L4sym");
  const LieAlgebra& g = lie(b, "L4sym");
  for (int trial = 0; trial < 5; ++trial) {
    Scalar s = random_scalar(rng);
    while (s.is_zero()) s = random_scalar(rng);
    std::array<BilForm, 3> w;
    for (int i = 0; i < 3; ++i) {
      const BilForm& f = b.form("w" + std::to_string(i + 1)).form;
      w[i] = {s * f.matrix, f.symmetry};
    }
    const HyperClassification c = classify_hyper_symplectic(g, w);
    REQUIRE(c.triple);
    CHECK(c.triple->eps == std::array<int, 3>{1, 1, -1});
    CHECK(c.triple->hflat == s * corpus_triple("lie.L4sym", "omegas").hflat);
  }
}

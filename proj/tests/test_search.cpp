#include <doctest.h>

#include "support.hpp"

using namespace hyperops;
using namespace hyperops::test;

namespace {

FormSpaceResult solve_corpus(const std::string& id, const std::string& algebra, FormTarget target) {
  return solve_forms(corpus_bundle(id).algebra(algebra).algebra, target);
}

}  // namespace

TEST_CASE("form coordinates run over the upper triangle") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(form_coordinates(3, Symmetry::Skew) == std::vector<P>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(form_coordinates(2, Symmetry::Symmetric) == std::vector<P>{{0, 0}, {0, 1}, {1, 1}});
  const BilForm f = form_from_coordinates(3, Symmetry::Skew, {1, 2, 3});
  CHECK(f.matrix == Matrix{{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}});
  CHECK(coordinates_of(f) == Vector{1, 2, 3});
}

TEST_CASE("Hessian form spaces (oracle values)") {
  const FormSpaceResult i4 = solve_corpus("prelie.I4", "I4", FormTarget::Hessian);
  CHECK(i4.space.dim() == 1);
  CHECK(i4.generic_det.str() == "2*t1^4");
  CHECK(i4.exists_nondegenerate);

  const FormSpaceResult a4 = solve_corpus("prelie.A4", "A4", FormTarget::Hessian);
  CHECK(a4.space.dim() == 1);
  CHECK(a4.generic_det.str() == "-2*t1^4");
  CHECK(a4.exists_nondegenerate);

  const FormSpaceResult b4 = solve_corpus("prelie.B4", "B4", FormTarget::Hessian);
  CHECK(b4.space.dim() == 2);
  CHECK(b4.generic_det.is_zero());
  CHECK_FALSE(b4.exists_nondegenerate);
}

TEST_CASE("symplectic form space of L4sym (oracle value)") {
  const FormSpaceResult r = solve_corpus("lie.L4sym", "L4sym", FormTarget::Symplectic);
  CHECK(r.space.dim() == 5);
  CHECK(r.generic_det.str() == "t1^2*t5^2 + 2*t1*t3*t4*t5 + t3^2*t4^2");
  CHECK(r.exists_nondegenerate);

  const Bundle b = corpus_bundle("lie.L4sym");
  for (const char* w : {"w1", "w2", "w3"}) {
    const auto params = r.parameters_of(b.form(w).form);
    REQUIRE(params);
    CHECK(instantiate(r, *params).matrix == b.form(w).form.matrix);
  }
  CHECK_FALSE(r.parameters_of(form_from_terms(4, {{"e2^*∧e4^*", Scalar(1)}}, Symmetry::Skew)));
  CHECK_THROWS_AS(instantiate(r, {1, 2}), DimensionError);
}

TEST_CASE("ad-invariant forms of T*h3 (oracle value)") {
  const Bundle b = corpus_bundle("broken.derivation");
  const FormSpaceResult r = solve_forms(b.algebra("tstar").algebra, FormTarget::AdInvariant);
  CHECK(r.space.dim() == 7);
  CHECK(r.generic_det.total_degree() == 6);
  CHECK(r.exists_nondegenerate);
  CHECK(r.parameters_of(b.form("B").form));
}

TEST_CASE("every point of a solved space passes the pointwise check") {
  std::mt19937 rng(31);
  const FormSpaceResult hess = solve_corpus("prelie.B4", "B4", FormTarget::Hessian);
  const Bundle b4 = corpus_bundle("prelie.B4");
  const FormSpaceResult sym = solve_corpus("lie.L4sym", "L4sym", FormTarget::Symplectic);
  const Bundle l4 = corpus_bundle("lie.L4sym");
  for (int trial = 0; trial < 10; ++trial) {
    const BilForm h = instantiate(hess, random_vector(rng, hess.space.dim()));
    const Report rh = is_hessian(prelie(b4, "B4"), h);
    for (const Claim& c : rh.claims())
      if (c.id != "nondegenerate") CHECK(c.pass);

    const BilForm w = instantiate(sym, random_vector(rng, sym.space.dim()));
    const Report rw = is_symplectic(lie(l4, "L4sym"), w);
    for (const Claim& c : rw.claims())
      if (c.id != "nondegenerate") CHECK(c.pass);
    CHECK(determinant(w.matrix) == sym.generic_det.evaluate(*sym.parameters_of(w)));
  }
}

TEST_CASE("targets must fit the algebra kind") {
  CHECK_THROWS_AS(solve_corpus("prelie.I4", "I4", FormTarget::Symplectic), PreconditionError);
  CHECK_THROWS_AS(solve_corpus("lie.L4sym", "L4sym", FormTarget::Hessian), PreconditionError);
  CHECK(parse_form_target("prelie-invariant") == FormTarget::PreLieInvariant);
  CHECK_FALSE(parse_form_target("kahler"));
}

#include <doctest.h>

#include "support.hpp"

using namespace hyperops;
using hyperops::test::random_matrix;
using hyperops::test::random_scalar;

TEST_CASE("scalar text round-trips in canonical form") {
  for (const char* s : {"0", "5", "-7", "3/4", "-1/2", "i", "-i", "2i", "1/3i", "3/4-2i", "-1/2+1/3i", "1+i"})
    CHECK(Scalar::parse(s).str() == s);
  CHECK(Scalar::parse("6/8").str() == "3/4");
  CHECK(Scalar::parse(" 2/4+0i ").str() == "1/2");
  CHECK(Scalar::parse("0-1i") == -Scalar::imaginary_unit());
}

TEST_CASE("scalar parse rejects malformed text") {
  for (const char* s : {"", "abc", "1/0", "1+", "2ii", "1//2", "+3", "1.5", "i2", "1/-2"})
    CHECK_THROWS_AS(Scalar::parse(s), ParseError);
}

TEST_CASE("scalar arithmetic matches the oracle") {
  CHECK(Scalar::parse("3/4-2i") * Scalar::parse("1+i") == Scalar::parse("11/4-5/4i"));
  CHECK(Scalar(1) / Scalar::parse("1+2i") == Scalar::parse("1/5-2/5i"));
  CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inv(), ArithmeticError);
}

TEST_CASE("scalar field axioms on random elements") {
  std::mt19937 rng(20240611);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Scalar::parse(a.str()) == a);
  }
}

TEST_CASE("determinant and inverse match the oracle") {
  const Matrix a{{1, Scalar::imaginary_unit(), 2}, {0, Scalar::fraction(1, 2), -1}, {3, 0, Scalar::parse("1+i")}};
  CHECK(determinant(a) == Scalar::parse("-5/2-5/2i"));
  const Matrix expected{{Scalar::parse("-1/5"), Scalar::parse("2/5i"), Scalar::parse("2/5")},
                        {Scalar::parse("3/5-3/5i"), Scalar::parse("4/5-6/5i"), Scalar::parse("-1/5+1/5i")},
                        {Scalar::parse("3/10-3/10i"), Scalar::parse("-3/5-3/5i"), Scalar::parse("-1/10+1/10i")}};
  CHECK(invert(a) == expected);
  CHECK((invert(a) * a).is_identity());
}

TEST_CASE("rank and kernel match the oracle") {
  const Matrix k{{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
  CHECK(rank(k) == 2);
  const auto ker = kernel(k);
  REQUIRE(ker.size() == 2);
  CHECK(ker[0] == Vector{-1, -1, 1, 0});
  CHECK(ker[1] == Vector{0, -2, 0, 1});
}

TEST_CASE("singular matrices report their rank") {
  const Matrix s{{1, 2}, {2, 4}};
  CHECK_FALSE(is_invertible(s));
  try {
    invert(s);
    FAIL("expected SingularError");
  } catch (const SingularError& e) {
    CHECK(e.rank() == 1);
  }
}

TEST_CASE("affine systems") {
  const Matrix a{{1, 1}, {1, 1}};
  CHECK_FALSE(solve_affine(a, {1, 2}).has_value());
  const auto sol = solve_affine(a, {2, 2});
  REQUIRE(sol.has_value());
  CHECK(sol->dim() == 1);
  CHECK(a * sol->point({Scalar(7)}) == Vector{2, 2});
}

TEST_CASE("random invertible matrices invert exactly") {
  std::mt19937 rng(7);
  int tested = 0;
  while (tested < 40) {
    const Matrix a = random_matrix(rng, 4, 4);
    if (!is_invertible(a)) continue;
    ++tested;
    CHECK((invert(a) * a).is_identity());
    CHECK((a * invert(a)).is_identity());
    CHECK(determinant(a) * determinant(invert(a)) == Scalar(1));
  }
}

TEST_CASE("generic determinant of a parametrized matrix") {
  AffineSolutionSpace space{{0, 0, 0, 0}, {{1, 0, 0, 1}, {0, 1, -1, 0}}};
  const Poly det = generic_determinant(space, 2);
  CHECK(det.str() == "t1^2 + t2^2");
  CHECK(det.evaluate({Scalar(1), Scalar::imaginary_unit()}).is_zero());
  CHECK(det.total_degree() == 2);

  AffineSolutionSpace rank_one{{0, 0, 0, 0}, {{1, 1, 1, 1}}};
  CHECK(generic_determinant(rank_one, 2).is_zero());
}

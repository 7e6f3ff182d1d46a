#include "doctest.h"
#include "support.hpp"

#include "skein/error.hpp"
#include "skein/scalar.hpp"

using namespace skein;
using namespace skein::testing;

TEST_CASE("lambda times q z") {
  CHECK(mul(lam(), q() * z()) == z() + 1 - q());
  CHECK(lam() * q() * z() - z() - 1 + q() == Scalar(0));
}

TEST_CASE("w squares to lambda") {
  CHECK(mul(Scalar::w(), Scalar::w()) == lam());
  CHECK(Scalar::w().has_w());
  CHECK(!lam().has_w());
}

TEST_CASE("inverses") {
  CHECK(inv(q()) * q() == Scalar(1));
  CHECK(inv(Scalar::w()) * Scalar::w() == Scalar(1));
  CHECK_THROWS_AS(inv(Scalar(0)), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("delta identities") {
  const Scalar& d = delta();
  Scalar one_minus_lq = 1 - lam() * q();
  CHECK(d * Scalar::w() * (1 - q()) == -one_minus_lq);
  CHECK(d * d * lam() * (1 - q()) * (1 - q()) == one_minus_lq * one_minus_lq);
  CHECK(d * Scalar::w().pow(3) == lam() / z());
  CHECK(d == inv(z() * Scalar::w()));
  CHECK(d.str() == "(-q*w)/(q - z - 1)");
}

TEST_CASE("powers of sqrt lambda") {
  CHECK(sqrt_lambda_pow(0) == Scalar(1));
  CHECK(sqrt_lambda_pow(2) == lam());
  CHECK(sqrt_lambda_pow(3) == lam() * Scalar::w());
  CHECK(sqrt_lambda_pow(-3) * sqrt_lambda_pow(3) == Scalar(1));
  CHECK(!sqrt_lambda_pow(4).has_w());
  for (int e = -5; e <= 5; ++e) CHECK(sqrt_lambda_pow(e) * Scalar::w() == sqrt_lambda_pow(e + 1));
}

TEST_CASE("field laws on random scalars") {
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    CHECK(a + neg(a) == Scalar(0));
    CHECK(eq(a - b, Scalar(0)) == eq(a, b));
    Scalar nz = random_nonzero_scalar();
    CHECK(nz * inv(nz) == Scalar(1));
    CHECK((a / nz) * nz == a);
  }
}

TEST_CASE("fraction rendering") {
  Scalar x = (q() - 1) / z();
  CHECK(x.str() == "(q - 1)/(z)");
  auto f = (Scalar(q()) + Scalar::w()).fraction();
  CHECK(f.num == "q + w");
  CHECK(f.den == "1");
  CHECK(Scalar(0).str() == "0");
}

TEST_CASE("linear combinations render deterministically") {
  CHECK(render_combination({}) == "0");
  CHECK(render_combination({{Scalar(-1), "s1"}}) == "-s1");
  CHECK(render_combination({{q() - 1, "s1"}, {q(), "s2"}}) == "(q - 1) * s1 + q * s2");
  CHECK(render_combination({{Scalar(3), "1"}}) == "3");
}

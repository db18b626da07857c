#include <doctest.h>

#include <stdexcept>

#include "relweyl/rational.hpp"

using relweyl::Rational;
using relweyl::RationalVector;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  CHECK((Rational(1, 2) * Rational(-2, 3)).str() == "-1/3");
  CHECK(Rational(-7, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational parsing and errors") {
  CHECK(Rational::parse("-17/2") == Rational(-17, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational(1, 2).to_int());
}

TEST_CASE("ordering is numeric") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(5, 2) > Rational(2));
}

TEST_CASE("vectors, dot and coroot pairing") {
  auto v = RationalVector::parse("1/2 -1 1/2");
  CHECK(v.dim() == 3);
  CHECK(v.str() == "1/2 -1 1/2");
  CHECK(relweyl::dot(v, v) == Rational(3, 2));
  RationalVector beta{Rational(1), Rational(-2), Rational(1)};
  CHECK(relweyl::pairing(beta, beta) == Rational(2));
  RationalVector alpha{Rational(0), Rational(1), Rational(-1)};
  CHECK(relweyl::pairing(alpha, beta) == Rational(-1));
  CHECK(relweyl::pairing(beta, alpha) == Rational(-3));
}

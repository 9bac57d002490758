#include "doctest.h"
#include "support/oracles.hpp"
#include "tgr/exactfield.hpp"

using tgr::ArithmeticError;
using tgr::Cyclo3;
using tgr::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4) * Rational(-2) == Rational(1));
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-3, 9).str() == "-1/3");
}

TEST_CASE("rational division by zero is an error value") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-4/8") == Rational(-1, 2));
  CHECK(Rational::parse("12345678901234567890/3").str() == "4115226300411522630");
  CHECK_THROWS_AS(Rational::parse(""), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("x"), ArithmeticError);
}

TEST_CASE("cube roots of unity") {
  const Cyclo3 w = Cyclo3::omega();
  CHECK(w * w == Cyclo3(Rational(-1), Rational(-1)));
  CHECK(w.inverse() == Cyclo3(Rational(-1), Rational(-1)));
  CHECK((Cyclo3(1) + w).norm() == Rational(1));
  CHECK(w.pow(3) == Cyclo3(1));
  CHECK(w != Cyclo3(1));
  CHECK(w.pow(2) == w.conjugate());
  Cyclo3 p(1);
  for (int k = 1; k <= 12; ++k) {
    p *= w;
    CHECK((p == Cyclo3(1)) == (k % 3 == 0));
  }
}

TEST_CASE("cyclotomic inverse of zero is an error") {
  CHECK_THROWS_AS(Cyclo3(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Cyclo3::omega() / Cyclo3(0), ArithmeticError);
}

TEST_CASE("cyclotomic text round trip") {
  const Cyclo3 w = Cyclo3::omega();
  CHECK((w * w).str() == "-1 - w");
  CHECK(w.str() == "w");
  CHECK(Cyclo3(Rational(2, 3)).str() == "2/3");
  CHECK(Cyclo3(Rational(1, 2), Rational(3, 4)).str() == "1/2 + 3/4*w");
  CHECK(Cyclo3(Rational(0), Rational(-1)).str() == "-w");
  for (const char* text : {"-1 - w", "w", "2/3", "1/2 + 3/4*w", "-w", "0", "-5/7*w"}) {
    CHECK(Cyclo3::parse(text).str() == text);
  }
  CHECK(Cyclo3::parse("-1/2 - 1/2*w") == (Cyclo3(Rational(-1)) - w) / Cyclo3(2));
  CHECK_THROWS_AS(Cyclo3::parse(""), ArithmeticError);
}

TEST_CASE("field axioms on random triples") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto failure = tgr::oracle::check_field_axioms(300, seed);
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
}

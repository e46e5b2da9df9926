#include <doctest.h>

#include <random>

#include "estar/rational.hpp"
#include "estar/symbolic.hpp"

using namespace estar;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::from_string("1/2") == Rational(1, 2));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string(""), InputError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), InputError);
  CHECK_THROWS_AS(Rational::from_string("a/b"), InputError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), InputError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 3) + Rational(1, 3) == Rational(1));
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2), -3) == Rational(1, 8));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("rational field laws on random triples") {
  std::mt19937 rng(7);
  auto rnd = [&] {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    return Rational(num(rng), den(rng));
  };
  for (int i = 0; i < 200; ++i) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("symbolic affine forms") {
  SymbolicValue half = SymbolicValue::constant(Rational(1, 2), 3);
  SymbolicValue a1 = SymbolicValue::symbol(0, 3);
  SymbolicValue v = half + a1 * Rational(2) - SymbolicValue::symbol(2, 3);
  CHECK(v.c0() == Rational(1, 2));
  CHECK(v.coeff(0) == Rational(2));
  CHECK(v.coeff(1) == Rational(0));
  CHECK(v.coeff(2) == Rational(-1));
  CHECK_FALSE(v.is_constant());
  CHECK(half.is_constant());

  // instantiate examples
  std::vector<Rational> alphas = {Rational(1, 100), Rational(1, 7), Rational(1, 9)};
  CHECK(half.instantiate(alphas) == Rational(1, 2));
  SymbolicValue w(Rational(1), {Rational(-1), Rational(0), Rational(0)});
  CHECK(w.instantiate(alphas) == Rational(99, 100));
  CHECK(v.instantiate(alphas) == Rational(1, 2) + Rational(2, 100) - Rational(1, 9));

  std::vector<Rational> wrong = {Rational(1)};
  CHECK_THROWS_AS(half.instantiate(wrong), DomainError);
  SymbolicValue other(Rational(0), 2);
  CHECK_THROWS_AS(half += other, DomainError);
}

TEST_CASE("symbolic ring laws on random triples") {
  std::mt19937 rng(11);
  auto rnd = [&] {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    std::vector<Rational> cs;
    for (int i = 0; i < 4; ++i) cs.emplace_back(num(rng), den(rng));
    return SymbolicValue(Rational(num(rng), den(rng)), cs);
  };
  for (int i = 0; i < 100; ++i) {
    SymbolicValue a = rnd(), b = rnd(), c = rnd();
    Rational s(3, 7);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a + b == b + a);
    CHECK((a + b) * s == a * s + b * s);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullplane/zseries.hpp"

#include <random>

using namespace nullplane;

TEST_CASE("product truncates at the series order") {
  ZSeries one_plus(2, 1), one_minus(2, 1);
  one_plus[1] = 1;
  one_minus[1] = -1;
  ZSeries expect(2, 1);
  expect[2] = -1;
  CHECK((one_plus * one_minus) == expect);
}

TEST_CASE("hyperbolic identity cosh^2 - sinh^2 = 1") {
  auto c = expand_function(SeriesFn::Cosh, 1, 6);
  auto s = expand_function(SeriesFn::Sinh, 1, 6);
  CHECK((c * c - s * s) == ZSeries(6, 1));
}

TEST_CASE("exp(3z) exp(-3z) = 1") {
  auto a = expand_function(SeriesFn::Exp, 3, 6);
  auto b = expand_function(SeriesFn::Exp, -3, 6);
  CHECK((a * b) == ZSeries(6, 1));
}

TEST_CASE("sinh(z)/z starts at its scale") {
  auto s = expand_function(SeriesFn::SinhOverZ, 1, 4);
  ZSeries expect(4, 1);
  expect[2] = Rational(1, 6);
  expect[4] = Rational(1, 120);
  CHECK(s == expect);

  auto scaled = expand_function(SeriesFn::SinhOverZ, Rational(2), 0);
  CHECK(scaled == ZSeries(0, 2));
}

TEST_CASE("sinh/z times z matches sinh order by order") {
  for (int order : {2, 5, 8}) {
    auto a = expand_function(SeriesFn::SinhOverZ, Rational(5, 7), order);
    auto b = expand_function(SeriesFn::Sinh, Rational(5, 7), order);
    CHECK(a.shifted(1) == b);
  }
}

TEST_CASE("named expansions") {
  auto c = expand_function(SeriesFn::Cosh, 1, 2);
  ZSeries cosh2(2, 1);
  cosh2[2] = Rational(1, 2);
  CHECK(c == cosh2);

  auto e = expand_function(SeriesFn::Exp, 3, 1);
  ZSeries exp1(1, 1);
  exp1[1] = 3;
  CHECK(e == exp1);

  CHECK(series_fn_from_name("sinhz") == SeriesFn::SinhOverZ);
  CHECK_THROWS_AS(series_fn_from_name("tanh"), EngineError);
}

TEST_CASE("mismatched truncation orders are rejected") {
  ZSeries a(3, 1), b(4, 1);
  CHECK_THROWS_AS(a + b, OrderMismatchError);
  CHECK_THROWS_AS(a * b, OrderMismatchError);
  CHECK_THROWS_AS(a.truncated(9), OrderMismatchError);
  CHECK(b.truncated(2) == ZSeries(2, 1));
}

TEST_CASE("ring axioms on randomized series") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto random_series = [&](int order) {
    ZSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = Rational(num(rng), den(rng));
    return s;
  };
  for (int trial = 0; trial < 50; ++trial) {
    int order = trial % 9;
    auto a = random_series(order), b = random_series(order),
         c = random_series(order);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == ZSeries(order));
    CHECK((-a) + a == ZSeries(order));
  }
}

TEST_CASE("canonical printing") {
  ZSeries s(4);
  s[0] = 1;
  s[2] = Rational(-1, 2);
  s[3] = 3;
  s[4] = 1;
  CHECK(s.str() == "1 - (1/2)z^2 + 3z^3 + z^4");
  CHECK(ZSeries(3).str() == "0");
  ZSeries t(2);
  t[1] = -1;
  CHECK(t.str() == "-z");
}

TEST_CASE("evaluation at numeric z") {
  ZSeries s(2, 1);
  s[1] = 2;
  s[2] = Rational(1, 2);
  CHECK(s.at(Rational(1, 10)) == Rational(1205, 1000));
  CHECK(s.at(0.5) == doctest::Approx(2.125));
}

TEST_CASE("rational parsing") {
  CHECK(rational_from_string("1/10") == Rational(1, 10));
  CHECK(rational_from_string("-7/3") == Rational(-7, 3));
  CHECK(rational_from_string("42") == 42);
  CHECK_THROWS_AS(rational_from_string("1/0"), EngineError);
  CHECK_THROWS_AS(rational_from_string("x"), EngineError);
  CHECK_THROWS_AS(rational_from_string(""), EngineError);
}

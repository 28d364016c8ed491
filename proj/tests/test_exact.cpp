#include "nok/error.hpp"
#include "nok/exact.hpp"

#include <doctest.h>

#include <random>

using namespace nok;

namespace {

Rational random_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  return Rational(num(gen), den(gen));
}

}  // namespace

TEST_CASE("rationals render as p/q in lowest terms") {
  CHECK(to_string(Rational(Integer(6), Integer(-4))) == "-3/2");
  CHECK(parse_rational("3/-2") == Rational(-3, 2));
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("to_string and parse_rational round-trip") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    Rational r = random_rational(gen);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("floor and ceil") {
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(7, 2)) == 4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(floor_of(Rational(-4)) == -4);
  CHECK(ceil_of(Rational(-4)) == -4);
  std::mt19937_64 gen(3);
  for (int i = 0; i < 200; ++i) {
    Rational r = random_rational(gen);
    Rational f(floor_of(r)), c(ceil_of(r));
    CHECK(f <= r);
    CHECK(r < f + 1);
    CHECK(c >= r);
    CHECK(r > c - 1);
    CHECK(is_integer(r) == (f == c));
  }
}

TEST_CASE("field axioms on seeded rationals") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(gen), b = random_rational(gen), c = random_rational(gen);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (1 / a) == 1);
    CHECK(boost::multiprecision::denominator(Rational(a * b)) > 0);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(25) == Integer("15511210043330985984000000"));
}

TEST_CASE("weights must be non-increasing") {
  Weight w = make_weight({1, 0, -1});
  CHECK(w.size() == 3);
  CHECK(w.is_strictly_dominant());
  CHECK_FALSE(make_weight({1, 1, 0}).is_strictly_dominant());
  CHECK(zero_weight(4).is_zero());
  try {
    make_weight({0, 1});
    FAIL("expected DominanceViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DominanceViolation);
  }
  CHECK(pad_weight(make_weight({1, 0}), 3) == std::vector<std::int64_t>{1, 0, 0});
  CHECK_THROWS_AS(pad_weight(w, 2), Error);
}

TEST_CASE("bundle specs validate factor sizes") {
  BundleSpec s = parse_weights(3, "1,0,-1;1,0");
  CHECK(s.n() == 3);
  CHECK(s.factor(1) == make_weight({1, 0, -1}));
  CHECK(s.factor(2) == make_weight({1, 0}));
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Parse;
  };
  CHECK(code([] { parse_weights(3, "1,0;1,0"); }) == Errc::SizeMismatch);
  CHECK(code([] { parse_weights(3, "1,0,-1"); }) == Errc::SizeMismatch);
  CHECK(code([] { parse_weights(3, "1,0,-1;0,1"); }) == Errc::DominanceViolation);
  CHECK_THROWS_AS(parse_weight("1,,0"), Error);
  CHECK_THROWS_AS(parse_weight("a"), Error);
  CHECK(parse_weight(" 2, 1 ,0") == make_weight({2, 1, 0}));
}

TEST_CASE("scaling a spec") {
  BundleSpec s = parse_weights(3, "1,0,-1;1,0");
  CHECK(scale_spec(s, 3) == parse_weights(3, "3,0,-3;3,0"));
  CHECK(scale_spec(s, 0) == parse_weights(3, "0,0,0;0,0"));
  CHECK(scale_spec(scale_spec(s, 2), 3) == scale_spec(s, 6));
  CHECK_THROWS_AS(scale_spec(s, -1), Error);
}

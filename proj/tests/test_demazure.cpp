#include "nok/demazure.hpp"
#include "nok/error.hpp"
#include "nok/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nok;

namespace {

LaurentPolynomial mono(Exponent e, long c = 1) { return LaurentPolynomial::monomial(std::move(e), c); }

std::vector<long> entries(const Weight& w) { return {w.entries().begin(), w.entries().end()}; }

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  LaurentPolynomial a = mono({1, 0}) + mono({0, 1});
  LaurentPolynomial b = mono({1, 0}, -1) + mono({0, 1});
  LaurentPolynomial p = a * b;
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient({2, 0}) == -1);
  CHECK(p.coefficient({0, 2}) == 1);
  CHECK(p.coefficient({1, 1}) == 0);
  CHECK((a + b).coefficient({1, 0}) == 0);
  CHECK(a.evaluate_at_one() == 2);
  CHECK(a.shifted({-1, 2}) == mono({0, 2}) + mono({-1, 3}));
  CHECK(mono({3, 1, 0}).swapped(2) == mono({3, 0, 1}));
  CHECK_THROWS_AS(mono({1, 0}) + mono({1, 0, 0}), Error);
  CHECK_THROWS_AS(a.swapped(2), Error);
}

TEST_CASE("Demazure operator on monomials") {
  CHECK(demazure_op(1, mono({1, 0})) == mono({1, 0}) + mono({0, 1}));
  CHECK(demazure_op(1, mono({0, 1})).is_zero());
  CHECK(demazure_op(1, mono({0, 2})) == mono({1, 1}, -1));
  CHECK(demazure_op(1, mono({0, 3})) == mono({1, 2}, -1) + mono({2, 1}, -1));
  CHECK(demazure_op(2, mono({5, 2, 0})) == mono({5, 2, 0}) + mono({5, 1, 1}) + mono({5, 0, 2}));
  CHECK(demazure_op(1, mono({-1, -1})) == mono({-1, -1}));
  CHECK_THROWS_AS(demazure_op(0, mono({1, 0})), Error);
  CHECK_THROWS_AS(demazure_op(2, mono({1, 0})), Error);
}

TEST_CASE("operator laws on seeded random polynomials") {
  std::mt19937_64 gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 3 : 4;
    LaurentPolynomial f = oracle::random_laurent(gen, n, 6);
    for (std::size_t i = 1; i < n; ++i) {
      LaurentPolynomial g = demazure_op(i, f);
      CHECK(demazure_op(i, g) == g);
      CHECK(g.swapped(i) == g);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      CHECK(apply_word({i, i + 1, i}, f) == apply_word({i + 1, i, i + 1}, f));
    }
    if (n == 4) CHECK(apply_word({1, 3}, f) == apply_word({3, 1}, f));
  }
}

TEST_CASE("operators are linear") {
  std::mt19937_64 gen(67);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPolynomial f = oracle::random_laurent(gen, 3, 5), g = oracle::random_laurent(gen, 3, 5);
    CHECK(demazure_op(2, f + g) == demazure_op(2, f) + demazure_op(2, g));
  }
}

TEST_CASE("words apply right to left") {
  LaurentPolynomial f = mono({0, 1, 0});
  // T_1 first kills x_2. T_2 first gives x_2 + x_3, and T_1 then leaves x_3.
  CHECK(apply_word({2, 1}, f).is_zero());
  LaurentPolynomial g = apply_word({1, 2}, f);
  CHECK(g == demazure_op(1, demazure_op(2, f)));
  CHECK(g == mono({0, 0, 1}));
}

TEST_CASE("Schur polynomials from Gelfand-Tsetlin patterns") {
  LaurentPolynomial s = schur(make_weight({1, 0}), 2);
  CHECK(s == mono({1, 0}) + mono({0, 1}));
  LaurentPolynomial t = schur(make_weight({2, 1, 0}), 3);
  CHECK(t.evaluate_at_one() == 8);
  CHECK(t.coefficient({1, 1, 1}) == 2);
  CHECK(schur(make_weight({1, 1, 1}), 3) == mono({1, 1, 1}));
  CHECK(schur(make_weight({0, -1}), 3) == mono({0, -1, 0}) + mono({-1, 0, 0}));
  CHECK_THROWS_AS(schur(make_weight({1, 0, 0}), 2), Error);
  for (const auto& w : dominant_weights(3, -1, 2)) {
    CHECK(schur(w, 3).evaluate_at_one() == oracle::weyl(entries(w)));
    CHECK(weyl_dim(w) == oracle::weyl(entries(w)));
  }
}

TEST_CASE("Demazure character of the longest word is the Schur polynomial") {
  for (const auto& w : dominant_weights(4, 0, 2)) {
    LaurentPolynomial f = mono(pad_weight(w, 4));
    CHECK(apply_word({1, 2, 1, 3, 2, 1}, f) == schur(w, 4));
  }
}

TEST_CASE("generalized Demazure characters") {
  CHECK(gdc(parse_weights(3, "1,0,-1;1,0")).dimension == 13);
  CHECK(gdc(parse_weights(3, "0,0,0;1,0")).dimension == 2);
  CHECK(gdc(parse_weights(3, "0,0,0;0,0")).polynomial == mono({0, 0, 0}));
  CHECK(gdc(parse_weights(3, "1,0,0;0,0")).polynomial == schur(make_weight({1, 0, 0}), 3));
  CHECK(gdc(parse_weights(2, "3,1")).polynomial == schur(make_weight({3, 1}), 2));

  auto stages = gdc_stages(parse_weights(4, "1,0,0,0;1,0,0;1,0"));
  REQUIRE(stages.size() == 3);
  CHECK(stages[0].word == std::vector<std::size_t>{3, 2, 1});
  CHECK(stages[1].word == std::vector<std::size_t>{2, 1});
  CHECK(stages[2].word == std::vector<std::size_t>{1});
  CHECK(stages[2].weight == Exponent{1, 0, 0, 0});

  // The last factor alone is a GL2 segment: its character is x^(1,0,0) + x^(0,1,0).
  CHECK(gdc(parse_weights(3, "0,0,0;1,0")).polynomial == mono({1, 0, 0}) + mono({0, 1, 0}));
}

TEST_CASE("characters are symmetric under the last operator") {
  for (const char* w : {"1,0,-1;1,0", "2,1,0;0,0", "1,1,0;2,1"}) {
    LaurentPolynomial f = gdc(parse_weights(3, w)).polynomial;
    CHECK(f.swapped(1) == f);
  }
}

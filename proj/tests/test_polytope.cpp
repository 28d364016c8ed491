#include "nok/error.hpp"
#include "nok/polytope.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace nok;

namespace {

std::vector<Integer> v(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

HPolytope unit_cube() {
  HPolytope p(3);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<Integer> up(3, 0), down(3, 0);
    up[j] = 1;
    down[j] = -1;
    p.add_le(up, 1);
    p.add_le(down, 0);
  }
  return p;
}

// Exact rows (gcd-reduced, sorted) for comparing rational polytopes.
std::vector<LinearConstraint> exact_rows(const HPolytope& p) {
  std::vector<LinearConstraint> rows;
  for (const auto& r : p.rows()) rows.push_back(reduce_exact(r));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.bound < b.bound;
  });
  return rows;
}

}  // namespace

TEST_CASE("constraints evaluate exactly") {
  LinearConstraint r = le(v({1, 2}), 3);
  CHECK(r.satisfied_by(std::vector<Rational>{Rational(1), Rational(1)}));
  CHECK_FALSE(r.satisfied_by(std::vector<Rational>{Rational(1), Rational(3, 2)}));
  CHECK(r.satisfied_by(std::vector<Integer>{3, 0}));
  CHECK(r.evaluate(std::vector<Rational>{Rational(1, 2), Rational(1, 4)}) == 1);
  LinearConstraint e = eq(v({1, -1}), 0);
  CHECK(e.satisfied_by(std::vector<Integer>{2, 2}));
  CHECK_FALSE(e.satisfied_by(std::vector<Integer>{2, 1}));
}

TEST_CASE("rows must match the dimension") {
  HPolytope p(2);
  CHECK_THROWS_AS(p.add_le(v({1, 2, 3}), 0), Error);
}

TEST_CASE("normalize divides by the gcd and floors the bound") {
  HPolytope p(2);
  p.add_le(v({2, 4}), 5);
  p.add_le(v({1, 2}), 7);
  p.add_le(v({0, 0}), 3);
  HPolytope n = normalize(p);
  REQUIRE(n.size() == 1);
  CHECK(n.rows()[0].coeffs == v({1, 2}));
  CHECK(n.rows()[0].bound == 2);
}

TEST_CASE("normalize detects infeasible rows") {
  HPolytope p(2);
  p.add_le(v({0, 0}), -1);
  CHECK(normalize(p).is_infeasible_marker());
  HPolytope q(2);
  q.add_eq(v({2, 4}), 3);
  CHECK(normalize(q).is_infeasible_marker());
  CHECK(infeasible_polytope(4).is_infeasible_marker());
  CHECK_FALSE(unit_cube().is_infeasible_marker());
}

TEST_CASE("normalize is idempotent and keeps the lattice set") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 40; ++i) {
    HPolytope p = oracle::random_polytope(gen, 3, 3, 4, i % 3 == 0);
    HPolytope n = normalize(p);
    CHECK(normalize(n) == n);
    CHECK(canonical_form(canonical_form(p)) == canonical_form(p));
    if (n.is_infeasible_marker()) {
      CHECK(oracle::box_count(p, -3, 3) == 0);
    } else {
      CHECK(oracle::box_points(n, -3, 3) == oracle::box_points(p, -3, 3));
    }
  }
}

TEST_CASE("canonical form ignores row order and positive scaling") {
  std::mt19937_64 gen(8);
  for (int i = 0; i < 20; ++i) {
    HPolytope p = oracle::random_polytope(gen, 3, 2, 3, true);
    std::vector<LinearConstraint> rows = p.rows();
    std::shuffle(rows.begin(), rows.end(), gen);
    for (auto& r : rows) {
      for (auto& c : r.coeffs) c *= 3;
      r.bound *= 3;
    }
    CHECK(canonical_form(HPolytope(3, rows)) == canonical_form(p));
  }
}

TEST_CASE("dilation composes") {
  std::mt19937_64 gen(9);
  const Rational ks[] = {Rational(0), Rational(1, 2), Rational(2), Rational(3), Rational(5, 3)};
  for (int i = 0; i < 10; ++i) {
    HPolytope p = oracle::random_polytope(gen, 3, 2, 2, i % 2 == 0);
    for (const auto& a : ks) {
      for (const auto& b : ks) {
        CHECK(exact_rows(dilate(dilate(p, a), b)) == exact_rows(dilate(p, a * b)));
      }
    }
    CHECK(dilate(p, 1) == p);
  }
  CHECK_THROWS_AS(dilate(unit_cube(), -1), Error);
}

TEST_CASE("dilating the cube") {
  for (long k = 0; k <= 4; ++k) {
    CHECK(oracle::box_count(dilate(unit_cube(), k), -1, 5) == (k + 1) * (k + 1) * (k + 1));
  }
  // (1/2) * cube has only the origin.
  CHECK(oracle::box_count(dilate(unit_cube(), Rational(1, 2)), -1, 2) == 1);
}

TEST_CASE("coordinate embedding pins unplaced coordinates") {
  HPolytope seg(1);
  seg.add_le(v({1}), 2);
  seg.add_le(v({-1}), 0);
  std::vector<std::size_t> place{1};
  HPolytope e = coordinate_embed(seg, 3, place);
  CHECK(e.dim() == 3);
  CHECK(e.equality_count() == 2);
  CHECK(oracle::box_points(e, -2, 3) ==
        std::vector<std::vector<long>>{{0, 0, 0}, {0, 1, 0}, {0, 2, 0}});
  std::vector<std::size_t> bad{0, 0};
  HPolytope sq = product(seg, seg);
  try {
    coordinate_embed(sq, 3, bad);
    FAIL("expected PlacementNotInjective");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PlacementNotInjective);
  }
  std::vector<std::size_t> out_of_range{0, 3};
  CHECK_THROWS_AS(coordinate_embed(sq, 3, out_of_range), Error);
}

TEST_CASE("products and pins") {
  HPolytope seg(1);
  seg.add_le(v({1}), 2);
  seg.add_le(v({-1}), 0);
  HPolytope sq = product(seg, unit_cube());
  CHECK(sq.dim() == 4);
  CHECK(oracle::box_count(sq, -1, 3) == 3 * 8);
  HPolytope pinned = pin_coordinate(sq, 0, 1);
  CHECK(oracle::box_count(pinned, -1, 3) == 8);
  CHECK(oracle::box_count(pin_coordinate(sq, 0, 5), -1, 6) == 0);
}

TEST_CASE("equality rank") {
  HPolytope p(3);
  p.add_eq(v({1, 1, 0}), 1);
  p.add_eq(v({2, 2, 0}), 2);
  p.add_eq(v({0, 1, 1}), 0);
  CHECK(equality_rank(p) == 2);
  CHECK(equality_rank(unit_cube()) == 0);
}

TEST_CASE("describe renders rows with labels") {
  std::vector<std::string> labels{"a", "b", "c"};
  CHECK(describe(le(v({1, -2, 0}), 3), labels) == "a - 2*b <= 3");
  CHECK(describe(eq(v({0, 0, -1}), 0), labels) == "-c = 0");
  CHECK(describe(le(v({0, 0}), 1)) == "0 <= 1");
}

#include "nok/error.hpp"
#include "nok/fflv_gz.hpp"
#include "nok/lattice.hpp"
#include "nok/lp.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <omp.h>

#include <random>

using namespace nok;

namespace {

std::vector<Integer> v(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

HPolytope simplex3() {
  HPolytope p(3);
  p.add_le(v({-1, 0, 0}), 0);
  p.add_le(v({0, -1, 0}), 0);
  p.add_le(v({0, 0, -1}), 0);
  p.add_le(v({1, 1, 1}), 1);
  return p;
}

}  // namespace

TEST_CASE("bounding box") {
  auto box = bounding_box(simplex3());
  REQUIRE(box.size() == 3);
  for (const auto& b : box) {
    CHECK(b.lo == 0);
    CHECK(b.hi == 1);
  }
  HPolytope half(1);
  half.add_le(v({1}), 0);
  try {
    bounding_box(half);
    FAIL("expected Unbounded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Unbounded);
  }
  HPolytope empty(1);
  empty.add_le(v({1}), 0);
  empty.add_le(v({-1}), -1);
  try {
    bounding_box(empty);
    FAIL("expected Empty");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Empty);
  }
}

TEST_CASE("counts agree with a brute-force scan") {
  std::mt19937_64 gen(41);
  for (int i = 0; i < 60; ++i) {
    HPolytope p = oracle::random_polytope(gen, 3, 3, 5, i % 3 == 0);
    Integer expect = oracle::box_count(p, -3, 3);
    CHECK(count_lattice_points(p) == expect);
    CHECK(count_lattice_points_serial(p) == expect);
    CHECK(count_by_box_scan(p) == expect);
    CHECK(count_by_box_scan(p, false) == expect);
  }
}

TEST_CASE("dilated counts from one projection chain") {
  std::mt19937_64 gen(43);
  for (int i = 0; i < 15; ++i) {
    HPolytope p = oracle::random_polytope(gen, 3, 2, 3, i % 2 == 0);
    ProjectionChain chain(p);
    const bool empty = !feasible(p).feasible();
    for (long k = 0; k <= 3; ++k) {
      // 0 * P is {0} only for nonempty P.
      Integer expect = empty ? Integer(0) : oracle::box_count(dilate(p, k), -2 * k, 2 * k);
      CHECK(chain.count(k, true) == expect);
      CHECK(chain.count(k, false) == expect);
    }
  }
}

TEST_CASE("counts do not depend on the thread count") {
  std::mt19937_64 gen(47);
  HPolytope p = oracle::random_polytope(gen, 4, 4, 6);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  Integer one = count_lattice_points(p);
  omp_set_num_threads(4);
  Integer four = count_lattice_points(p);
  omp_set_num_threads(saved);
  CHECK(one == four);
  CHECK(one == count_lattice_points_serial(p));
}

TEST_CASE("degenerate and trivial polytopes") {
  HPolytope point(2);
  point.add_eq(v({1, 0}), 0);
  point.add_eq(v({0, 1}), 0);
  CHECK(count_lattice_points(point) == 1);
  HPolytope empty = simplex3();
  empty.add_le(v({1, 1, 1}), -1);
  CHECK(count_lattice_points(empty) == 0);
  // The line x = 2y inside a box has lattice points only at even x.
  HPolytope line(2);
  line.add_eq(v({1, -2}), 0);
  line.add_le(v({1, 0}), 6);
  line.add_le(v({-1, 0}), 6);
  CHECK(count_lattice_points(line) == 7);
  // Rational vertices.
  HPolytope tri(2);
  tri.add_le(v({-1, 0}), 0);
  tri.add_le(v({0, -1}), 0);
  tri.add_le(v({2, 3}), 7);
  CHECK(count_lattice_points(tri) == oracle::box_count(tri, 0, 4));
  HPolytope half(1);
  half.add_le(v({1}), 0);
  CHECK_THROWS_AS(count_lattice_points(half), Error);
}

TEST_CASE("overflowing projection falls back to a box scan") {
  // Cross-polytope |x_1| + ... + |x_4| <= 2: eliminating any variable doubles the rows.
  HPolytope p(4);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Integer> a(4);
    for (int j = 0; j < 4; ++j) a[j] = (mask >> j) & 1 ? 1 : -1;
    p.add_le(a, 2);
  }
  CountOptions tiny;
  tiny.projection.row_cap = 2;
  tiny.projection.prune = false;
  CHECK_THROWS_AS(ProjectionChain(p, tiny.projection), Error);
  CHECK(count_lattice_points(p, tiny) == oracle::box_count(p, -2, 2));
}

TEST_CASE("interpolation") {
  std::vector<Integer> cubes;
  for (long k = 0; k <= 5; ++k) cubes.push_back((k + 1) * (k + 1) * (k + 1));
  EhrhartPolynomial e = fit_with_holdouts(cubes, 3);
  CHECK(e.coefficients() == std::vector<Rational>{1, 3, 3, 1});
  CHECK(e.degree() == 3);
  CHECK(e(Rational(10)) == 1331);
  CHECK(interpolate(std::span<const Integer>(cubes.data(), 4)) == e);
  std::vector<Integer> powers{1, 2, 4, 8, 16, 32};
  try {
    fit_with_holdouts(powers, 3);
    FAIL("expected InterpolationMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::InterpolationMismatch);
  }
  CHECK(EhrhartPolynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
}

TEST_CASE("Ehrhart polynomials of standard polytopes") {
  // Unimodular simplex: binomial(k + 3, 3).
  EhrhartPolynomial s = ehrhart(simplex3(), 3);
  for (long k = 0; k <= 8; ++k) CHECK(s(Rational(k)) == Rational(oracle::binomial(k + 3, 3)));
  CHECK(normalized_volume(simplex3(), 3) == 1);
  CHECK(expected_degree(simplex3()) == 3);

  // FFLV of (1,0,-1): (k+1)^3, which is the dimension of the irreducible of weight (k,0,-k).
  HPolytope f = fflv(make_weight({1, 0, -1}));
  EhrhartPolynomial e = ehrhart(f, 3);
  CHECK(e.coefficients() == std::vector<Rational>{1, 3, 3, 1});
  CHECK(normalized_volume(f, 3) == 6);
  for (long k = 0; k <= 4; ++k) CHECK(e(Rational(k)) == Rational(oracle::weyl({k, 0, -k})));

  // A flat square in R^3 has degree 2.
  HPolytope sq(3);
  sq.add_eq(v({0, 0, 1}), 0);
  sq.add_le(v({1, 0, 0}), 1);
  sq.add_le(v({-1, 0, 0}), 0);
  sq.add_le(v({0, 1, 0}), 1);
  sq.add_le(v({0, -1, 0}), 0);
  CHECK(expected_degree(sq) == 2);
  CHECK(ehrhart(sq, 2).coefficients() == std::vector<Rational>{1, 2, 1});
}

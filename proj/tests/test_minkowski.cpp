#include "nok/error.hpp"
#include "nok/fflv_gz.hpp"
#include "nok/lp.hpp"
#include "nok/minkowski.hpp"
#include "nok/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace nok;

namespace {

HPolytope box(std::size_t dim, long lo, long hi) {
  HPolytope p(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Integer> up(dim, 0), down(dim, 0);
    up[j] = 1;
    down[j] = -1;
    p.add_le(up, hi);
    p.add_le(down, -lo);
  }
  return p;
}

// Hand-derived description of FFLV(1,0,-1) + segment in (u11, u12, u21).
HPolytope example_sum() {
  HPolytope p(3);
  p.add_le({-1, 0, 0}, 0);
  p.add_le({0, -1, 0}, 0);
  p.add_le({0, 0, -1}, 0);
  p.add_le({1, 0, 0}, 1);
  p.add_le({0, 1, 0}, 2);
  p.add_le({1, 0, 1}, 2);
  p.add_le({1, 1, 1}, 3);
  return p;
}

MinkowskiSpec example_spec() { return fflv_sum_spec(parse_weights(3, "1,0,-1;1,0")); }

}  // namespace

TEST_CASE("specs validate their summands") {
  CHECK_THROWS_AS(MinkowskiSpec({}), Error);
  CHECK_THROWS_AS(MinkowskiSpec({box(2, 0, 1), box(3, 0, 1)}), Error);
  HPolytope empty = box(2, 0, 1);
  empty.add_le({1, 1}, -1);
  try {
    MinkowskiSpec({box(2, 0, 1), empty});
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyInput);
  }
}

TEST_CASE("lifted system layout") {
  MinkowskiSpec s({box(2, 0, 1), box(2, 0, 2)});
  HPolytope l = lifted_system(s);
  CHECK(l.dim() == 6);
  CHECK(l.equality_count() == 2);
  HPolytope at = lifted_system(s, std::vector<Rational>{Rational(1, 2), 3});
  CHECK(at.dim() == 4);
  CHECK(feasible(at).feasible());
  CHECK_FALSE(feasible(lifted_system(s, std::vector<Rational>{4, 0})).feasible());
}

TEST_CASE("membership with certificates") {
  MinkowskiSpec s = example_spec();
  oracle::for_box(3, -1, 4, [&](const std::vector<long>& x) {
    std::vector<Rational> p(x.begin(), x.end());
    Membership m = member(s, p);
    CHECK(m.member == oracle::holds(example_sum(), x));
    if (!m.member) return;
    REQUIRE(m.certificate.size() == 2);
    std::vector<Rational> total(3, 0);
    for (std::size_t t = 0; t < 2; ++t) {
      CHECK(s.summands()[t].contains(std::span<const Rational>(m.certificate[t])));
      for (std::size_t j = 0; j < 3; ++j) total[j] += m.certificate[t][j];
    }
    CHECK(total == p);
  });
  CHECK(member(s, std::vector<Rational>{Rational(1, 2), Rational(3, 2), 1}).member);
  CHECK_FALSE(member(s, std::vector<Rational>{Rational(3, 2), 0, 0}).member);
}

TEST_CASE("explicit H-representation of the example sum") {
  HPolytope h = explicit_hrep(example_spec());
  CHECK(h.inequality_count() == 7);
  CHECK(h.equality_count() == 0);
  CHECK(canonical_form(h) == canonical_form(example_sum()));
  CHECK(oracle::box_count(example_sum(), -1, 4) == 13);
  CHECK(count_sum(example_spec(), 1) == 13);
}

TEST_CASE("sums of boxes are boxes") {
  MinkowskiSpec s({box(3, 0, 1), box(3, -1, 2), box(3, 0, 0)});
  HPolytope h = explicit_hrep(s);
  CHECK(canonical_form(h) == canonical_form(box(3, -1, 3)));
  SumCounter c(s);
  for (long k = 0; k <= 3; ++k) CHECK(c.count(k) == (4 * k + 1) * (4 * k + 1) * (4 * k + 1));
}

TEST_CASE("a single summand is its irredundant description") {
  HPolytope p = box(2, 0, 2);
  p.add_le({1, 1}, 10);
  MinkowskiSpec s({p});
  CHECK(canonical_form(explicit_hrep(s)) == canonical_form(box(2, 0, 2)));
}

TEST_CASE("LP walk fallback agrees with the explicit count") {
  BundleSpec spec = parse_weights(3, "2,1,0;1,0");
  for (auto make : {fflv_sum_spec, gz_sum_spec}) {
    MinkowskiSpec s = make(spec);
    SumCountOptions tiny;
    tiny.projection.row_cap = 2;
    tiny.projection.prune = false;
    SumCounter fallback(s, tiny);
    SumCounter direct(s);
    CHECK_FALSE(fallback.has_explicit_hrep());
    CHECK(direct.has_explicit_hrep());
    for (long k = 0; k <= 3; ++k) CHECK(fallback.count(k) == direct.count(k));
  }
  HPolytope lifted = lifted_system(example_spec());
  std::vector<std::size_t> keep{6, 7, 8};
  CHECK(count_projected(lifted, keep, false) == 13);
  CHECK(count_projected(lifted, keep, true) == 13);
}

TEST_CASE("dilation and sums commute") {
  MinkowskiSpec s = example_spec();
  HPolytope h = explicit_hrep(s);
  for (long k = 0; k <= 3; ++k) {
    CHECK(count_sum(s, k) == oracle::box_count(dilate(h, k), -1, 3 * k + 1));
    HPolytope direct = explicit_hrep(s.dilated(k));
    if (k == 0) {
      // {0} comes out as equalities on one side and homogeneous rows on the other.
      CHECK(oracle::box_points(direct, -1, 1) == std::vector<std::vector<long>>{{0, 0, 0}});
    } else {
      CHECK(canonical_form(direct) == canonical_form(dilate(h, k)));
    }
  }
}

TEST_CASE("summands containing the origin lie inside the sum") {
  BundleSpec spec = parse_weights(4, "2,1,0,0;1,1,0;1,0");
  MinkowskiSpec s = fflv_sum_spec(spec);
  HPolytope h = explicit_hrep(s);
  Integer total = SumCounter(s).count(1);
  for (const auto& summand : s.summands()) {
    CHECK(contained_in(summand, h));
    CHECK(total >= count_lattice_points(summand));
  }
  CHECK(contained_in(s, h));
  CHECK_FALSE(contained_in(h, s.summands().front()));
  HPolytope smaller = h;
  smaller.add_le(std::vector<Integer>(6, 1), 0);
  CHECK_FALSE(contained_in(s, smaller));
}

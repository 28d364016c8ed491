#include "nok/error.hpp"
#include "nok/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nok;

TEST_CASE("three-way agreement on the n = 3 example") {
  VerificationReport r = verify_theorem(parse_weights(3, "1,0,-1;1,0"), 6);
  CHECK(r.pass);
  REQUIRE(r.rows.size() == 7);
  CHECK(r.rows[0].fflv_sum == 1);
  CHECK(r.rows[1].fflv_sum == 13);
  CHECK(r.rows[1].gz_sum == 13);
  CHECK(r.rows[1].demazure_dim == 13);
  CHECK_FALSE(r.first_discrepancy);
  REQUIRE(r.polynomials);
  CHECK(r.polynomials->agree());
  CHECK(r.fflv_explicit);
  CHECK(r.gz_explicit);
  // Leading coefficient times d! is the normalized volume, shared by all three.
  Rational lead = r.polynomials->fflv.coefficient(3) * 6;
  CHECK(lead == r.polynomials->hilbert.coefficient(3) * 6);
  CHECK(lead == 15);
}

TEST_CASE("single nonzero factor") {
  VerificationReport r = verify_theorem(parse_weights(3, "1,0,0;0,0"), 4);
  CHECK(r.pass);
  CHECK(r.rows[1].demazure_dim == 3);
  for (const auto& row : r.rows) CHECK(row.fflv_sum == oracle::weyl({row.k, 0, 0}));
}

TEST_CASE("all-zero spec") {
  VerificationReport r = verify_theorem(parse_weights(4, "0,0,0,0;0,0,0;0,0"), 3);
  CHECK(r.pass);
  for (const auto& row : r.rows) {
    CHECK(row.fflv_sum == 1);
    CHECK(row.gz_sum == 1);
    CHECK(row.demazure_dim == 1);
  }
}

TEST_CASE("rows do not depend on the dilation range") {
  BundleSpec spec = parse_weights(3, "2,1,0;1,0");
  VerificationReport short_run = verify_theorem(spec, 2);
  VerificationReport long_run = verify_theorem(spec, 5);
  for (std::size_t k = 0; k < short_run.rows.size(); ++k) {
    CHECK(short_run.rows[k].fflv_sum == long_run.rows[k].fflv_sum);
    CHECK(short_run.rows[k].gz_sum == long_run.rows[k].gz_sum);
    CHECK(short_run.rows[k].demazure_dim == long_run.rows[k].demazure_dim);
  }
  CHECK_FALSE(short_run.polynomials);
  CHECK(long_run.polynomials);
}

TEST_CASE("zero factors are points at the origin") {
  BundleSpec spec = parse_weights(3, "2,0,0;0,0");
  VerificationReport r = verify_theorem(spec, 3);
  CHECK(r.pass);
  AmbientFrame frame(3);
  HPolytope alone = embed_fflv(frame, 1, spec.factor(1));
  for (const auto& row : r.rows) CHECK(row.fflv_sum == count_lattice_points(dilate(alone, row.k)));
}

TEST_CASE("sum counts dominate each factor") {
  BundleSpec spec = parse_weights(4, "1,1,0,0;2,1,0;1,0");
  VerificationReport r = verify_theorem(spec, 1);
  CHECK(r.pass);
  AmbientFrame frame(4);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(r.rows[1].fflv_sum >= count_lattice_points(embed_fflv(frame, i, spec.factor(i))));
  }
}

TEST_CASE("resource limits") {
  BundleSpec spec = parse_weights(4, "1,0,0,0;1,0,0;1,0");
  VerifyOptions capped;
  capped.max_n = 3;
  try {
    verify_theorem(spec, 1, capped);
    FAIL("expected ResourceExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ResourceExceeded);
  }
  VerifyOptions rushed;
  rushed.time_budget = 1e-9;
  VerificationReport r = verify_theorem(spec, 3, rushed);
  CHECK(r.resource_exceeded);
  CHECK_FALSE(r.pass);
  CHECK(r.rows.size() < 4);
  CHECK_THROWS_AS(verify_theorem(spec, -1), Error);
}

TEST_CASE("default dilation ranges") {
  CHECK(default_max_dilation(2) == 3);
  CHECK(default_max_dilation(3) == 5);
  CHECK(default_max_dilation(4) == 6);
  CHECK(default_max_dilation(5) == 2);
}

TEST_CASE("regression checks for the n = 3 example") {
  CheckReport a = regression_example(make_weight({1, 0, -1}), make_weight({0, 0}));
  CHECK(a.pass());
  CHECK(a.checks.size() == 2);
  CheckReport b = regression_example(make_weight({1, 0, -1}), make_weight({1, 0}));
  CHECK(b.pass());
  CHECK(b.checks.size() == 3);
  CHECK(regression_example(make_weight({2, 1, 0}), make_weight({1, 0})).pass());
  CHECK(regression_example(make_weight({3, 1, 0}), make_weight({2, 0})).pass());
  CHECK(regression_example(make_weight({0, 0, 0}), make_weight({1, 0})).pass());
  CHECK(b.first_failure() == nullptr);
  CHECK_THROWS_AS(regression_example(make_weight({1, 0}), make_weight({1, 0})), Error);
}

TEST_CASE("dominant weight enumeration") {
  for (long m = 1; m <= 4; ++m) {
    for (long top = 0; top <= 3; ++top) {
      auto ws = dominant_weights(static_cast<std::size_t>(m), 0, top);
      CHECK(Integer(static_cast<long>(ws.size())) == oracle::dominant_count(m, top));
    }
  }
  CHECK(dominant_weights(3, 0, 2).size() == 10);
  CHECK(dominant_weights(2, 0, 2).size() == 6);
  CHECK(dominant_weights(2, 1, 0).empty());
}

TEST_CASE("single-weight suite") {
  SingleWeightReport r = single_weight_suite(3, 2);
  CHECK(r.report.pass());
  CHECK(r.weights_per_slot == std::vector<std::size_t>{10, 6});
  CHECK(single_weight_suite(2, 3).report.pass());
  CHECK(single_weight_suite(4, 1).report.pass());
}

TEST_CASE("seeded random specs") {
  CHECK(random_spec(3, 2, 1) == random_spec(3, 2, 1));
  CHECK(random_spec(4, 1, 7) == random_spec(4, 1, 7));
  BundleSpec s = random_spec(2, 5, 0);
  CHECK(s.n() == 2);
  CHECK(s.weights().size() == 1);
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BundleSpec t = random_spec(4, 2, seed);
    for (const auto& w : t.weights()) {
      for (auto e : w.entries()) CHECK((e >= 0 && e <= 2));
    }
    differs = differs || !(t == random_spec(4, 2, 0));
  }
  CHECK(differs);
}

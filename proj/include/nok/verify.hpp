#pragma once

/**
 * End-to-end checks of the additivity theorem at desk scale.
 *
 * For a bundle spec and dilations k = 0..K the harness compares three
 * independently computed integers:
 *   - lattice points of k * (FFLV(L_1) + ... + FFLV(L_{n-1})), embedded,
 *   - lattice points of k * (GZ(L_1) + ... + GZ(L_{n-1})), embedded,
 *   - the dimension of the generalized Demazure character of kL.
 * When K >= d + 2 (d = n(n-1)/2) the three Ehrhart/Hilbert polynomials are
 * fitted with two hold-out dilations and compared coefficientwise.
 */

#include "nok/demazure.hpp"
#include "nok/exact.hpp"
#include "nok/fflv_gz.hpp"
#include "nok/lattice.hpp"
#include "nok/minkowski.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nok {

struct VerificationRow {
  std::int64_t k = 0;
  Integer fflv_sum;
  Integer gz_sum;
  Integer demazure_dim;

  bool agree() const { return fflv_sum == gz_sum && gz_sum == demazure_dim; }
};

struct PolynomialComparison {
  EhrhartPolynomial fflv;
  EhrhartPolynomial gz;
  EhrhartPolynomial hilbert;

  bool agree() const { return fflv == gz && gz == hilbert; }
};

struct VerificationReport {
  BundleSpec spec;
  std::int64_t max_dilation = 0;
  std::vector<VerificationRow> rows;
  std::optional<VerificationRow> first_discrepancy;
  std::optional<PolynomialComparison> polynomials;
  /// Set when a polynomial fit failed its hold-out check.
  std::optional<std::string> polynomial_error;
  /// Set when the time budget ran out; rows hold the completed prefix.
  std::optional<std::string> resource_exceeded;
  bool fflv_explicit = false;
  bool gz_explicit = false;
  bool pass = false;
};

struct VerifyOptions {
  std::size_t max_n = 5;
  bool parallel = true;
  ProjectionOptions projection = {};
  /// Wall-clock budget in seconds; 0 disables it.
  double time_budget = 0;
};

/// d + 2 for n <= 3, d for n = 4, 2 beyond.
std::int64_t default_max_dilation(std::size_t n);

/// Minkowski specs of the embedded FFLV / GZ factors; zero weights are kept as
/// single points.
MinkowskiSpec fflv_sum_spec(const BundleSpec& spec);
MinkowskiSpec gz_sum_spec(const BundleSpec& spec);

/// Throws ResourceExceeded when n exceeds options.max_n.
VerificationReport verify_theorem(const BundleSpec& spec, std::int64_t max_dilation,
                                  VerifyOptions options = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool pass() const;
  /// First failing check, if any.
  const Check* first_failure() const;
};

/// n = 3 checks: FFLV(L_1) is {u >= 0, u^1_1 <= l1-l2, u^1_2 <= l2-l3,
/// u^1_1 + u^1_2 + u^2_1 <= l1-l3}, the factor-2 segment is pinned to
/// u^1_1 = u^2_1 = 0, and the sum has exactly 7 facets when both weights are
/// strictly dominant.
CheckReport regression_example(const Weight& first, const Weight& second);

/// Every non-increasing tuple of the given size with entries in [lo, hi].
std::vector<Weight> dominant_weights(std::size_t size, std::int64_t lo, std::int64_t hi);

struct SingleWeightReport {
  CheckReport report;
  /// Weights checked per factor slot i = 1..n-1.
  std::vector<std::size_t> weights_per_slot;
};

/// count(embed_fflv) = count(embed_gz) = weyl_dim for every slot and every
/// dominant weight with entries in [0, max_entry]; gdc equals schur in slot 1.
SingleWeightReport single_weight_suite(std::size_t n, std::int64_t max_entry, bool parallel = true);

/// Deterministic pseudo-random dominant weights (mt19937_64).
BundleSpec random_spec(std::size_t n, std::int64_t max_entry, std::uint64_t seed);

}  // namespace nok

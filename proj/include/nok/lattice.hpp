#pragma once

/**
 * Lattice-point counting for bounded H-polytopes.
 *
 * Counting walks coordinates in order. The exact bounds for coordinate j given
 * a fixed prefix come from the projection of P onto its first j+1
 * coordinates, so a chain of Fourier-Motzkin projections is computed once and
 * then reused for every dilation k (the projections of kP are the projections
 * of P with bounds scaled by k). The innermost coordinate is counted as an
 * interval length instead of being enumerated.
 *
 * count_lattice_points splits the walk over prefixes with OpenMP;
 * count_lattice_points_serial is the single-threaded reference.
 */

#include "nok/lp.hpp"
#include "nok/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nok {

struct Interval {
  Rational lo;
  Rational hi;
};

/// Exact per-coordinate range of P. Throws Empty or Unbounded.
std::vector<Interval> bounding_box(const HPolytope& polytope);

class ProjectionChain {
 public:
  /// Throws DimensionOverflow when some projection exceeds the row cap.
  explicit ProjectionChain(const HPolytope& polytope, ProjectionOptions options = {});

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return empty_; }
  /// Projection onto the first j coordinates, 1 <= j <= dim.
  const HPolytope& level(std::size_t j) const { return levels_.at(j - 1); }

  /// Lattice points of k * P.
  Integer count(std::int64_t k = 1, bool parallel = true) const;

 private:
  std::size_t dim_ = 0;
  bool empty_ = false;
  std::vector<HPolytope> levels_;
};

struct CountOptions {
  bool parallel = true;
  ProjectionOptions projection = {};
};

/// Exact lattice count. Falls back to a box scan with membership tests when
/// the projection chain overflows the row cap. Throws Unbounded.
Integer count_lattice_points(const HPolytope& polytope, CountOptions options = {});
Integer count_lattice_points_serial(const HPolytope& polytope);

/// Box scan: every integer point of the bounding box tested against P.
Integer count_by_box_scan(const HPolytope& polytope, bool parallel = true);

class EhrhartPolynomial {
 public:
  EhrhartPolynomial() = default;
  /// Coefficients from the constant term up.
  explicit EhrhartPolynomial(std::vector<Rational> coefficients);

  /// Highest index with a nonzero coefficient (0 for constants and zero).
  std::size_t degree() const noexcept;
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational coefficient(std::size_t i) const;
  Rational operator()(const Rational& k) const;

  friend bool operator==(const EhrhartPolynomial& a, const EhrhartPolynomial& b);

 private:
  std::vector<Rational> coefficients_;
};

/// Polynomial of degree <= values.size()-1 through (k, values[k]), k = 0, 1, ...
EhrhartPolynomial interpolate(std::span<const Integer> values);

/// Fits through counts at k = 0..degree and checks k = degree+1, degree+2;
/// throws InterpolationMismatch when a check fails.
EhrhartPolynomial fit_with_holdouts(std::span<const Integer> values, std::size_t degree);

/// Ambient dimension minus the rank of the equality rows.
std::size_t expected_degree(const HPolytope& polytope);

EhrhartPolynomial ehrhart(const HPolytope& polytope, std::size_t degree,
                          CountOptions options = {});

/// degree! times the degree-th Ehrhart coefficient.
Rational normalized_volume(const HPolytope& polytope, std::size_t degree,
                           CountOptions options = {});

}  // namespace nok

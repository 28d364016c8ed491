#pragma once

/**
 * Minkowski sums kept as a list of summands. Membership is an LP on the
 * lifted system {x_1 in P_1, ..., x_T in P_T, x_1 + ... + x_T = p}; an
 * explicit H-representation is obtained by projecting the lifted system onto
 * the sum coordinates.
 */

#include "nok/lattice.hpp"
#include "nok/lp.hpp"
#include "nok/polytope.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace nok {

class MinkowskiSpec {
 public:
  /// Throws EmptyInput for an empty summand list or an infeasible summand,
  /// SizeMismatch when dimensions differ.
  explicit MinkowskiSpec(std::vector<HPolytope> summands);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<HPolytope>& summands() const noexcept { return summands_; }

  /// Every summand dilated by k.
  MinkowskiSpec dilated(std::int64_t k) const;

 private:
  std::size_t dim_ = 0;
  std::vector<HPolytope> summands_;
};

/// Variables [x_1 | ... | x_T] with sum pinned to `point`, or
/// [x_1 | ... | x_T | y] with sum(x_t) - y = 0 when no point is given.
HPolytope lifted_system(const MinkowskiSpec& spec,
                        const std::optional<std::vector<Rational>>& point = std::nullopt);

struct Membership {
  bool member = false;
  /// x_t per summand, summing to the query point.
  std::vector<std::vector<Rational>> certificate;
};

Membership member(const MinkowskiSpec& spec, std::span<const Rational> point);

/// Irredundant H-representation of the sum. Throws DimensionOverflow.
HPolytope explicit_hrep(const MinkowskiSpec& spec, ProjectionOptions options = {});

/// Lattice points of sums projected from a lifted system, walked prefix by
/// prefix with LP bounds. Used when no explicit H-representation fits.
Integer count_projected(const HPolytope& lifted, std::span<const std::size_t> keep,
                        bool parallel = true);

struct SumCountOptions {
  bool parallel = true;
  ProjectionOptions projection = {};
};

/// Counts k * (sum) for many k, building the explicit H-representation and
/// its projection chain once.
class SumCounter {
 public:
  explicit SumCounter(MinkowskiSpec spec, SumCountOptions options = {});

  Integer count(std::int64_t k) const;
  /// False when the row cap forced the LP-walk fallback.
  bool has_explicit_hrep() const noexcept { return hrep_.has_value(); }
  const std::optional<HPolytope>& hrep() const noexcept { return hrep_; }

 private:
  MinkowskiSpec spec_;
  SumCountOptions options_;
  std::optional<HPolytope> hrep_;
  std::shared_ptr<ProjectionChain> chain_;
};

Integer count_sum(const MinkowskiSpec& spec, std::int64_t k, SumCountOptions options = {});

/// Every row of `outer` holds on all of `inner`, certified row by row with an
/// LP over inner.
bool contained_in(const HPolytope& inner, const HPolytope& outer);
bool contained_in(const MinkowskiSpec& inner, const HPolytope& outer);

}  // namespace nok

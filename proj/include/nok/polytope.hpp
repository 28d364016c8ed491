#pragma once

#include "nok/exact.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nok {

enum class Relation { LessEqual, Equal };

/// coeffs . x <= bound, or coeffs . x == bound.
struct LinearConstraint {
  std::vector<Integer> coeffs;
  Integer bound;
  Relation kind = Relation::LessEqual;

  bool is_equality() const noexcept { return kind == Relation::Equal; }
  bool is_zero_row() const;
  /// Exact evaluation of the relation at a rational point.
  bool satisfied_by(std::span<const Rational> point) const;
  bool satisfied_by(std::span<const Integer> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

LinearConstraint le(std::vector<Integer> coeffs, Integer bound);
LinearConstraint eq(std::vector<Integer> coeffs, Integer bound);

/// Exact H-representation in R^dim. Infeasible systems are ordinary values.
class HPolytope {
 public:
  HPolytope() = default;
  explicit HPolytope(std::size_t dim) : dim_(dim) {}
  HPolytope(std::size_t dim, std::vector<LinearConstraint> rows);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LinearConstraint>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  void add(LinearConstraint row);
  void add_le(std::vector<Integer> coeffs, Integer bound);
  void add_eq(std::vector<Integer> coeffs, Integer bound);

  std::vector<LinearConstraint> inequalities() const;
  std::vector<LinearConstraint> equalities() const;
  std::size_t inequality_count() const;
  std::size_t equality_count() const;

  bool contains(std::span<const Rational> point) const;
  bool contains(std::span<const Integer> point) const;

  /// True for the canonical infeasible marker produced by normalize.
  bool is_infeasible_marker() const;

  friend bool operator==(const HPolytope&, const HPolytope&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LinearConstraint> rows_;
};

/// The canonical infeasible polytope {0 <= -1} in R^dim.
HPolytope infeasible_polytope(std::size_t dim);

/// Divides a row by the gcd of its coefficients and bound. Never changes the
/// solution set; used wherever dilation must stay exact.
LinearConstraint reduce_exact(LinearConstraint row);

/// Divides coefficients by their gcd g and floors the inequality bound by g.
/// Equalities with g not dividing the bound turn the whole polytope into the
/// infeasible marker, as do 0 <= negative rows. Trivially true rows and
/// duplicates are dropped. The rounding is only valid for lattice queries.
HPolytope normalize(const HPolytope& polytope);

/// normalize, then rows sorted (equalities first, then lexicographic).
HPolytope canonical_form(const HPolytope& polytope);

/// k * P for a nonnegative rational k. Bounds are scaled exactly (coefficients
/// absorb the denominator of k), so dilate(P, 1) == P. dilate(P, 0) keeps the
/// homogeneous rows, which is {0} only when P is nonempty and bounded.
HPolytope dilate(const HPolytope& polytope, const Rational& k);

/// Places coordinate j of P at ambient index placement[j] (0-based) and pins
/// every unplaced ambient coordinate to 0. Throws PlacementNotInjective.
HPolytope coordinate_embed(const HPolytope& polytope, std::size_t target_dim,
                           std::span<const std::size_t> placement);

/// P x Q in R^{dim P + dim Q}.
HPolytope product(const HPolytope& first, const HPolytope& second);

/// Restricts P to points whose coordinate `index` equals value.
HPolytope pin_coordinate(const HPolytope& polytope, std::size_t index, const Integer& value);

/// Rank of the equality rows over Q.
std::size_t equality_rank(const HPolytope& polytope);

std::string describe(const LinearConstraint& row, std::span<const std::string> labels = {});

}  // namespace nok

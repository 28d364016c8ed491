#pragma once

/**
 * Exact rational linear programming over H-polytopes.
 *
 * The solver is a dictionary simplex with Bland's rule. Equalities are
 * eliminated by exact Gaussian substitution before pivoting, and free
 * variables are pivoted into the basis up front, so no variable splitting is
 * needed. All arithmetic is in Rational; witnesses satisfy every constraint
 * exactly.
 */

#include "nok/polytope.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nok {

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<std::vector<Rational>> witness;
  std::optional<Rational> optimum;

  bool feasible() const noexcept { return status == LpStatus::Feasible; }
};

/// Witness of any point of P, or infeasible.
LpOutcome feasible(const HPolytope& polytope);

/// max c.x over P. Unbounded is reported only here.
LpOutcome maximize(std::span<const Integer> objective, const HPolytope& polytope);
LpOutcome minimize(std::span<const Integer> objective, const HPolytope& polytope);

/// Pivot trace to stderr while nonzero (per thread).
void set_lp_verbosity(int level);

struct RedundancyOptions {
  /// Test rows concurrently against all others first; only the candidates
  /// found there are re-tested one by one.
  bool parallel = true;
};

/// Drops inequalities implied by the remaining rows (with the same
/// equalities). Throws EmptyInput if P is infeasible.
HPolytope remove_redundant(const HPolytope& polytope, RedundancyOptions options = {});

/// Sequential reference: every inequality tested in order against the rows
/// that survive at that point.
HPolytope remove_redundant_serial(const HPolytope& polytope);

/// Row cap from NOK_FM_ROW_CAP when set, else 20000.
std::size_t default_fm_row_cap();

struct ProjectionOptions {
  /// Maximum number of rows in any intermediate system.
  std::size_t row_cap = default_fm_row_cap();
  /// Run the LP redundancy filter after every eliminated variable.
  bool prune = true;
};

/// H-representation of the projection of P onto the coordinates in `keep`
/// (output coordinate t is input coordinate keep[t]). Equalities are used for
/// substitution first; then Fourier-Motzkin elimination, one variable at a
/// time. Throws DimensionOverflow past the row cap. Infeasible input yields
/// the infeasible marker.
HPolytope fm_project(const HPolytope& polytope, std::span<const std::size_t> keep,
                     ProjectionOptions options = {});

}  // namespace nok

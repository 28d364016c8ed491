#include "nok/error.hpp"
#include "nok/lp.hpp"

#include <omp.h>

#include <exception>

namespace nok {

namespace {

// Row `target` is redundant against the rows flagged in `active` (plus all
// equalities) when max a.x over them does not exceed its bound.
bool is_redundant(const HPolytope& polytope, std::size_t target, const std::vector<bool>& active) {
  const auto& rows = polytope.rows();
  HPolytope rest(polytope.dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == target || !active[i]) continue;
    rest.add(rows[i]);
  }
  LpOutcome out = maximize(rows[target].coeffs, rest);
  if (out.status == LpStatus::Infeasible) return true;
  if (out.status == LpStatus::Unbounded) return false;
  return *out.optimum <= Rational(rows[target].bound);
}

void require_feasible(const HPolytope& polytope) {
  if (!feasible(polytope).feasible()) {
    throw Error(Errc::EmptyInput, "redundancy removal needs a nonempty polytope");
  }
}

HPolytope keep_active(const HPolytope& polytope, const std::vector<bool>& active) {
  HPolytope out(polytope.dim());
  for (std::size_t i = 0; i < polytope.rows().size(); ++i) {
    if (active[i]) out.add(polytope.rows()[i]);
  }
  return out;
}

void sequential_pass(const HPolytope& polytope, std::vector<bool>& active,
                     const std::vector<bool>& candidate) {
  const auto& rows = polytope.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].is_equality() || !candidate[i]) continue;
    if (is_redundant(polytope, i, active)) active[i] = false;
  }
}

}  // namespace

HPolytope remove_redundant_serial(const HPolytope& polytope) {
  require_feasible(polytope);
  std::vector<bool> active(polytope.rows().size(), true);
  std::vector<bool> candidate(polytope.rows().size(), true);
  sequential_pass(polytope, active, candidate);
  return keep_active(polytope, active);
}

HPolytope remove_redundant(const HPolytope& polytope, RedundancyOptions options) {
  if (!options.parallel) return remove_redundant_serial(polytope);
  require_feasible(polytope);
  const auto& rows = polytope.rows();
  const std::size_t m = rows.size();
  std::vector<bool> active(m, true);
  // A row that is irredundant against all others stays irredundant against
  // any subset of them, so only rows flagged here need the ordered pass.
  std::vector<char> flagged(m, 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(m); ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (rows[idx].is_equality()) continue;
    try {
      flagged[idx] = is_redundant(polytope, idx, active) ? 1 : 0;
    } catch (...) {
#pragma omp critical(nok_redundancy_error)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<bool> candidate(m);
  for (std::size_t i = 0; i < m; ++i) candidate[i] = flagged[i] != 0;
  sequential_pass(polytope, active, candidate);
  return keep_active(polytope, active);
}

}  // namespace nok

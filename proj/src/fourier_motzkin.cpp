#include "nok/error.hpp"
#include "nok/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace nok {

namespace {

// Keeps the tightest inequality per left-hand side; drops 0 <= b rows.
// Returns false if some row reads 0 <= negative.
bool tidy(std::vector<LinearConstraint>& rows) {
  std::map<std::vector<Integer>, std::size_t> seen;
  std::vector<LinearConstraint> out;
  std::vector<LinearConstraint> eqs;
  for (auto& row : rows) {
    row = reduce_exact(std::move(row));
    if (row.is_zero_row()) {
      bool ok = row.is_equality() ? row.bound == 0 : row.bound >= 0;
      if (!ok) return false;
      continue;
    }
    if (row.is_equality()) {
      if (std::find(eqs.begin(), eqs.end(), row) == eqs.end()) eqs.push_back(row);
      continue;
    }
    auto [it, inserted] = seen.try_emplace(row.coeffs, out.size());
    if (inserted) {
      out.push_back(std::move(row));
    } else if (row.bound < out[it->second].bound) {
      out[it->second].bound = row.bound;
    }
  }
  eqs.insert(eqs.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
  rows = std::move(eqs);
  return true;
}

// coef_e * row - row_v * eq, with eq oriented so eq_v > 0.
LinearConstraint eliminate_with(const LinearConstraint& row, const LinearConstraint& eqn,
                                std::size_t v) {
  LinearConstraint out = row;
  const Integer& ev = eqn.coeffs[v];
  Integer rv = row.coeffs[v];
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) {
    out.coeffs[j] = ev * row.coeffs[j] - rv * eqn.coeffs[j];
  }
  out.bound = ev * row.bound - rv * eqn.bound;
  return reduce_exact(std::move(out));
}

HPolytope prune(std::size_t dim, std::vector<LinearConstraint>& rows, bool parallel) {
  HPolytope p(dim, rows);
  return remove_redundant(p, {.parallel = parallel});
}

}  // namespace

std::size_t default_fm_row_cap() {
  if (const char* env = std::getenv("NOK_FM_ROW_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20000;
}

HPolytope fm_project(const HPolytope& polytope, std::span<const std::size_t> keep,
                     ProjectionOptions options) {
  const std::size_t dim = polytope.dim();
  if (keep.empty()) throw Error(Errc::SizeMismatch, "projection needs at least one kept coordinate");
  std::vector<bool> kept(dim, false);
  for (auto k : keep) {
    if (k >= dim || kept[k]) throw Error(Errc::PlacementNotInjective, "bad kept coordinate list");
    kept[k] = true;
  }
  if (!feasible(polytope).feasible()) return infeasible_polytope(keep.size());

  std::vector<LinearConstraint> rows = polytope.rows();
  if (!tidy(rows)) return infeasible_polytope(keep.size());

  // Substitute equalities into every other row for each eliminated variable.
  while (true) {
    std::size_t eq_index = rows.size();
    std::size_t var = dim;
    for (std::size_t i = 0; i < rows.size() && eq_index == rows.size(); ++i) {
      if (!rows[i].is_equality()) continue;
      // prefer a unit coefficient to keep numbers small
      for (std::size_t v = 0; v < dim; ++v) {
        if (kept[v] || rows[i].coeffs[v] == 0) continue;
        if (var == dim || boost::multiprecision::abs(rows[i].coeffs[v]) == 1) {
          var = v;
          eq_index = i;
          if (boost::multiprecision::abs(rows[i].coeffs[v]) == 1) break;
        }
      }
    }
    if (eq_index == rows.size()) break;
    LinearConstraint eqn = rows[eq_index];
    if (eqn.coeffs[var] < 0) {
      for (auto& c : eqn.coeffs) c = -c;
      eqn.bound = -eqn.bound;
    }
    std::vector<LinearConstraint> next;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == eq_index) continue;
      if (rows[i].coeffs[var] == 0) {
        next.push_back(std::move(rows[i]));
      } else {
        next.push_back(eliminate_with(rows[i], eqn, var));
      }
    }
    rows = std::move(next);
    if (!tidy(rows)) return infeasible_polytope(keep.size());
  }

  if (options.prune) {
    HPolytope pruned = prune(dim, rows, true);
    rows = pruned.rows();
  }

  while (true) {
    // Pick the variable whose elimination creates the fewest rows.
    std::size_t best_var = dim;
    std::size_t best_size = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      if (kept[v]) continue;
      std::size_t pos = 0, neg = 0, zero = 0;
      for (const auto& r : rows) {
        if (r.coeffs[v] > 0) {
          ++pos;
        } else if (r.coeffs[v] < 0) {
          ++neg;
        } else {
          ++zero;
        }
      }
      if (pos + neg == 0) continue;
      std::size_t size = zero + pos * neg;
      if (best_var == dim || size < best_size) {
        best_var = v;
        best_size = size;
      }
    }
    if (best_var == dim) break;
    if (best_size > options.row_cap) {
      throw Error(Errc::DimensionOverflow, "eliminating a variable would create " +
                                               std::to_string(best_size) + " rows (cap " +
                                               std::to_string(options.row_cap) + ")");
    }
    const std::size_t v = best_var;
    std::vector<LinearConstraint> next;
    std::vector<const LinearConstraint*> pos, neg;
    for (const auto& r : rows) {
      if (r.coeffs[v] > 0) {
        pos.push_back(&r);
      } else if (r.coeffs[v] < 0) {
        neg.push_back(&r);
      } else {
        next.push_back(r);
      }
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        Integer a = p->coeffs[v];
        Integer b = -q->coeffs[v];
        LinearConstraint r;
        r.kind = Relation::LessEqual;
        r.coeffs.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) r.coeffs[j] = b * p->coeffs[j] + a * q->coeffs[j];
        r.bound = b * p->bound + a * q->bound;
        next.push_back(std::move(r));
      }
    }
    if (!tidy(next)) return infeasible_polytope(keep.size());
    rows = std::move(next);
    if (options.prune) {
      HPolytope pruned = prune(dim, rows, true);
      rows = pruned.rows();
    }
  }

  HPolytope out(keep.size());
  for (const auto& r : rows) {
    std::vector<Integer> coeffs(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) coeffs[t] = r.coeffs[keep[t]];
    out.add({std::move(coeffs), r.bound, r.kind});
  }
  return out;
}

}  // namespace nok

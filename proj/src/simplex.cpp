#include "nok/lp.hpp"

#include "nok/error.hpp"

#include <iostream>

namespace nok {

namespace {

thread_local int lp_verbosity = 0;

// x = origin + basis * y, y free. Solves the equality rows exactly.
struct AffineParam {
  bool consistent = true;
  std::vector<Rational> origin;                 // D
  std::vector<std::vector<Rational>> basis;     // D x p
  std::size_t free_count = 0;
};

AffineParam parametrize_equalities(const HPolytope& polytope) {
  const std::size_t dim = polytope.dim();
  std::vector<std::vector<Rational>> m;  // rows: coeffs..., rhs
  for (const auto& row : polytope.rows()) {
    if (!row.is_equality()) continue;
    std::vector<Rational> r(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) r[j] = Rational(row.coeffs[j]);
    r[dim] = Rational(row.bound);
    m.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = 1 / m[rank][col];
    for (std::size_t c = col; c <= dim; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= dim; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  AffineParam out;
  for (std::size_t r = rank; r < m.size(); ++r) {
    if (m[r][dim] != 0) {
      out.consistent = false;
      return out;
    }
  }
  std::vector<long> free_index(dim, -1);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t j = 0; j < dim; ++j) {
    if (!is_pivot[j]) free_index[j] = static_cast<long>(out.free_count++);
  }
  out.origin.assign(dim, Rational(0));
  out.basis.assign(dim, std::vector<Rational>(out.free_count, Rational(0)));
  for (std::size_t j = 0; j < dim; ++j) {
    if (!is_pivot[j]) out.basis[j][static_cast<std::size_t>(free_index[j])] = 1;
  }
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t pc = pivot_col[r];
    out.origin[pc] = m[r][dim];
    for (std::size_t j = 0; j < dim; ++j) {
      if (is_pivot[j] || m[r][j] == 0) continue;
      out.basis[pc][static_cast<std::size_t>(free_index[j])] = -m[r][j];
    }
  }
  return out;
}

// Dictionary form: basic[i] = constant[i] + sum_j coef[i][j] * nonbasic[j].
// Variable ids: [0, p) free structurals, [p, p+m) slacks, p+m auxiliary.
class Dictionary {
 public:
  Dictionary(const std::vector<std::vector<Rational>>& lhs, const std::vector<Rational>& rhs,
             std::size_t free_count)
      : free_count_(free_count), row_count_(lhs.size()) {
    for (std::size_t j = 0; j < free_count; ++j) nonbasic_.push_back(j);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      basic_.push_back(free_count + i);
      constant_.push_back(rhs[i]);
      std::vector<Rational> row(free_count);
      for (std::size_t j = 0; j < free_count; ++j) row[j] = -lhs[i][j];
      coef_.push_back(std::move(row));
    }
  }

  bool is_free(std::size_t var) const { return var < free_count_; }
  std::size_t aux_id() const { return free_count_ + row_count_; }

  // Moves free structurals into the basis. Columns with no constrained row
  // to pivot on stay nonbasic and are recorded as unconstrained.
  void pivot_in_free_variables() {
    for (std::size_t e = 0; e < nonbasic_.size(); ++e) {
      if (!is_free(nonbasic_[e])) continue;
      std::size_t r = row_count();
      for (std::size_t i = 0; i < basic_.size(); ++i) {
        if (!is_free(basic_[i]) && coef_[i][e] != 0) {
          r = i;
          break;
        }
      }
      if (r == row_count()) continue;
      pivot(r, e);
    }
  }

  std::size_t row_count() const { return basic_.size(); }

  bool constrained(std::size_t row) const { return !is_free(basic_[row]); }

  bool needs_phase_one() const {
    for (std::size_t i = 0; i < row_count(); ++i) {
      if (constrained(i) && constant_[i] < 0) return true;
    }
    return false;
  }

  // Returns false if infeasible.
  bool phase_one() {
    if (!needs_phase_one()) return true;
    std::size_t aux_col = nonbasic_.size();
    nonbasic_.push_back(aux_id());
    for (std::size_t i = 0; i < row_count(); ++i) {
      coef_[i].push_back(constrained(i) ? Rational(1) : Rational(0));
    }
    objective_.assign(nonbasic_.size(), Rational(0));
    objective_[aux_col] = -1;
    objective_constant_ = 0;
    std::size_t leave = row_count();
    for (std::size_t i = 0; i < row_count(); ++i) {
      if (!constrained(i)) continue;
      if (leave == row_count() || constant_[i] < constant_[leave] ||
          (constant_[i] == constant_[leave] && basic_[i] < basic_[leave])) {
        leave = i;
      }
    }
    pivot(leave, aux_col);
    if (run() != LpStatus::Feasible) return false;  // bounded by 0, cannot happen
    if (objective_constant_ < 0) return false;
    // Drive the auxiliary variable out of the basis if it stayed there at 0.
    for (std::size_t i = 0; i < row_count(); ++i) {
      if (basic_[i] != aux_id()) continue;
      std::size_t col = nonbasic_.size();
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (coef_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == nonbasic_.size()) {
        erase_row(i);
      } else {
        pivot(i, col);
      }
      break;
    }
    for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
      if (nonbasic_[j] == aux_id()) {
        erase_column(j);
        break;
      }
    }
    return true;
  }

  // Objective over structurals y: value = c0 + c.y
  void set_objective(const std::vector<Rational>& c, const Rational& c0) {
    objective_.assign(nonbasic_.size(), Rational(0));
    objective_constant_ = c0;
    for (std::size_t v = 0; v < free_count_; ++v) {
      if (c[v] == 0) continue;
      bool found = false;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (nonbasic_[j] == v) {
          objective_[j] += c[v];
          found = true;
          break;
        }
      }
      if (found) continue;
      for (std::size_t i = 0; i < row_count(); ++i) {
        if (basic_[i] != v) continue;
        objective_constant_ += c[v] * constant_[i];
        for (std::size_t j = 0; j < nonbasic_.size(); ++j) objective_[j] += c[v] * coef_[i][j];
        break;
      }
    }
  }

  // Bland's rule simplex on the current objective.
  LpStatus run() {
    while (true) {
      std::size_t enter = nonbasic_.size();
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (objective_[j] == 0) continue;
        if (is_free(nonbasic_[j])) return LpStatus::Unbounded;  // unconstrained direction
        if (objective_[j] > 0 && (enter == nonbasic_.size() || nonbasic_[j] < nonbasic_[enter])) {
          enter = j;
        }
      }
      if (enter == nonbasic_.size()) return LpStatus::Feasible;
      std::size_t leave = row_count();
      Rational best;
      for (std::size_t i = 0; i < row_count(); ++i) {
        if (!constrained(i) || coef_[i][enter] >= 0) continue;
        Rational ratio = constant_[i] / -coef_[i][enter];
        if (leave == row_count() || ratio < best ||
            (ratio == best && basic_[i] < basic_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == row_count()) return LpStatus::Unbounded;
      if (lp_verbosity > 0) {
        std::cerr << "[lp] pivot enter=" << nonbasic_[enter] << " leave=" << basic_[leave]
                  << " objective=" << objective_constant_ << "\n";
      }
      pivot(leave, enter);
    }
  }

  Rational objective_value() const { return objective_constant_; }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> y(free_count_, Rational(0));
    for (std::size_t i = 0; i < row_count(); ++i) {
      if (basic_[i] < free_count_) y[basic_[i]] = constant_[i];
    }
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    Rational a = coef_[r][e];
    Rational inv = 1 / a;
    auto& row = coef_[r];
    constant_[r] = -constant_[r] * inv;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == e) continue;
      if (row[j] != 0) row[j] = -row[j] * inv;
    }
    row[e] = inv;
    auto substitute = [&](std::vector<Rational>& target, Rational& target_const) {
      Rational f = target[e];
      if (f == 0) return;
      target_const += f * constant_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j == e) continue;
        if (row[j] != 0) target[j] += f * row[j];
      }
      target[e] = f * row[e];
    };
    for (std::size_t i = 0; i < row_count(); ++i) {
      if (i != r) substitute(coef_[i], constant_[i]);
    }
    if (!objective_.empty()) substitute(objective_, objective_constant_);
    std::swap(basic_[r], nonbasic_[e]);
  }

  void erase_row(std::size_t i) {
    basic_.erase(basic_.begin() + static_cast<long>(i));
    constant_.erase(constant_.begin() + static_cast<long>(i));
    coef_.erase(coef_.begin() + static_cast<long>(i));
  }

  void erase_column(std::size_t j) {
    nonbasic_.erase(nonbasic_.begin() + static_cast<long>(j));
    for (auto& row : coef_) row.erase(row.begin() + static_cast<long>(j));
    if (!objective_.empty()) objective_.erase(objective_.begin() + static_cast<long>(j));
  }

  std::size_t free_count_;
  std::size_t row_count_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> constant_;
  std::vector<Rational> objective_;
  Rational objective_constant_ = 0;
};

LpOutcome solve(const HPolytope& polytope, std::span<const Integer> objective, bool optimize) {
  const std::size_t dim = polytope.dim();
  LpOutcome out;
  AffineParam param = parametrize_equalities(polytope);
  if (!param.consistent) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  const std::size_t p = param.free_count;
  std::vector<std::vector<Rational>> lhs;
  std::vector<Rational> rhs;
  for (const auto& row : polytope.rows()) {
    if (row.is_equality()) continue;
    std::vector<Rational> g(p, Rational(0));
    Rational h = Rational(row.bound);
    for (std::size_t k = 0; k < dim; ++k) {
      if (row.coeffs[k] == 0) continue;
      Rational a(row.coeffs[k]);
      h -= a * param.origin[k];
      for (std::size_t j = 0; j < p; ++j) {
        if (param.basis[k][j] != 0) g[j] += a * param.basis[k][j];
      }
    }
    bool zero = true;
    for (const auto& v : g) {
      if (v != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      if (h < 0) {
        out.status = LpStatus::Infeasible;
        return out;
      }
      continue;
    }
    lhs.push_back(std::move(g));
    rhs.push_back(std::move(h));
  }
  Dictionary dict(lhs, rhs, p);
  dict.pivot_in_free_variables();
  if (!dict.phase_one()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  std::vector<Rational> c(p, Rational(0));
  Rational c0 = 0;
  if (optimize) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (objective[k] == 0) continue;
      Rational a(objective[k]);
      c0 += a * param.origin[k];
      for (std::size_t j = 0; j < p; ++j) {
        if (param.basis[k][j] != 0) c[j] += a * param.basis[k][j];
      }
    }
  }
  dict.set_objective(c, c0);
  LpStatus status = dict.run();
  if (status == LpStatus::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  std::vector<Rational> y = dict.structural_values();
  std::vector<Rational> x(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Rational v = param.origin[k];
    for (std::size_t j = 0; j < p; ++j) {
      if (param.basis[k][j] != 0) v += param.basis[k][j] * y[j];
    }
    x[k] = std::move(v);
  }
  out.status = LpStatus::Feasible;
  if (optimize) out.optimum = dict.objective_value();
  out.witness = std::move(x);
  return out;
}

}  // namespace

void set_lp_verbosity(int level) { lp_verbosity = level; }

LpOutcome feasible(const HPolytope& polytope) { return solve(polytope, {}, false); }

LpOutcome maximize(std::span<const Integer> objective, const HPolytope& polytope) {
  if (objective.size() != polytope.dim()) {
    throw Error(Errc::SizeMismatch, "objective dimension mismatch");
  }
  return solve(polytope, objective, true);
}

LpOutcome minimize(std::span<const Integer> objective, const HPolytope& polytope) {
  std::vector<Integer> neg(objective.begin(), objective.end());
  for (auto& c : neg) c = -c;
  LpOutcome out = maximize(neg, polytope);
  if (out.optimum) out.optimum = -*out.optimum;
  return out;
}

}  // namespace nok

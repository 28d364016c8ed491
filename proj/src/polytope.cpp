#include "nok/polytope.hpp"

#include "nok/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nok {

namespace {

Integer row_gcd(const std::vector<Integer>& coeffs) {
  Integer g = 0;
  for (const auto& c : coeffs) {
    if (c != 0) g = boost::multiprecision::gcd(g, c);
  }
  return boost::multiprecision::abs(g);
}

// Orientation for equalities so that a.x = b and -a.x = -b coincide.
void orient_equality(LinearConstraint& row) {
  for (const auto& c : row.coeffs) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : row.coeffs) x = -x;
      row.bound = -row.bound;
    }
    return;
  }
}

bool row_less(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.kind != b.kind) return a.kind == Relation::Equal;
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.bound < b.bound;
}

}  // namespace

bool LinearConstraint::is_zero_row() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

Rational LinearConstraint::evaluate(std::span<const Rational> point) const {
  Rational s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) s += Rational(coeffs[j]) * point[j];
  }
  return s;
}

bool LinearConstraint::satisfied_by(std::span<const Rational> point) const {
  Rational s = evaluate(point);
  return is_equality() ? s == Rational(bound) : s <= Rational(bound);
}

bool LinearConstraint::satisfied_by(std::span<const Integer> point) const {
  Integer s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) s += coeffs[j] * point[j];
  }
  return is_equality() ? s == bound : s <= bound;
}

LinearConstraint le(std::vector<Integer> coeffs, Integer bound) {
  return {std::move(coeffs), std::move(bound), Relation::LessEqual};
}

LinearConstraint eq(std::vector<Integer> coeffs, Integer bound) {
  return {std::move(coeffs), std::move(bound), Relation::Equal};
}

HPolytope::HPolytope(std::size_t dim, std::vector<LinearConstraint> rows) : dim_(dim) {
  for (auto& r : rows) add(std::move(r));
}

void HPolytope::add(LinearConstraint row) {
  if (row.coeffs.size() != dim_) {
    throw Error(Errc::SizeMismatch, "constraint has " + std::to_string(row.coeffs.size()) +
                                        " coefficients, polytope dimension is " +
                                        std::to_string(dim_));
  }
  rows_.push_back(std::move(row));
}

void HPolytope::add_le(std::vector<Integer> coeffs, Integer bound) {
  add(le(std::move(coeffs), std::move(bound)));
}

void HPolytope::add_eq(std::vector<Integer> coeffs, Integer bound) {
  add(eq(std::move(coeffs), std::move(bound)));
}

std::vector<LinearConstraint> HPolytope::inequalities() const {
  std::vector<LinearConstraint> out;
  for (const auto& r : rows_) {
    if (!r.is_equality()) out.push_back(r);
  }
  return out;
}

std::vector<LinearConstraint> HPolytope::equalities() const {
  std::vector<LinearConstraint> out;
  for (const auto& r : rows_) {
    if (r.is_equality()) out.push_back(r);
  }
  return out;
}

std::size_t HPolytope::inequality_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [](const auto& r) { return !r.is_equality(); }));
}

std::size_t HPolytope::equality_count() const { return rows_.size() - inequality_count(); }

bool HPolytope::contains(std::span<const Rational> point) const {
  if (point.size() != dim_) throw Error(Errc::SizeMismatch, "point dimension mismatch");
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const LinearConstraint& r) { return r.satisfied_by(point); });
}

bool HPolytope::contains(std::span<const Integer> point) const {
  if (point.size() != dim_) throw Error(Errc::SizeMismatch, "point dimension mismatch");
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const LinearConstraint& r) { return r.satisfied_by(point); });
}

bool HPolytope::is_infeasible_marker() const {
  return rows_.size() == 1 && !rows_[0].is_equality() && rows_[0].is_zero_row() &&
         rows_[0].bound == -1;
}

HPolytope infeasible_polytope(std::size_t dim) {
  HPolytope p(dim);
  p.add_le(std::vector<Integer>(dim, 0), -1);
  return p;
}

LinearConstraint reduce_exact(LinearConstraint row) {
  Integer g = row_gcd(row.coeffs);
  if (g == 0) return row;
  g = boost::multiprecision::gcd(g, row.bound);
  if (g > 1) {
    for (auto& c : row.coeffs) c /= g;
    row.bound /= g;
  }
  if (row.is_equality()) orient_equality(row);
  return row;
}

HPolytope normalize(const HPolytope& polytope) {
  HPolytope out(polytope.dim());
  std::vector<LinearConstraint> kept;
  for (auto row : polytope.rows()) {
    Integer g = row_gcd(row.coeffs);
    if (g == 0) {
      bool ok = row.is_equality() ? row.bound == 0 : row.bound >= 0;
      if (!ok) return infeasible_polytope(polytope.dim());
      continue;
    }
    if (row.is_equality()) {
      if (row.bound % g != 0) return infeasible_polytope(polytope.dim());
      for (auto& c : row.coeffs) c /= g;
      row.bound /= g;
      orient_equality(row);
    } else {
      for (auto& c : row.coeffs) c /= g;
      row.bound = floor_of(Rational(row.bound, g));
    }
    kept.push_back(std::move(row));
  }
  // Among inequalities with equal left-hand sides only the tightest matters.
  std::vector<LinearConstraint> dedup;
  for (auto& row : kept) {
    auto it = std::find_if(dedup.begin(), dedup.end(), [&](const LinearConstraint& o) {
      return o.kind == row.kind && o.coeffs == row.coeffs;
    });
    if (it == dedup.end()) {
      dedup.push_back(std::move(row));
    } else if (row.is_equality()) {
      if (it->bound != row.bound) return infeasible_polytope(polytope.dim());
    } else if (row.bound < it->bound) {
      it->bound = row.bound;
    }
  }
  for (auto& row : dedup) out.add(std::move(row));
  return out;
}

HPolytope canonical_form(const HPolytope& polytope) {
  HPolytope n = normalize(polytope);
  auto rows = n.rows();
  std::sort(rows.begin(), rows.end(), row_less);
  return HPolytope(polytope.dim(), std::move(rows));
}

HPolytope dilate(const HPolytope& polytope, const Rational& k) {
  if (k < 0) throw Error(Errc::IndexOutOfRange, "dilation factor must be nonnegative");
  if (k == 1) return polytope;
  Integer num = boost::multiprecision::numerator(k);
  Integer den = boost::multiprecision::denominator(k);
  HPolytope out(polytope.dim());
  for (const auto& row : polytope.rows()) {
    LinearConstraint r = row;
    if (den != 1) {
      for (auto& c : r.coeffs) c *= den;
    }
    r.bound *= num;
    out.add(reduce_exact(std::move(r)));
  }
  return out;
}

HPolytope coordinate_embed(const HPolytope& polytope, std::size_t target_dim,
                           std::span<const std::size_t> placement) {
  if (placement.size() != polytope.dim()) {
    throw Error(Errc::SizeMismatch, "placement must list one target per source coordinate");
  }
  std::vector<bool> used(target_dim, false);
  for (auto t : placement) {
    if (t >= target_dim || used[t]) {
      throw Error(Errc::PlacementNotInjective,
                  "target index " + std::to_string(t) + " out of range or reused");
    }
    used[t] = true;
  }
  HPolytope out(target_dim);
  for (const auto& row : polytope.rows()) {
    std::vector<Integer> coeffs(target_dim, 0);
    for (std::size_t j = 0; j < placement.size(); ++j) coeffs[placement[j]] = row.coeffs[j];
    out.add({std::move(coeffs), row.bound, row.kind});
  }
  for (std::size_t t = 0; t < target_dim; ++t) {
    if (used[t]) continue;
    std::vector<Integer> coeffs(target_dim, 0);
    coeffs[t] = 1;
    out.add_eq(std::move(coeffs), 0);
  }
  return out;
}

HPolytope product(const HPolytope& first, const HPolytope& second) {
  std::size_t dim = first.dim() + second.dim();
  HPolytope out(dim);
  for (const auto& row : first.rows()) {
    std::vector<Integer> coeffs(dim, 0);
    std::copy(row.coeffs.begin(), row.coeffs.end(), coeffs.begin());
    out.add({std::move(coeffs), row.bound, row.kind});
  }
  for (const auto& row : second.rows()) {
    std::vector<Integer> coeffs(dim, 0);
    std::copy(row.coeffs.begin(), row.coeffs.end(), coeffs.begin() + first.dim());
    out.add({std::move(coeffs), row.bound, row.kind});
  }
  return out;
}

HPolytope pin_coordinate(const HPolytope& polytope, std::size_t index, const Integer& value) {
  HPolytope out = polytope;
  std::vector<Integer> coeffs(polytope.dim(), 0);
  coeffs.at(index) = 1;
  out.add_eq(std::move(coeffs), value);
  return out;
}

std::size_t equality_rank(const HPolytope& polytope) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : polytope.rows()) {
    if (!r.is_equality()) continue;
    m.emplace_back(r.coeffs.begin(), r.coeffs.end());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < polytope.dim() && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < polytope.dim(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::string describe(const LinearConstraint& row, std::span<const std::string> labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    const Integer& c = row.coeffs[j];
    if (c == 0) continue;
    std::string name = j < labels.size() ? labels[j] : "x" + std::to_string(j + 1);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Integer a = boost::multiprecision::abs(c);
    if (a != 1) os << a << "*";
    os << name;
    first = false;
  }
  if (first) os << "0";
  os << (row.is_equality() ? " = " : " <= ") << row.bound;
  return os.str();
}

}  // namespace nok

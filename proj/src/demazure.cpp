#include "nok/demazure.hpp"

#include "nok/error.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace nok {

LaurentPolynomial LaurentPolynomial::monomial(Exponent exponent, Integer coeff) {
  LaurentPolynomial p(exponent.size());
  p.add_term(exponent, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, Integer value) {
  return monomial(Exponent(variables, 0), std::move(value));
}

void LaurentPolynomial::add_term(const Exponent& exponent, const Integer& coeff) {
  if (exponent.size() != n_) throw Error(Errc::SizeMismatch, "exponent length");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPolynomial::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  if (shift.size() != n_) throw Error(Errc::SizeMismatch, "shift length");
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t j = 0; j < n_; ++j) f[j] += shift[j];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::swapped(std::size_t i) const {
  if (i < 1 || i >= n_) throw Error(Errc::IndexOutOfRange, "swap index " + std::to_string(i));
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.n_ != n_) throw Error(Errc::SizeMismatch, "variable count");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.n_ != b.n_) throw Error(Errc::SizeMismatch, "variable count");
  LaurentPolynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial demazure_op(std::size_t i, const LaurentPolynomial& f) {
  const std::size_t n = f.variables();
  if (i < 1 || i >= n) {
    throw Error(Errc::IndexOutOfRange, "T_" + std::to_string(i) + " needs 1 <= i <= " +
                                           std::to_string(n == 0 ? 0 : n - 1));
  }
  const std::size_t a_idx = i - 1, b_idx = i;
  LaurentPolynomial out(n);
  for (const auto& [mu, c] : f.terms()) {
    const std::int64_t a = mu[a_idx] - mu[b_idx];
    Exponent e = mu;
    if (a >= 0) {
      for (std::int64_t t = 0; t <= a; ++t) {
        e[a_idx] = mu[a_idx] - t;
        e[b_idx] = mu[b_idx] + t;
        out.add_term(e, c);
      }
    } else if (a <= -2) {
      Integer neg = -c;
      for (std::int64_t t = 1; t <= -a - 1; ++t) {
        e[a_idx] = mu[a_idx] + t;
        e[b_idx] = mu[b_idx] - t;
        out.add_term(e, neg);
      }
    }
  }
  return out;
}

LaurentPolynomial apply_word(const std::vector<std::size_t>& word, const LaurentPolynomial& f) {
  LaurentPolynomial out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_op(*it, out);
  return out;
}

LaurentPolynomial evaluate_chain(std::size_t variables, const std::vector<ChainStage>& stages) {
  LaurentPolynomial f = LaurentPolynomial::constant(variables, 1);
  for (const auto& stage : stages) f = apply_word(stage.word, f.shifted(stage.weight));
  return f;
}

std::vector<ChainStage> gdc_stages(const BundleSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<ChainStage> stages;
  for (std::size_t i = 1; i < n; ++i) {
    ChainStage stage;
    stage.weight = pad_weight(spec.factor(i), n);
    for (std::size_t s = n - i; s >= 1; --s) stage.word.push_back(s);
    stages.push_back(std::move(stage));
  }
  return stages;
}

CharacterReport gdc(const BundleSpec& spec) {
  CharacterReport report{evaluate_chain(spec.n(), gdc_stages(spec)), 0};
  report.dimension = report.polynomial.evaluate_at_one();
  return report;
}

namespace {

// Rows of a Gelfand-Tsetlin pattern, top row first; row r has m - r entries.
void gt_walk(std::vector<std::vector<std::int64_t>>& rows, std::size_t m,
             std::vector<std::int64_t>& row_sums, std::size_t variables, LaurentPolynomial& out) {
  const std::size_t r = rows.size();
  if (r == m) {
    // mu_j = |row of length j| - |row of length j-1|; the row of length j is rows[m-j].
    Exponent mu(variables, 0);
    for (std::size_t j = 1; j <= m; ++j) {
      std::int64_t upper = row_sums[m - j];
      std::int64_t lower = j == 1 ? 0 : row_sums[m - j + 1];
      mu[j - 1] = upper - lower;
    }
    out.add_term(mu, 1);
    return;
  }
  const std::vector<std::int64_t> prev = rows.back();
  std::vector<std::int64_t> row(m - r);
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t j, std::int64_t sum) {
    if (j == row.size()) {
      rows.push_back(row);
      row_sums.push_back(sum);
      gt_walk(rows, m, row_sums, variables, out);
      rows.pop_back();
      row_sums.pop_back();
      return;
    }
    for (std::int64_t v = prev[j + 1]; v <= prev[j]; ++v) {
      row[j] = v;
      fill(j + 1, sum + v);
    }
  };
  fill(0, 0);
}

}  // namespace

LaurentPolynomial schur(const Weight& weight, std::size_t variables) {
  const std::size_t m = weight.size();
  if (variables < m) throw Error(Errc::SizeMismatch, "schur needs at least as many variables");
  // Shift to nonnegative entries, enumerate, then multiply back by (x_1...x_m)^shift.
  const std::int64_t shift = weight[m - 1];
  std::vector<std::int64_t> top(m);
  for (std::size_t j = 0; j < m; ++j) top[j] = weight[j] - shift;
  std::vector<std::vector<std::int64_t>> rows{top};
  std::vector<std::int64_t> sums{std::accumulate(top.begin(), top.end(), std::int64_t{0})};
  LaurentPolynomial out(variables);
  gt_walk(rows, m, sums, variables, out);
  Exponent back(variables, 0);
  for (std::size_t j = 0; j < m; ++j) back[j] = shift;
  return out.shifted(back);
}

Integer weyl_dim(const Weight& weight) {
  Rational r = 1;
  const std::size_t m = weight.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      r *= Rational(weight[i] - weight[j] + static_cast<std::int64_t>(j - i),
                    static_cast<std::int64_t>(j - i));
    }
  }
  if (!is_integer(r)) throw std::logic_error("Weyl dimension not integral");
  return boost::multiprecision::numerator(r);
}

}  // namespace nok

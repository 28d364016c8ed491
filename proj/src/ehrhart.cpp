#include "nok/error.hpp"
#include "nok/lattice.hpp"

namespace nok {

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {}

std::size_t EhrhartPolynomial::degree() const noexcept {
  for (std::size_t i = coefficients_.size(); i > 0; --i) {
    if (coefficients_[i - 1] != 0) return i - 1;
  }
  return 0;
}

Rational EhrhartPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational EhrhartPolynomial::operator()(const Rational& k) const {
  Rational acc = 0;
  for (std::size_t i = coefficients_.size(); i > 0; --i) acc = acc * k + coefficients_[i - 1];
  return acc;
}

bool operator==(const EhrhartPolynomial& a, const EhrhartPolynomial& b) {
  std::size_t n = std::max(a.coefficients_.size(), b.coefficients_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coefficient(i) != b.coefficient(i)) return false;
  }
  return true;
}

EhrhartPolynomial interpolate(std::span<const Integer> values) {
  // Newton forward differences: f(k) = sum_i diff_i * C(k, i).
  const std::size_t n = values.size();
  std::vector<Rational> diff(values.begin(), values.end());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = n - 1; j >= i; --j) diff[j] -= diff[j - 1];
  }
  std::vector<Rational> coeffs(n, Rational(0));
  // basis holds the monomial coefficients of C(k, i).
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += diff[i] * basis[t];
    // C(k, i+1) = C(k, i) * (k - i) / (i + 1)
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t t = 0; t < basis.size(); ++t) {
      next[t + 1] += basis[t];
      next[t] -= basis[t] * static_cast<long>(i);
    }
    for (auto& c : next) c /= static_cast<long>(i + 1);
    basis = std::move(next);
  }
  return EhrhartPolynomial(std::move(coeffs));
}

EhrhartPolynomial fit_with_holdouts(std::span<const Integer> values, std::size_t degree) {
  if (values.size() < degree + 3) {
    throw Error(Errc::SizeMismatch, "need counts at k = 0.." + std::to_string(degree + 2));
  }
  EhrhartPolynomial poly = interpolate(values.subspan(0, degree + 1));
  for (std::size_t k = degree + 1; k < values.size(); ++k) {
    Rational predicted = poly(Rational(static_cast<long>(k)));
    if (predicted != Rational(values[k])) {
      throw Error(Errc::InterpolationMismatch,
                  "k=" + std::to_string(k) + ": interpolated " + to_string(predicted) +
                      ", counted " + values[k].str());
    }
  }
  return poly;
}

std::size_t expected_degree(const HPolytope& polytope) {
  return polytope.dim() - equality_rank(polytope);
}

EhrhartPolynomial ehrhart(const HPolytope& polytope, std::size_t degree, CountOptions options) {
  std::vector<Integer> counts;
  try {
    ProjectionChain chain(polytope, options.projection);
    for (std::size_t k = 0; k <= degree + 2; ++k) {
      counts.push_back(chain.count(static_cast<std::int64_t>(k), options.parallel));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::DimensionOverflow) throw;
    counts.clear();
    for (std::size_t k = 0; k <= degree + 2; ++k) {
      counts.push_back(
          count_by_box_scan(dilate(polytope, Rational(static_cast<long>(k))), options.parallel));
    }
  }
  return fit_with_holdouts(counts, degree);
}

Rational normalized_volume(const HPolytope& polytope, std::size_t degree, CountOptions options) {
  EhrhartPolynomial poly = ehrhart(polytope, degree, options);
  return Rational(factorial(static_cast<unsigned>(degree))) * poly.coefficient(degree);
}

}  // namespace nok

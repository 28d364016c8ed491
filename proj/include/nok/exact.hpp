#pragma once

/**
 * Exact scalars and the weight data model.
 *
 * Integer and Rational are GMP-backed. mpq_rational canonicalizes after every
 * operation, so a Rational is always in lowest terms with a positive
 * denominator.
 *
 * A Weight is a dominant integral weight of GL_m (non-increasing entries). A
 * BundleSpec (L_1, ..., L_{n-1}) describes a semiample line bundle on the
 * Bott-Samelson resolution of GL_n/B for the word (s1)(s2 s1)...(s_{n-1}...s1);
 * factor i is a GL_{n-i+1} weight.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nok {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Renders as "p/q" (q > 0, lowest terms); integers render as "p/1".
std::string to_string(const Rational& value);
/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
bool is_integer(const Rational& value);
Integer factorial(unsigned k);

class Weight {
 public:
  Weight() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_zero() const;
  /// Strictly decreasing entries.
  bool is_strictly_dominant() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  explicit Weight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  friend Weight make_weight(std::span<const std::int64_t> entries);

  std::vector<std::int64_t> entries_;
};

/// Throws Errc::DominanceViolation unless entries are non-increasing.
Weight make_weight(std::span<const std::int64_t> entries);
Weight make_weight(std::initializer_list<std::int64_t> entries);
Weight zero_weight(std::size_t size);

/// (l1, ..., lm, 0, ..., 0) of length n.
std::vector<std::int64_t> pad_weight(const Weight& weight, std::size_t n);

class BundleSpec {
 public:
  BundleSpec() = default;

  std::size_t n() const noexcept { return n_; }
  /// Factor index i is 1-based, 1 <= i <= n-1.
  const Weight& factor(std::size_t i) const { return weights_.at(i - 1); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

 private:
  BundleSpec(std::size_t n, std::vector<Weight> weights) : n_(n), weights_(std::move(weights)) {}
  friend BundleSpec make_bundle_spec(std::size_t n, std::vector<Weight> weights);

  std::size_t n_ = 0;
  std::vector<Weight> weights_;
};

/// Requires n >= 2, exactly n-1 weights, weights[i-1].size() == n-i+1.
BundleSpec make_bundle_spec(std::size_t n, std::vector<Weight> weights);

BundleSpec scale_spec(const BundleSpec& spec, std::int64_t k);

/// Parses "1,0,-1" into a weight.
Weight parse_weight(std::string_view text);
/// Parses "1,0,-1;1,0" into a bundle spec for GL_n.
BundleSpec parse_weights(std::size_t n, std::string_view text);

}  // namespace nok

#pragma once

/**
 * Characters as Laurent polynomials in x_1..x_n, Demazure operators, and the
 * generalized Demazure character
 *
 *   T_1 e^{L_{n-1}} (T_2 T_1) e^{L_{n-2}} ... e^{L_2} (T_{n-1} ... T_1) e^{L_1}
 *
 * of a bundle spec, evaluated innermost first. Operator words compose right to
 * left: (T_2 T_1) f applies T_1 first.
 *
 * schur() and weyl_dim() are independent oracles built from Gelfand-Tsetlin
 * patterns and the Weyl dimension formula; they share no code with
 * demazure_op().
 */

#include "nok/exact.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace nok {

using Exponent = std::vector<std::int64_t>;

class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t variables = 0) : n_(variables) {}

  static LaurentPolynomial monomial(Exponent exponent, Integer coeff = 1);
  static LaurentPolynomial constant(std::size_t variables, Integer value);

  std::size_t variables() const noexcept { return n_; }
  /// Nonzero terms, exponents in lexicographic order.
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& exponent, const Integer& coeff);
  Integer coefficient(const Exponent& exponent) const;

  /// Value at x_1 = ... = x_n = 1.
  Integer evaluate_at_one() const;
  /// Product with x^shift.
  LaurentPolynomial shifted(const Exponent& shift) const;
  /// Exchanges exponents i and i+1 (1-based i).
  LaurentPolynomial swapped(std::size_t i) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::size_t n_;
  std::map<Exponent, Integer> terms_;
};

struct CharacterReport {
  LaurentPolynomial polynomial;
  Integer dimension;
};

/// Isobaric divided difference T_i (1-based) applied term by term:
/// with a = mu_i - mu_{i+1}, x^mu goes to sum_{t=0}^{a} x^{mu - t(e_i - e_{i+1})}
/// for a >= 0, to 0 for a = -1, and to -sum_{t=1}^{-a-1} x^{mu + t(e_i - e_{i+1})}
/// for a <= -2. Throws IndexOutOfRange unless 1 <= i <= n-1.
LaurentPolynomial demazure_op(std::size_t i, const LaurentPolynomial& f);

/// Applies a word of operators written left to right (rightmost first).
LaurentPolynomial apply_word(const std::vector<std::size_t>& word, const LaurentPolynomial& f);

/// One stage of a nested chain: multiply by x^weight, then apply the word.
struct ChainStage {
  Exponent weight;
  std::vector<std::size_t> word;
};

/// Stages are applied in order starting from the constant 1.
LaurentPolynomial evaluate_chain(std::size_t variables, const std::vector<ChainStage>& stages);

/// Stages of the generalized Demazure character for a bundle spec: factor i
/// contributes x^{pad(L_i)} followed by the word T_{n-i} ... T_1.
std::vector<ChainStage> gdc_stages(const BundleSpec& spec);

CharacterReport gdc(const BundleSpec& spec);

/// Character of the GL_m irrep with highest weight `weight` in n >= m
/// variables, summed over Gelfand-Tsetlin patterns.
LaurentPolynomial schur(const Weight& weight, std::size_t variables);

/// prod_{i<j} (l_i - l_j + j - i) / (j - i).
Integer weyl_dim(const Weight& weight);

}  // namespace nok

#pragma once

// Exact integer/rational arithmetic used by every other part of hofq:
// polynomial binomial coefficients, finite differences, Newton interpolation.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hofq {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(x, k) = x(x-1)...(x-k+1)/k!, defined for every integer x (so C(-1, 0) = 1
/// and C(-2, 1) = -2).
Integer binom_poly(const Integer& x, unsigned long k);

/// Consecutive differences values[i+1] - values[i]. Needs at least two values.
std::vector<Integer> finite_difference(std::span<const Integer> values);

/// Dense polynomial in one variable with exact rational coefficients, lowest
/// degree first. Trailing zero coefficients are trimmed on construction, so the
/// zero polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading_coefficient() const;

  Rational operator()(const Integer& n) const;

  /// Descending degree, lowest-terms rationals: "3/2 n^3 + 9/2 n^2 + 8 n + 8".
  std::string to_string(const std::string& var = "n") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Minimal-degree polynomial f with f(start + i) = values[i] for every i.
/// Built from the Newton forward-difference form and converted to monomials.
Polynomial poly_from_samples(std::span<const Integer> values, const Integer& start);

/// Horner evaluation, exact.
Rational poly_eval(const Polynomial& p, const Integer& n);

/// n -> weight * C(n + shift, choose).
struct BinomialTerm {
  Integer weight;
  long shift = 0;
  unsigned long choose = 0;

  Integer operator()(const Integer& n) const;
};

/// Integer-valued polynomial kept as a sum of binomial terms so evaluation
/// never leaves the integers.
class BinomialPolynomial {
 public:
  BinomialPolynomial() = default;
  explicit BinomialPolynomial(std::vector<BinomialTerm> terms);

  const std::vector<BinomialTerm>& terms() const { return terms_; }
  Integer operator()(const Integer& n) const;

  /// Monomial form, recovered by interpolating enough samples.
  Polynomial monomial() const;

 private:
  std::vector<BinomialTerm> terms_;
};

}  // namespace hofq

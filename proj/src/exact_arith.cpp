#include "hofq/exact_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofq {

Integer binom_poly(const Integer& x, unsigned long k) {
  // Each prefix x(x-1)...(x-j+1) equals j! * C(x, j), so dividing by j right
  // after multiplying keeps the running value an exact integer.
  Integer result = 1;
  Integer factor = x;
  for (unsigned long j = 1; j <= k; ++j) {
    result *= factor;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), j);
    if (result == 0) {
      break;
    }
    --factor;
  }
  return result;
}

std::vector<Integer> finite_difference(std::span<const Integer> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("finite_difference: need at least two values");
  }
  std::vector<Integer> out;
  out.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    out.emplace_back(values[i + 1] - values[i]);
  }
  return out;
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) {
    c.canonicalize();
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Integer& n) const { return poly_eval(*this, n); }

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (std::size_t e = coeffs_.size(); e-- > 0;) {
    const Rational& c = coeffs_[e];
    if (c == 0) {
      continue;
    }
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational magnitude = abs(c);
    const bool unit = magnitude == 1;
    if (e == 0 || !unit) {
      out += magnitude.get_str();
      if (e > 0) out += " ";
    }
    if (e >= 1) out += var;
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial poly_from_samples(std::span<const Integer> values, const Integer& start) {
  if (values.empty()) {
    throw std::invalid_argument("poly_from_samples: no samples");
  }

  // Leading entries of the difference table: f(start + t) = sum_j D[j] C(t, j).
  std::vector<Integer> leading;
  leading.reserve(values.size());
  std::vector<Integer> row(values.begin(), values.end());
  while (true) {
    leading.push_back(row.front());
    if (row.size() == 1) break;
    row = finite_difference(row);
  }
  std::size_t top = leading.size();
  while (top > 0 && leading[top - 1] == 0) {
    --top;
  }

  // basis holds t(t-1)...(t-j+1) expanded in n, where t = n - start.
  std::vector<Rational> result(std::max<std::size_t>(top, 1), Rational(0));
  std::vector<Rational> basis{Rational(1)};
  Integer factorial = 1;
  for (std::size_t j = 0; j < top; ++j) {
    if (j > 0) {
      factorial *= static_cast<unsigned long>(j);
      // basis *= (n - start - (j - 1))
      const Rational root = Rational(start + static_cast<unsigned long>(j - 1));
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * root;
      }
      basis = std::move(next);
    }
    if (leading[j] == 0) continue;
    const Rational scale = Rational(leading[j]) / Rational(factorial);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      result[i] += basis[i] * scale;
    }
  }
  return Polynomial(std::move(result));
}

Rational poly_eval(const Polynomial& p, const Integer& n) {
  const auto& c = p.coefficients();
  Rational acc = 0;
  const Rational x(n);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
  }
  return acc;
}

Integer BinomialTerm::operator()(const Integer& n) const {
  return weight * binom_poly(n + shift, choose);
}

BinomialPolynomial::BinomialPolynomial(std::vector<BinomialTerm> terms) : terms_(std::move(terms)) {}

Integer BinomialPolynomial::operator()(const Integer& n) const {
  Integer sum = 0;
  for (const auto& t : terms_) {
    sum += t(n);
  }
  return sum;
}

Polynomial BinomialPolynomial::monomial() const {
  unsigned long max_choose = 0;
  for (const auto& t : terms_) {
    max_choose = std::max(max_choose, t.choose);
  }
  std::vector<Integer> samples;
  samples.reserve(max_choose + 1);
  for (unsigned long i = 0; i <= max_choose; ++i) {
    samples.push_back((*this)(Integer(i)));
  }
  return poly_from_samples(samples, Integer(0));
}

}  // namespace hofq

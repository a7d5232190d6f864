#pragma once

// Closed-form eventually-quasipolynomial solutions of the Hofstadter
// Q-recurrence, the polynomials p_{d,k} they are built from, and Golomb's
// purely quasilinear solution.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hofq/exact_arith.hpp"
#include "hofq/recurrence.hpp"

namespace hofq {

/// Weights w_1..w_K used in place of 3i+2 inside p_{d,k}. Any sequence with
/// w_i >= 3i+2 for every i is admissible.
class WeightSequence {
 public:
  /// Throws std::invalid_argument if some w_i < 3i+2.
  explicit WeightSequence(std::vector<Integer> entries);

  /// w_i = 3i+2 for i = 1..count.
  static WeightSequence standard(std::size_t count);

  std::size_t size() const { return entries_.size(); }
  /// 1-based.
  const Integer& operator[](std::size_t i) const { return entries_[i - 1]; }
  const std::vector<Integer>& entries() const { return entries_; }

 private:
  std::vector<Integer> entries_;
};

/// p_{d,k}(n) = 3d C(n+k, 1+k) + sum_{i=1..k} w_i C(n-1+k-i, k-i) in binomial
/// form. Requires d >= 1, k >= -1 and, when given, at least k weights.
BinomialPolynomial p_polynomial(long d, long k, const std::optional<WeightSequence>& weights = std::nullopt);

Integer p_eval(long d, long k, const Integer& n, const std::optional<WeightSequence>& weights = std::nullopt);

/// The degree-d solution: period 3d, one piece per residue r of m = 3dn + r,
/// plus the exceptional values a_1 = 3d-2 and a_2 = 0.
class QuasipolySolution {
 public:
  using Piece = std::variant<Integer, BinomialPolynomial>;

  explicit QuasipolySolution(long d, std::optional<WeightSequence> weights = std::nullopt);

  long d() const { return d_; }
  std::size_t period() const { return pieces_.size(); }
  const Piece& piece(std::size_t r) const { return pieces_.at(r); }
  const std::optional<WeightSequence>& weights() const { return weights_; }

  Integer a1() const { return Integer(3 * d_ - 2); }
  Integer a2() const { return Integer(0); }

  /// a_m for m >= 1.
  Integer term(std::uint64_t m) const;

  /// a_1..a_{3d+2}.
  std::vector<Integer> initial_condition() const;

  SequenceBuffer buffer(std::size_t n_max) const;

 private:
  long d_;
  std::optional<WeightSequence> weights_;
  std::vector<Piece> pieces_;
};

Integer theorem_term(long d, std::uint64_t m, const std::optional<WeightSequence>& weights = std::nullopt);

std::vector<Integer> initial_condition(long d);

SequenceBuffer closed_form_buffer(long d, std::size_t n_max,
                                  const std::optional<WeightSequence>& weights = std::nullopt);

/// Golomb: Q(3n) = 3n-2, Q(3n+1) = 3, Q(3n+2) = 3n+2.
Integer golomb_term(std::uint64_t m);

SequenceBuffer golomb_buffer(std::size_t n_max);

struct Lemma1Failure {
  long d, k, n;
  Integer lhs;  // p_{d,k}(n)
  Integer rhs;  // p_{d,k-1}(n) + p_{d,k}(n-1)
};

struct Lemma1Report {
  bool holds = true;
  std::optional<Lemma1Failure> counterexample;
};

/// Checks p_{d,k}(n) = p_{d,k-1}(n) + p_{d,k}(n-1) for 0 <= k <= k_max, 1 <= n <= n_max.
Lemma1Report check_lemma1(long d, long k_max, long n_max);

struct Lemma2Failure {
  long d, k, n;
  Integer value;
  Integer bound;  // 3dn + 3k + 2
};

struct Lemma2Report {
  bool holds = true;
  std::vector<std::pair<long, long>> equality_witnesses;  // (k, n)
  std::optional<Lemma2Failure> counterexample;
};

/// Checks p_{d,k}(n) >= 3dn + 3k + 2 for 1 <= k <= k_max, 0 <= n <= n_max.
Lemma2Report check_lemma2(long d, long k_max, long n_max);

}  // namespace hofq

#pragma once

// Verification campaigns: engine output vs closed forms, and the
// well-definedness scan for Hofstadter's Q.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hofq/exact_arith.hpp"
#include "hofq/quasipoly.hpp"
#include "hofq/recurrence.hpp"

namespace hofq {

struct Mismatch {
  std::size_t index;
  Integer expected;
  Integer actual;
};

struct VerificationReport {
  std::string subject;
  std::size_t range_checked = 0;  // indices 1..range_checked were compared
  bool match = true;
  std::optional<Mismatch> first_mismatch;
  /// Smallest m such that the recurrence identity holds at every checked
  /// index >= m (range_checked + 1 if it fails at the last index).
  std::size_t first_valid_index = 1;
};

/// Does terms[m] equal the recurrence applied to the earlier terms? Indices
/// <= 0 read as 0; a reference to an index >= m means it does not hold.
bool recurrence_holds_at(const NestedRecurrence& recurrence, std::span<const Integer> terms, std::size_t m);

std::size_t first_valid_index(const NestedRecurrence& recurrence, std::span<const Integer> terms);

/// Term-by-term comparison of a computed buffer against its expected closed
/// form; first_valid_index is measured on `expected` under the Q-recurrence.
VerificationReport compare_buffers(std::string subject, const SequenceBuffer& expected,
                                   const SequenceBuffer& actual);

/// Runs the Q-recurrence from the degree-d initial condition and compares it
/// term by term with the closed form. Requires n_max > 3d + 2.
VerificationReport verify_theorem(long d, std::size_t n_max,
                                  const std::optional<WeightSequence>& weights = std::nullopt);

/// verify_theorem for every d in [d_min, d_max], one job per d.
std::vector<VerificationReport> verify_theorem_sweep(long d_min, long d_max, std::size_t n_max);

/// Runs the Q-recurrence from 3, 2, 1 and compares with golomb_term. Requires n_max >= 3.
VerificationReport verify_golomb(std::size_t n_max);

/// Smallest computed index n (beyond the initial condition) with a(n) > n,
/// under the zero convention, or nullopt if none up to n_max.
std::optional<std::size_t> q_wellposed_scan(const std::vector<Integer>& init, std::size_t n_max);

}  // namespace hofq

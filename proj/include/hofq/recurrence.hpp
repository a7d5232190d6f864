#pragma once

// Evaluation of nested (Hofstadter-type) recurrences
//
//   a(n) = sum_j a(n - a(n - s_j))
//
// from an explicit initial condition. Sequences are 1-indexed; indices <= 0
// only exist through the UnderflowPolicy.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hofq/exact_arith.hpp"

namespace hofq {

class NestedRecurrence {
 public:
  /// Throws std::invalid_argument for an empty list or a shift < 1.
  explicit NestedRecurrence(std::vector<long> shifts);

  /// Shifts {1, 2}: Q(n) = Q(n - Q(n-1)) + Q(n - Q(n-2)).
  static NestedRecurrence hofstadter_q();

  const std::vector<long>& shifts() const { return shifts_; }
  long max_shift() const { return max_shift_; }

  friend bool operator==(const NestedRecurrence&, const NestedRecurrence&) = default;

 private:
  std::vector<long> shifts_;
  long max_shift_ = 0;
};

enum class UnderflowPolicy {
  zero_convention,  // a(n) = 0 for n <= 0
  strict,           // touching n <= 0 is an error
};

std::string to_string(UnderflowPolicy policy);

/// Which of the two lookups in a(n - a(n - s)) went out of range.
enum class Lookup { inner, outer };

class RecurrenceError : public std::runtime_error {
 public:
  RecurrenceError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  /// The index n whose evaluation failed.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Strict policy hit an index <= 0.
class UnderflowError : public RecurrenceError {
 public:
  UnderflowError(std::size_t index, std::size_t term, long shift, Lookup lookup, Integer referenced);

  /// Position j (0-based) of the offending summand and its shift s_j.
  std::size_t term() const { return term_; }
  long shift() const { return shift_; }
  Lookup lookup() const { return lookup_; }
  const Integer& referenced() const { return referenced_; }

 private:
  std::size_t term_;
  long shift_;
  Lookup lookup_;
  Integer referenced_;
};

/// An inner value a(n - s_j) <= 0 made the outer index n - a(n - s_j) >= n.
class ForwardReferenceError : public RecurrenceError {
 public:
  ForwardReferenceError(std::size_t index, Integer referenced);
  const Integer& referenced() const { return referenced_; }

 private:
  Integer referenced_;
};

struct RecurrenceProvenance {
  NestedRecurrence recurrence;
  std::vector<Integer> init;
  UnderflowPolicy policy = UnderflowPolicy::zero_convention;
};

/// Buffers produced from a closed form rather than by running a recurrence.
struct ExplicitProvenance {
  std::string tag;
};

using Provenance = std::variant<RecurrenceProvenance, ExplicitProvenance>;

/// A computed 1-indexed prefix a(1..size()) plus where it came from.
class SequenceBuffer {
 public:
  SequenceBuffer(std::vector<Integer> terms, Provenance provenance);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// 1-based, unchecked.
  const Integer& operator[](std::size_t m) const { return terms_[m - 1]; }
  /// 1-based, throws std::out_of_range.
  const Integer& at(std::size_t m) const;

  /// terms()[i] is a(i + 1).
  const std::vector<Integer>& terms() const { return terms_; }
  const Provenance& provenance() const { return provenance_; }
  bool extendable() const { return std::holds_alternative<RecurrenceProvenance>(provenance_); }

 private:
  std::vector<Integer> terms_;
  Provenance provenance_;
};

/// Incremental evaluator: appends one term per call to next(). Used directly
/// by scans that stop early; compute() and extend() are built on it.
class RecurrenceStepper {
 public:
  /// `terms` is the prefix already known (at least the initial condition).
  RecurrenceStepper(NestedRecurrence recurrence, std::vector<Integer> terms, UnderflowPolicy policy);

  /// Computes a(size() + 1), appends it and returns it.
  const Integer& next();

  std::size_t size() const { return terms_.size(); }
  const std::vector<Integer>& terms() const { return terms_; }
  std::vector<Integer> take_terms() && { return std::move(terms_); }

 private:
  NestedRecurrence recurrence_;
  std::vector<Integer> terms_;
  UnderflowPolicy policy_;
  Integer sum_;
};

/// Terms 1..n_max. Initial values are copied verbatim; if n_max is below the
/// initial condition's length only its first n_max values are returned.
/// Throws std::invalid_argument when init is empty, n_max is 0, or the initial
/// condition is shorter than the largest shift while n_max exceeds it.
SequenceBuffer compute(const NestedRecurrence& recurrence, const std::vector<Integer>& init,
                       std::size_t n_max, UnderflowPolicy policy = UnderflowPolicy::zero_convention);

/// Continues a recurrence-produced buffer to n_max terms. The existing prefix
/// is kept as is. Throws std::invalid_argument for explicit buffers or when
/// n_max < buf.size().
SequenceBuffer extend(const SequenceBuffer& buf, std::size_t n_max);

}  // namespace hofq

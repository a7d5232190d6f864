#include "hofq/recurrence.hpp"

#include <algorithm>

namespace hofq {

NestedRecurrence::NestedRecurrence(std::vector<long> shifts) : shifts_(std::move(shifts)) {
  if (shifts_.empty()) {
    throw std::invalid_argument("recurrence needs at least one shift");
  }
  for (long s : shifts_) {
    if (s < 1) {
      throw std::invalid_argument("recurrence shifts must be >= 1, got " + std::to_string(s));
    }
  }
  max_shift_ = *std::max_element(shifts_.begin(), shifts_.end());
}

NestedRecurrence NestedRecurrence::hofstadter_q() { return NestedRecurrence({1, 2}); }

std::string to_string(UnderflowPolicy policy) {
  return policy == UnderflowPolicy::strict ? "strict" : "zero";
}

UnderflowError::UnderflowError(std::size_t index, std::size_t term, long shift, Lookup lookup,
                               Integer referenced)
    : RecurrenceError("underflow at n=" + std::to_string(index) + ": " +
                          (lookup == Lookup::inner ? "inner" : "outer") + " lookup of term " +
                          std::to_string(term + 1) + " (shift " + std::to_string(shift) +
                          ") references index " + referenced.get_str(),
                      index),
      term_(term),
      shift_(shift),
      lookup_(lookup),
      referenced_(std::move(referenced)) {}

ForwardReferenceError::ForwardReferenceError(std::size_t index, Integer referenced)
    : RecurrenceError("forward reference at n=" + std::to_string(index) + ": needs index " +
                          referenced.get_str() + " which is not yet computed",
                      index),
      referenced_(std::move(referenced)) {}

SequenceBuffer::SequenceBuffer(std::vector<Integer> terms, Provenance provenance)
    : terms_(std::move(terms)), provenance_(std::move(provenance)) {}

const Integer& SequenceBuffer::at(std::size_t m) const {
  if (m < 1 || m > terms_.size()) {
    throw std::out_of_range("sequence index " + std::to_string(m) + " outside [1, " +
                            std::to_string(terms_.size()) + "]");
  }
  return terms_[m - 1];
}

RecurrenceStepper::RecurrenceStepper(NestedRecurrence recurrence, std::vector<Integer> terms,
                                     UnderflowPolicy policy)
    : recurrence_(std::move(recurrence)), terms_(std::move(terms)), policy_(policy) {}

const Integer& RecurrenceStepper::next() {
  const std::size_t n = terms_.size() + 1;
  const long signed_n = static_cast<long>(n);
  const auto& shifts = recurrence_.shifts();
  sum_ = 0;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const long inner_index = signed_n - shifts[j];
    if (inner_index <= 0) {
      if (policy_ == UnderflowPolicy::strict) {
        throw UnderflowError(n, j, shifts[j], Lookup::inner, Integer(inner_index));
      }
      // a(inner) = 0 puts the outer index at n itself.
      throw ForwardReferenceError(n, Integer(signed_n));
    }
    const Integer& inner = terms_[static_cast<std::size_t>(inner_index) - 1];
    if (sgn(inner) <= 0) {
      throw ForwardReferenceError(n, signed_n - inner);
    }
    if (cmp(inner, signed_n) >= 0) {
      if (policy_ == UnderflowPolicy::strict) {
        throw UnderflowError(n, j, shifts[j], Lookup::outer, signed_n - inner);
      }
      continue;  // a(<= 0) contributes 0
    }
    const std::size_t outer_index = n - inner.get_ui();
    sum_ += terms_[outer_index - 1];
  }
  terms_.push_back(sum_);
  return terms_.back();
}

namespace {

void check_init_covers_shifts(const NestedRecurrence& recurrence, std::size_t init_size,
                              std::size_t n_max) {
  if (n_max > init_size && init_size < static_cast<std::size_t>(recurrence.max_shift())) {
    throw std::invalid_argument("initial condition of length " + std::to_string(init_size) +
                                " is shorter than the largest shift " +
                                std::to_string(recurrence.max_shift()));
  }
}

}  // namespace

SequenceBuffer compute(const NestedRecurrence& recurrence, const std::vector<Integer>& init,
                       std::size_t n_max, UnderflowPolicy policy) {
  if (init.empty()) {
    throw std::invalid_argument("initial condition is empty");
  }
  if (n_max == 0) {
    throw std::invalid_argument("n_max must be positive");
  }
  check_init_covers_shifts(recurrence, init.size(), n_max);

  std::vector<Integer> prefix(init.begin(), init.begin() + std::min(n_max, init.size()));
  prefix.reserve(n_max);
  RecurrenceStepper stepper(recurrence, std::move(prefix), policy);
  while (stepper.size() < n_max) {
    stepper.next();
  }
  return SequenceBuffer(std::move(stepper).take_terms(),
                        RecurrenceProvenance{recurrence, init, policy});
}

SequenceBuffer extend(const SequenceBuffer& buf, std::size_t n_max) {
  const auto* source = std::get_if<RecurrenceProvenance>(&buf.provenance());
  if (source == nullptr) {
    throw std::invalid_argument("buffer has explicit provenance and cannot be extended");
  }
  if (n_max < buf.size()) {
    throw std::invalid_argument("extend: n_max " + std::to_string(n_max) +
                                " is below the current length " + std::to_string(buf.size()));
  }
  check_init_covers_shifts(source->recurrence, source->init.size(), n_max);

  std::vector<Integer> terms = buf.terms();
  terms.reserve(n_max);
  while (terms.size() < n_max && terms.size() < source->init.size()) {
    terms.push_back(source->init[terms.size()]);
  }
  RecurrenceStepper stepper(source->recurrence, std::move(terms), source->policy);
  while (stepper.size() < n_max) {
    stepper.next();
  }
  return SequenceBuffer(std::move(stepper).take_terms(), *source);
}

}  // namespace hofq

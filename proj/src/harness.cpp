#include "hofq/harness.hpp"

#include <future>
#include <stdexcept>

namespace hofq {

bool recurrence_holds_at(const NestedRecurrence& recurrence, std::span<const Integer> terms, std::size_t m) {
  if (m < 1 || m > terms.size()) {
    throw std::out_of_range("recurrence_holds_at: index " + std::to_string(m) + " outside the buffer");
  }
  const long signed_m = static_cast<long>(m);
  auto lookup = [&](long index) -> const Integer* {
    static const Integer zero = 0;
    return index <= 0 ? &zero : &terms[static_cast<std::size_t>(index) - 1];
  };

  Integer sum = 0;
  for (long s : recurrence.shifts()) {
    const Integer& inner = *lookup(signed_m - s);
    if (sgn(inner) <= 0) {
      return false;  // outer index would be >= m
    }
    if (cmp(inner, signed_m) >= 0) {
      continue;
    }
    sum += *lookup(signed_m - inner.get_si());
  }
  return sum == terms[m - 1];
}

std::size_t first_valid_index(const NestedRecurrence& recurrence, std::span<const Integer> terms) {
  std::size_t m = terms.size();
  while (m >= 1 && recurrence_holds_at(recurrence, terms, m)) {
    --m;
  }
  return m + 1;
}

VerificationReport compare_buffers(std::string subject, const SequenceBuffer& expected,
                                   const SequenceBuffer& actual) {
  if (actual.size() < expected.size()) {
    throw std::invalid_argument("compare_buffers: computed buffer is shorter than the expected one");
  }
  VerificationReport report;
  report.subject = std::move(subject);
  report.range_checked = expected.size();
  for (std::size_t m = 1; m <= expected.size(); ++m) {
    if (expected[m] != actual[m]) {
      report.match = false;
      report.first_mismatch = Mismatch{m, expected[m], actual[m]};
      break;
    }
  }
  report.first_valid_index = first_valid_index(NestedRecurrence::hofstadter_q(), expected.terms());
  return report;
}

VerificationReport verify_theorem(long d, std::size_t n_max, const std::optional<WeightSequence>& weights) {
  const QuasipolySolution solution(d, weights);
  const std::size_t init_length = solution.period() + 2;
  if (n_max <= init_length) {
    throw std::invalid_argument("verify_theorem: n_max must exceed 3d+2 = " + std::to_string(init_length));
  }
  const SequenceBuffer closed = solution.buffer(n_max);
  const SequenceBuffer engine =
      compute(NestedRecurrence::hofstadter_q(), solution.initial_condition(), n_max);
  return compare_buffers("theorem d=" + std::to_string(d), closed, engine);
}

std::vector<VerificationReport> verify_theorem_sweep(long d_min, long d_max, std::size_t n_max) {
  std::vector<std::future<VerificationReport>> jobs;
  for (long d = d_min; d <= d_max; ++d) {
    jobs.push_back(std::async(std::launch::async, [d, n_max] { return verify_theorem(d, n_max); }));
  }
  std::vector<VerificationReport> reports;
  reports.reserve(jobs.size());
  for (auto& job : jobs) {
    reports.push_back(job.get());
  }
  return reports;
}

VerificationReport verify_golomb(std::size_t n_max) {
  if (n_max < 3) {
    throw std::invalid_argument("verify_golomb: n_max must be at least 3");
  }
  const SequenceBuffer closed = golomb_buffer(n_max);
  const SequenceBuffer engine = compute(NestedRecurrence::hofstadter_q(), {3, 2, 1}, n_max);
  return compare_buffers("golomb", closed, engine);
}

std::optional<std::size_t> q_wellposed_scan(const std::vector<Integer>& init, std::size_t n_max) {
  const auto recurrence = NestedRecurrence::hofstadter_q();
  if (init.size() < static_cast<std::size_t>(recurrence.max_shift())) {
    throw std::invalid_argument("q_wellposed_scan: the Q-recurrence needs two initial values");
  }
  RecurrenceStepper stepper(recurrence, init, UnderflowPolicy::zero_convention);
  while (stepper.size() < n_max) {
    const Integer& value = stepper.next();
    if (cmp(value, static_cast<unsigned long>(stepper.size())) > 0) {
      return stepper.size();
    }
  }
  return std::nullopt;
}

}  // namespace hofq

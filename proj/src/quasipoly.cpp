#include "hofq/quasipoly.hpp"

#include <stdexcept>
#include <string>

namespace hofq {

namespace {

void require_degree(long d) {
  if (d < 1) {
    throw std::invalid_argument("degree parameter d must be >= 1, got " + std::to_string(d));
  }
}

std::string solution_tag(long d, bool weighted) {
  return "theorem d=" + std::to_string(d) + (weighted ? " weighted" : "");
}

}  // namespace

WeightSequence::WeightSequence(std::vector<Integer> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i <= entries_.size(); ++i) {
    const Integer floor = 3 * static_cast<unsigned long>(i) + 2;
    if (entries_[i - 1] < floor) {
      throw std::invalid_argument("weight w_" + std::to_string(i) + " = " + entries_[i - 1].get_str() +
                                  " is below the admissible minimum " + floor.get_str());
    }
  }
}

WeightSequence WeightSequence::standard(std::size_t count) {
  std::vector<Integer> entries;
  entries.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    entries.emplace_back(3 * static_cast<unsigned long>(i) + 2);
  }
  return WeightSequence(std::move(entries));
}

BinomialPolynomial p_polynomial(long d, long k, const std::optional<WeightSequence>& weights) {
  require_degree(d);
  if (k < -1) {
    throw std::invalid_argument("p_{d,k} needs k >= -1, got " + std::to_string(k));
  }
  if (weights && static_cast<long>(weights->size()) < k) {
    throw std::invalid_argument("p_{d," + std::to_string(k) + "} needs " + std::to_string(k) +
                                " weights, only " + std::to_string(weights->size()) + " given");
  }
  std::vector<BinomialTerm> terms;
  terms.reserve(static_cast<std::size_t>(k + 2));
  terms.push_back({Integer(3 * d), k, static_cast<unsigned long>(k + 1)});
  for (long i = 1; i <= k; ++i) {
    Integer w = weights ? (*weights)[static_cast<std::size_t>(i)] : Integer(3 * i + 2);
    terms.push_back({std::move(w), k - 1 - i, static_cast<unsigned long>(k - i)});
  }
  return BinomialPolynomial(std::move(terms));
}

Integer p_eval(long d, long k, const Integer& n, const std::optional<WeightSequence>& weights) {
  return p_polynomial(d, k, weights)(n);
}

QuasipolySolution::QuasipolySolution(long d, std::optional<WeightSequence> weights)
    : d_(d), weights_(std::move(weights)) {
  require_degree(d);
  const long period = 3 * d;
  pieces_.reserve(static_cast<std::size_t>(period));
  for (long r = 0; r < period; ++r) {
    switch (r % 3) {
      case 0:
        pieces_.emplace_back(p_polynomial(d, r / 3, weights_));
        break;
      case 1:
        pieces_.emplace_back(Integer(period));
        break;
      default:
        pieces_.emplace_back(Integer(r == period - 1 ? 2 : 3));
        break;
    }
  }
}

Integer QuasipolySolution::term(std::uint64_t m) const {
  if (m == 0) {
    throw std::invalid_argument("sequence indices start at 1");
  }
  if (m == 1) return a1();
  if (m == 2) return a2();
  const std::uint64_t period = pieces_.size();
  const Piece& p = pieces_[m % period];
  if (const auto* c = std::get_if<Integer>(&p)) {
    return *c;
  }
  return std::get<BinomialPolynomial>(p)(Integer(static_cast<unsigned long>(m / period)));
}

std::vector<Integer> QuasipolySolution::initial_condition() const {
  std::vector<Integer> out;
  out.reserve(pieces_.size() + 2);
  for (std::uint64_t m = 1; m <= pieces_.size() + 2; ++m) {
    out.push_back(term(m));
  }
  return out;
}

SequenceBuffer QuasipolySolution::buffer(std::size_t n_max) const {
  std::vector<Integer> terms;
  terms.reserve(n_max);
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    terms.push_back(term(m));
  }
  return SequenceBuffer(std::move(terms), ExplicitProvenance{solution_tag(d_, weights_.has_value())});
}

Integer theorem_term(long d, std::uint64_t m, const std::optional<WeightSequence>& weights) {
  require_degree(d);
  if (m == 0) {
    throw std::invalid_argument("sequence indices start at 1");
  }
  if (m == 1) return Integer(3 * d - 2);
  if (m == 2) return Integer(0);
  const auto period = static_cast<std::uint64_t>(3 * d);
  const auto n = m / period;
  const auto r = static_cast<long>(m % period);
  switch (r % 3) {
    case 0:
      return p_eval(d, r / 3, Integer(static_cast<unsigned long>(n)), weights);
    case 1:
      return Integer(3 * d);
    default:
      return Integer(r == 3 * d - 1 ? 2 : 3);
  }
}

std::vector<Integer> initial_condition(long d) { return QuasipolySolution(d).initial_condition(); }

SequenceBuffer closed_form_buffer(long d, std::size_t n_max, const std::optional<WeightSequence>& weights) {
  return QuasipolySolution(d, weights).buffer(n_max);
}

Integer golomb_term(std::uint64_t m) {
  if (m == 0) {
    throw std::invalid_argument("sequence indices start at 1");
  }
  switch (m % 3) {
    case 0:
      return Integer(static_cast<unsigned long>(m - 2));
    case 1:
      return Integer(3);
    default:
      return Integer(static_cast<unsigned long>(m));
  }
}

SequenceBuffer golomb_buffer(std::size_t n_max) {
  std::vector<Integer> terms;
  terms.reserve(n_max);
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    terms.push_back(golomb_term(m));
  }
  return SequenceBuffer(std::move(terms), ExplicitProvenance{"golomb"});
}

Lemma1Report check_lemma1(long d, long k_max, long n_max) {
  Lemma1Report report;
  BinomialPolynomial previous = p_polynomial(d, -1);
  for (long k = 0; k <= k_max; ++k) {
    BinomialPolynomial current = p_polynomial(d, k);
    for (long n = 1; n <= n_max; ++n) {
      Integer lhs = current(Integer(n));
      Integer rhs = previous(Integer(n)) + current(Integer(n - 1));
      if (lhs != rhs) {
        report.holds = false;
        report.counterexample = Lemma1Failure{d, k, n, std::move(lhs), std::move(rhs)};
        return report;
      }
    }
    previous = std::move(current);
  }
  return report;
}

Lemma2Report check_lemma2(long d, long k_max, long n_max) {
  Lemma2Report report;
  for (long k = 1; k <= k_max; ++k) {
    const BinomialPolynomial p = p_polynomial(d, k);
    for (long n = 0; n <= n_max; ++n) {
      Integer value = p(Integer(n));
      Integer bound = Integer(3 * d) * n + 3 * k + 2;
      const int c = cmp(value, bound);
      if (c < 0) {
        report.holds = false;
        report.counterexample = Lemma2Failure{d, k, n, std::move(value), std::move(bound)};
        return report;
      }
      if (c == 0) {
        report.equality_witnesses.emplace_back(k, n);
      }
    }
  }
  return report;
}

}  // namespace hofq

#include "hofq/detect.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hofq {

Rational QuasipolyFit::value(std::uint64_t m) const {
  return residue_polys.at(m % period)(Integer(static_cast<unsigned long>(m / period)));
}

namespace {

struct ClassFit {
  Polynomial poly;
  std::uint64_t last_mismatch = 0;  // index m, 0 if every sample matched
  std::size_t confirmed = 0;
};

// Samples of class r are a(q*n + r) for n_first <= n <= n_last.
std::optional<ClassFit> fit_class(const SequenceBuffer& buf, std::uint64_t q, std::uint64_t r,
                                  std::size_t deg_max, std::size_t min_confirm) {
  const std::uint64_t size = buf.size();
  const std::uint64_t n_first = r == 0 ? 1 : 0;
  const std::uint64_t n_last = (size - r) / q;
  const std::uint64_t window = deg_max + 1;
  const std::uint64_t window_start = n_last - window + 1;

  std::vector<Integer> samples;
  samples.reserve(window);
  for (std::uint64_t n = window_start; n <= n_last; ++n) {
    samples.push_back(buf[q * n + r]);
  }
  ClassFit fit{poly_from_samples(samples, Integer(static_cast<unsigned long>(window_start))), 0, 0};

  for (std::uint64_t n = window_start; n-- > n_first;) {
    const std::uint64_t m = q * n + r;
    if (fit.poly(Integer(static_cast<unsigned long>(n))) != Rational(buf[m])) {
      fit.last_mismatch = m;
      break;
    }
    ++fit.confirmed;
  }
  if (fit.confirmed < min_confirm) {
    return std::nullopt;
  }
  return fit;
}

}  // namespace

std::optional<QuasipolyFit> detect(const SequenceBuffer& buf, std::size_t q_max, std::size_t deg_max,
                                   std::size_t min_confirm) {
  if (q_max == 0 || min_confirm == 0) {
    throw std::invalid_argument("detect: q_max and min_confirm must be positive");
  }
  const std::size_t per_class = deg_max + 1 + min_confirm;
  if (buf.size() < per_class) {
    throw std::invalid_argument("detect: buffer of length " + std::to_string(buf.size()) +
                                " is too short; need at least " + std::to_string(per_class) + " terms");
  }

  for (std::uint64_t q = 1; q <= q_max; ++q) {
    // Class r = 0 starts at n = 1 and the highest classes end earliest, so
    // both extremes bound the smallest class.
    std::uint64_t smallest = buf.size() / q;
    if (smallest < per_class) {
      break;
    }
    for (std::uint64_t r : {std::uint64_t{0}, q - 1}) {
      const std::uint64_t n_first = r == 0 ? 1 : 0;
      const std::uint64_t n_last = (buf.size() - r) / q;
      smallest = std::min(smallest, n_last + 1 - n_first);
    }
    if (smallest < per_class) {
      break;  // larger periods only shrink the classes further
    }

    QuasipolyFit fit;
    fit.period = q;
    fit.confirmed = buf.size();
    std::uint64_t last_mismatch = 0;
    bool ok = true;
    for (std::uint64_t r = 0; r < q && ok; ++r) {
      auto cls = fit_class(buf, q, r, deg_max, min_confirm);
      if (!cls) {
        ok = false;
        break;
      }
      last_mismatch = std::max(last_mismatch, cls->last_mismatch);
      fit.confirmed = std::min(fit.confirmed, cls->confirmed);
      fit.residue_polys.push_back(std::move(cls->poly));
    }
    if (ok) {
      fit.onset = last_mismatch + 1;
      return fit;
    }
  }
  return std::nullopt;
}

}  // namespace hofq

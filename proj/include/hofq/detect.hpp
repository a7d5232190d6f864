#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hofq/exact_arith.hpp"
#include "hofq/recurrence.hpp"

namespace hofq {

/// Eventual quasipolynomial description of a sequence: for every index
/// m = period * n + r with m >= onset, a(m) = residue_polys[r](n).
struct QuasipolyFit {
  std::size_t period = 0;
  std::size_t onset = 1;
  std::vector<Polynomial> residue_polys;
  /// Smallest number of samples, over all classes, that matched outside the
  /// interpolation window.
  std::size_t confirmed = 0;

  Rational value(std::uint64_t m) const;
};

inline constexpr std::size_t kDefaultMinConfirm = 20;

/// Searches periods 1..q_max in increasing order. For each residue class the
/// last deg_max+1 samples are interpolated and the polynomial is walked back
/// until it first disagrees; a period is accepted when every class matches at
/// least min_confirm samples before its interpolation window.
///
/// Periods whose classes are too short to be confirmed are skipped. Returns
/// nullopt when no period up to q_max fits. Throws std::invalid_argument when
/// even period 1 cannot be confirmed (buf.size() < deg_max + 1 + min_confirm).
std::optional<QuasipolyFit> detect(const SequenceBuffer& buf, std::size_t q_max, std::size_t deg_max,
                                   std::size_t min_confirm = kDefaultMinConfirm);

}  // namespace hofq

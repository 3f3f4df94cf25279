#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "primrt/rational.hpp"

namespace primrt {

struct IntRange {
  std::size_t lo = 0;
  std::size_t hi = 0;  // inclusive
};

struct ScanCell {
  std::size_t n = 0;
  std::size_t k = 0;
  Rational f;
  Rational b;
  std::size_t argmin_h = 2;

  bool f_equals_b() const { return f == b; }
  bool minimum_at_h2() const noexcept { return argmin_h == 2; }
};

struct ScanThreshold {
  std::size_t k = 0;
  /// Smallest n in range with F_k(n') = B_k(n') for every larger n' in range;
  /// empty when F != B at the top of the range.
  std::optional<std::size_t> threshold;
  /// 2k^2 - 8k + 12.
  std::size_t predicted = 0;

  bool within_prediction() const noexcept { return threshold && *threshold <= predicted; }
};

struct ScanReport {
  std::vector<ScanCell> cells;  // ordered by k, then n
  std::vector<ScanThreshold> thresholds;

  std::size_t cells_with_minimum_at_h2() const;
  std::size_t cells_with_f_equal_b() const;
};

/// Reports, never asserts: for each cell with k <= n, whether F = B and
/// whether the F minimum sits at h = 2; per k, the equality threshold.
ScanReport scan_conjectures(IntRange n_range, IntRange k_range);

/// 2k^2 - 8k + 12.
std::size_t predicted_threshold(std::size_t k);

}  // namespace primrt

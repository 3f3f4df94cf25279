#include "primrt/conjectures.hpp"

#include <algorithm>

#include "primrt/bounds.hpp"
#include "primrt/error.hpp"

namespace primrt {

std::size_t predicted_threshold(std::size_t k) {
  // 2k^2 - 8k + 12 = 2(k-2)^2 + 4 > 0 for every k.
  return 2 * (k - 2) * (k - 2) + 4;
}

std::size_t ScanReport::cells_with_minimum_at_h2() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const ScanCell& c) { return c.minimum_at_h2(); }));
}

std::size_t ScanReport::cells_with_f_equal_b() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const ScanCell& c) { return c.f_equals_b(); }));
}

ScanReport scan_conjectures(IntRange n_range, IntRange k_range) {
  if (n_range.lo > n_range.hi || k_range.lo > k_range.hi || k_range.lo < 2 || n_range.lo < 2) {
    throw Error(ErrorKind::out_of_range, "scan ranges must be nonempty with n, k >= 2");
  }
  ScanReport report;
  // One B row per n, reused for every k.
  std::vector<std::vector<Rational>> rows(n_range.hi - n_range.lo + 1);
  for (std::size_t n = n_range.lo; n <= n_range.hi; ++n) {
    const std::size_t kmax = std::min(n, k_range.hi);
    if (kmax >= k_range.lo) rows[n - n_range.lo] = bk_row(n, kmax);
  }
  for (std::size_t k = k_range.lo; k <= k_range.hi; ++k) {
    ScanThreshold th;
    th.k = k;
    th.predicted = predicted_threshold(k);
    const std::size_t first = std::max(n_range.lo, k);
    if (first <= n_range.hi) {
      std::optional<std::size_t> since;  // start of the trailing run of equalities
      for (std::size_t n = first; n <= n_range.hi; ++n) {
        const auto& row = rows[n - n_range.lo];
        const FBound f = f_bound(n, k, row);
        ScanCell cell{n, k, f.value, row[k], f.argmin_h};
        if (cell.f_equals_b()) {
          if (!since) since = n;
        } else {
          since.reset();
        }
        report.cells.push_back(std::move(cell));
      }
      if (since) {
        // The predecessor of the run qualifies too: all larger n' are equal.
        th.threshold = *since > first ? *since - 1 : first;
      }
    }
    report.thresholds.push_back(th);
  }
  return report;
}

}  // namespace primrt

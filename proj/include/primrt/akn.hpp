#pragma once

#include <cstddef>
#include <vector>

#include "primrt/bool_matrix.hpp"

namespace primrt {

/// max{n - k(k-1) - 1, ceil((n-k)/k), 1}; requires n >= 2, 2 <= k <= n-1.
std::size_t akn_lower(std::size_t n, std::size_t k);

/// n - k(k-1) - 1 when that is >= ceil((n-k)/k), else ceil((n-k)/k).
std::size_t akn_upper(std::size_t n, std::size_t k);

/// max{n - k(k-1) - 1, ceil((n-k)/p), 1}; requires n >= 3, 2 <= k < n,
/// 1 <= p <= min{k, n-k}.
std::size_t akp_hat(std::size_t n, std::size_t k, std::size_t p);

enum class Membership {
  member,
  k_out_of_range,
  not_nz,
  heavy_row,           // some row weight exceeds k
  heavy_column,        // some column weight exceeds k
  no_weight_k_column,  // no column of weight exactly k
};

struct AknEvaluation {
  Membership membership = Membership::k_out_of_range;
  /// Row or column that caused rejection, when applicable.
  std::size_t offending_index = 0;

  /// Columns of weight exactly k.
  std::vector<std::size_t> heavy_columns;
  /// min over heavy columns c of #{i : supp(A_i) not within supp(A_c)}.
  std::size_t value = 0;
  std::size_t argmin_column = 0;

  /// Largest |supp(A_i) \ supp(A_c)| over heavy c and i != c.
  std::size_t p = 0;
  /// Heavy columns attaining p.
  std::vector<std::size_t> p_columns;
  /// Same count as `value` restricted to `p_columns`.
  std::size_t refined_value = 0;

  bool member() const noexcept { return membership == Membership::member; }
};

/// Membership in S_n^k (NZ, all row/column weights <= k, a column of weight
/// exactly k) and, for members, the escaping-column counts.
AknEvaluation evaluate_akn(const BoolMatrix& a, std::size_t k);

enum class WitnessKind { hat, tilde };

struct WitnessMatrix {
  BoolMatrix matrix;
  std::size_t claimed_a = 0;
  WitnessKind kind = WitnessKind::hat;
};

/// Block matrix in S_n^k whose escaping-column count equals akn_upper(n, k).
WitnessMatrix build_witness(std::size_t n, std::size_t k);

}  // namespace primrt

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "primrt/rational.hpp"

namespace primrt {

/// How the middle branch of the B recursion bounds the escaping-column count.
enum class MidrangeRule {
  quotient,  // (n-k)/k, no ceiling (default)
  ceiling,   // ceil((n-k)/k), the integer escaping-column bound
};

/// B_k(n) by the three-branch recursion from B_2 = 1. The step from B_k to
/// B_{k+1} adds n(1 + k(k-1)/2) while k+1 <= floor(sqrt n), then
/// n(1 + n(k-1)/2k) while k+1 <= floor(n/2), then n^2/2.
Rational bk_recursive(std::size_t n, std::size_t k, MidrangeRule rule = MidrangeRule::quotient);

/// B_2(n) .. B_kmax(n); entries 0 and 1 are zero.
std::vector<Rational> bk_row(std::size_t n, std::size_t kmax,
                             MidrangeRule rule = MidrangeRule::quotient);

/// Closed form: cubic polynomial in k, then a harmonic-sum branch, then
/// linear growth in k with slope n^2/2.
Rational bk_closed(std::size_t n, std::size_t k);

/// Correction term U~^k_h(n), 0 for h >= k; requires h >= 2, 2 <= k <= n.
Rational tilde_u(std::size_t n, std::size_t k, std::size_t h);

/// 2 * U~^k_h(n) for h = 0 .. k (entries below 2 unused). All values are
/// half-integers, so the doubled table is exact in integers.
std::vector<std::int64_t> tilde_u_doubled_row(std::size_t n, std::size_t k);

struct FBound {
  Rational value;
  std::size_t argmin_h = 2;  // lowest h on ties
};

/// F_k(n) = min over 2 <= h <= k of B_h(n) + U~^k_h(n).
FBound f_bound(std::size_t n, std::size_t k);
/// Same, reusing a precomputed bk_row(n, >= k).
FBound f_bound(std::size_t n, std::size_t k, const std::vector<Rational>& b_row);

/// (15617 n^3 + 7500 n^2 + 9375 n - 31250) / 93750.
Rational szykula_bound(std::size_t n);

enum class BoundKind { b, f, tilde_u };

struct BoundKey {
  BoundKind kind;
  std::size_t k;
  std::size_t h = 0;  // only for tilde_u

  friend auto operator<=>(const BoundKey&, const BoundKey&) = default;
};

struct BoundTable {
  std::size_t n = 0;
  std::map<BoundKey, Rational> values;
  std::map<BoundKey, std::size_t> f_argmin;

  std::int64_t ceiling(const BoundKey& key) const { return values.at(key).ceil_int64(); }
};

/// B_k and F_k for 2 <= k <= kmax, plus U~^k_h for 2 <= h <= k when
/// `with_tilde_u`.
BoundTable bound_table(std::size_t n, std::size_t kmax, bool with_tilde_u = false,
                       MidrangeRule rule = MidrangeRule::quotient);

}  // namespace primrt

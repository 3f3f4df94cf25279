#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "primrt/bool_matrix.hpp"

namespace primrt {

/// Exact search is limited to one machine word per row.
inline constexpr std::size_t max_search_dimension = 64;

struct SearchLimits {
  std::size_t max_depth = 0;
  std::size_t max_states = 10'000'000;
  /// Disabling dedup enumerates every word; only useful for small oracles.
  bool dedup = true;

  /// max_depth = 2(n-1)^2 + n, max_states = 10^7.
  static SearchLimits defaults(std::size_t n) {
    SearchLimits l;
    l.max_depth = 2 * (n - 1) * (n - 1) + n;
    return l;
  }
};

enum class ReachStatus {
  found,
  limit_reached,  // search stopped on max_depth or max_states first
  unreachable,    // the semigroup was exhausted without reaching it
};

struct FirstReach {
  ReachStatus status = ReachStatus::unreachable;
  std::size_t length = 0;
  std::vector<std::size_t> witness;  // generator indices, leftmost first

  bool found() const noexcept { return status == ReachStatus::found; }
};

struct SearchResult {
  std::size_t n = 0;
  FirstReach exponent;
  /// Indexed by k; entries 0 and 1 are unused.
  std::vector<FirstReach> krt;
  std::size_t explored = 0;
  std::size_t depth_reached = 0;

  const FirstReach& rt(std::size_t k) const { return krt.at(k); }
};

/// Level-order BFS over products of the generators, deduplicating equal
/// matrices. Records the first level with a row or column of weight >= k for
/// every k in [2, n] and the first level with the all-ones matrix.
SearchResult explore(const MatrixSet& set, const SearchLimits& limits);
inline SearchResult explore(const MatrixSet& set) {
  return explore(set, SearchLimits::defaults(set.n()));
}

/// Left-to-right product of the named generators; empty word gives identity.
BoolMatrix witness_replay(const MatrixSet& set, std::span<const std::size_t> word);

}  // namespace primrt

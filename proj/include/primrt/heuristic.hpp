#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "primrt/bool_matrix.hpp"

namespace primrt {

enum class HeuristicMode {
  specific,  // grow the seed column: merge (i,j) into (i,i)
  any,       // merge (i,j) into the nearest singleton, moving i there
};

struct HeuristicTrace {
  /// Generator indices, seed first; the product is taken left to right.
  std::vector<std::size_t> word;
  BoolMatrix final;
  /// Indexed by k in [2, n]: shortest prefix of `word` whose product has a
  /// row or column of weight >= k. Entries 0 and 1 are unused.
  std::vector<std::size_t> per_k_length;
  /// The all-ones column of `final`.
  std::size_t column_index = 0;
  /// Loop iterations (merging words appended).
  std::size_t iterations = 0;
  /// |S| after the seed and after each iteration; strictly increasing.
  std::vector<std::size_t> support_sizes;
};

/// Greedy Eppstein-style heuristic: start from the generator column of largest
/// weight and repeatedly append the shortest pair-digraph merging word that
/// grows it. Throws not_primitive for a non-primitive set.
HeuristicTrace run_heuristic(const MatrixSet& set, HeuristicMode mode = HeuristicMode::specific);

std::string_view to_string(HeuristicMode mode) noexcept;

}  // namespace primrt

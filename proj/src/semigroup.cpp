#include "primrt/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_set>

#include "primrt/error.hpp"

namespace primrt {

namespace {

using Word = std::uint64_t;
constexpr std::uint32_t no_parent = static_cast<std::uint32_t>(-1);

// Matrices are stored back to back in `rows`, n words each (one per row).
struct Arena {
  std::size_t n = 0;
  std::vector<Word> rows;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> generator;

  const Word* at(std::size_t idx) const { return rows.data() + idx * n; }
  std::size_t size() const { return parent.size(); }

  std::vector<std::size_t> word(std::uint32_t idx) const {
    std::vector<std::size_t> w;
    while (idx != no_parent) {
      w.push_back(generator[idx]);
      idx = parent[idx];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

struct ArenaHash {
  const Arena* arena;
  std::size_t operator()(std::uint32_t idx) const noexcept {
    const Word* m = arena->at(idx);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < arena->n; ++i) {
      h ^= m[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct ArenaEqual {
  const Arena* arena;
  bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
    return std::memcmp(arena->at(a), arena->at(b), arena->n * sizeof(Word)) == 0;
  }
};

std::size_t max_weight(const Word* m, std::size_t n) {
  std::size_t best = 0;
  std::size_t cols[max_search_dimension] = {};
  for (std::size_t i = 0; i < n; ++i) {
    best = std::max(best, static_cast<std::size_t>(std::popcount(m[i])));
    Word bits = m[i];
    while (bits != 0) {
      ++cols[std::countr_zero(bits)];
      bits &= bits - 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) best = std::max(best, cols[j]);
  return best;
}

}  // namespace

SearchResult explore(const MatrixSet& set, const SearchLimits& limits) {
  const std::size_t n = set.n();
  if (n > max_search_dimension) {
    throw Error(ErrorKind::out_of_range, "exact search supports n <= 64, got n = " + std::to_string(n));
  }
  set.require_nz();

  SearchResult result;
  result.n = n;
  result.krt.resize(n + 1);
  const Word full = n == 64 ? ~Word{0} : ((Word{1} << n) - 1);

  std::vector<Word> gens(set.size() * n);
  for (std::size_t g = 0; g < set.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) gens[g * n + i] = set[g].row(i)[0];
  }

  Arena arena;
  arena.n = n;
  std::unordered_set<std::uint32_t, ArenaHash, ArenaEqual> seen(1024, ArenaHash{&arena},
                                                                ArenaEqual{&arena});

  std::size_t reached = 1;  // highest k recorded so far
  bool limit_hit = false;
  bool done = false;

  // Adds a product at `depth`; returns false once the state budget is spent.
  auto consider = [&](const Word* m, std::uint32_t parent, std::uint32_t gen, std::size_t depth) {
    if (arena.size() >= limits.max_states) {
      limit_hit = true;
      return false;
    }
    const auto idx = static_cast<std::uint32_t>(arena.size());
    arena.rows.insert(arena.rows.end(), m, m + n);
    arena.parent.push_back(parent);
    arena.generator.push_back(gen);
    if (limits.dedup && !seen.insert(idx).second) {
      arena.rows.resize(arena.rows.size() - n);
      arena.parent.pop_back();
      arena.generator.pop_back();
      return true;
    }
    const std::size_t w = max_weight(m, n);
    if (w > reached) {
      std::vector<std::size_t> word = arena.word(idx);
      for (std::size_t k = std::max<std::size_t>(reached + 1, 2); k <= w; ++k) {
        result.krt[k] = FirstReach{ReachStatus::found, depth, word};
      }
      reached = w;
    }
    if (w == n && std::all_of(m, m + n, [full](Word r) { return r == full; })) {
      result.exponent = FirstReach{ReachStatus::found, depth, arena.word(idx)};
      done = true;
    }
    return true;
  };

  std::size_t level_begin = 0;
  std::size_t depth = 0;
  if (limits.max_depth >= 1) {
    depth = 1;
    for (std::size_t g = 0; g < set.size() && !done; ++g) {
      if (!consider(&gens[g * n], no_parent, static_cast<std::uint32_t>(g), 1)) break;
    }
  } else {
    limit_hit = true;
  }
  std::size_t level_end = arena.size();

  std::vector<Word> product(n);
  while (!done && !limit_hit && level_begin < level_end) {
    if (depth >= limits.max_depth) {
      limit_hit = true;
      break;
    }
    ++depth;
    for (std::size_t idx = level_begin; idx < level_end && !done && !limit_hit; ++idx) {
      for (std::size_t g = 0; g < set.size(); ++g) {
        const Word* gm = &gens[g * n];
        for (std::size_t i = 0; i < n; ++i) {
          Word bits = arena.at(idx)[i];
          Word acc = 0;
          while (bits != 0) {
            acc |= gm[std::countr_zero(bits)];
            bits &= bits - 1;
          }
          product[i] = acc;
        }
        if (!consider(product.data(), static_cast<std::uint32_t>(idx),
                      static_cast<std::uint32_t>(g), depth)) {
          break;
        }
        if (done) break;
      }
    }
    level_begin = level_end;
    level_end = arena.size();
  }

  const ReachStatus missing = limit_hit ? ReachStatus::limit_reached : ReachStatus::unreachable;
  if (!result.exponent.found()) result.exponent.status = missing;
  for (std::size_t k = 2; k <= n; ++k) {
    if (!result.krt[k].found()) result.krt[k].status = missing;
  }
  result.explored = arena.size();
  result.depth_reached = depth;
  return result;
}

BoolMatrix witness_replay(const MatrixSet& set, std::span<const std::size_t> word) {
  BoolMatrix acc = BoolMatrix::identity(set.n());
  for (std::size_t g : word) {
    if (g >= set.size()) {
      throw Error(ErrorKind::out_of_range, "generator index " + std::to_string(g + 1) +
                                               " out of range 1.." + std::to_string(set.size()));
    }
    acc = boolean_product(acc, set[g]);
  }
  return acc;
}

}  // namespace primrt

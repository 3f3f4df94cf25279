#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "primrt/bool_matrix.hpp"
#include "primrt/error.hpp"
#include "primrt/semigroup.hpp"

namespace primrt {

/// Complete deterministic automaton in matrix form: every letter is binary
/// and row-stochastic, row q holding the single successor of state q.
class Automaton {
 public:
  Automaton(std::vector<BoolMatrix> letters, std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const BoolMatrix& letter(std::size_t a) const { return letters_[a]; }
  const std::vector<BoolMatrix>& letters() const noexcept { return letters_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Successor of state q under letter a.
  std::size_t delta(std::size_t a, std::size_t q) const noexcept { return delta_[a][q]; }

  /// Image of a state applying `word` left to right.
  std::size_t run(std::size_t q, const std::vector<std::size_t>& word) const;

 private:
  std::size_t n_ = 0;
  std::vector<BoolMatrix> letters_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> delta_;
};

inline constexpr std::size_t default_letter_cap = 4096;

class LetterCapExceeded : public Error {
 public:
  LetterCapExceeded(std::size_t cap, std::vector<std::size_t> per_generator, std::size_t would_be,
                    bool exact);

  std::size_t cap() const noexcept { return cap_; }
  /// Product of row weights of each generator, saturated at SIZE_MAX.
  const std::vector<std::size_t>& per_generator() const noexcept { return per_generator_; }
  /// Distinct letter count when `exact()`, otherwise the sum of per_generator.
  std::size_t would_be() const noexcept { return would_be_; }
  bool exact() const noexcept { return exact_; }

 private:
  std::size_t cap_;
  std::vector<std::size_t> per_generator_;
  std::size_t would_be_;
  bool exact_;
};

/// All distinct binary row-stochastic A with A <= M entrywise for some
/// generator M, in generator order and then lexicographic row choices.
Automaton associated_automaton(const MatrixSet& set, std::size_t cap = default_letter_cap);

struct SubsetBfsResult {
  std::size_t n = 0;
  FirstReach reset;
  /// Indexed by k; witness maps some k states onto one state.
  std::vector<FirstReach> krt;
  std::size_t explored = 0;

  const FirstReach& rt(std::size_t k) const { return krt.at(k); }
};

/// Backward BFS over preimages of singletons. Requires n <= 64.
SubsetBfsResult subset_bfs(const Automaton& aut, std::size_t max_states = 10'000'000);

struct AutomataLimits {
  std::size_t letter_cap = default_letter_cap;
  std::size_t subset_states = 10'000'000;
  SearchLimits search;

  static AutomataLimits defaults(std::size_t n) {
    AutomataLimits l;
    l.search = SearchLimits::defaults(n);
    return l;
  }
};

struct SandwichReport {
  std::size_t n = 0;
  std::size_t rt_aut = 0;
  std::size_t rt_aut_transposed = 0;
  std::size_t exponent = 0;
  std::size_t upper = 0;  // rt_aut + rt_aut_transposed + n - 1
  bool lower_holds = false;
  bool upper_holds = false;
  bool upper_tight = false;
  bool lower_tight = false;

  bool holds() const noexcept { return lower_holds && upper_holds; }
};

/// rt(Aut(M)) <= exp(M) <= rt(Aut(M)) + rt(Aut(M^T)) + n - 1 on a primitive set.
SandwichReport verify_theorem_sandwich(const MatrixSet& set, const AutomataLimits& limits);

struct KrtEqualityReport {
  std::size_t k = 0;
  std::size_t rt_set = 0;
  std::size_t rt_aut = 0;
  std::size_t rt_aut_transposed = 0;
  bool holds = false;
};

/// rt_k(M) == min(rt_k(Aut(M)), rt_k(Aut(M^T))) for 2 <= k <= n.
KrtEqualityReport verify_krt_equality(const MatrixSet& set, std::size_t k,
                                      const AutomataLimits& limits);

/// Same check for every k in [2, n], sharing the three searches.
std::vector<KrtEqualityReport> verify_krt_equality_profile(const MatrixSet& set,
                                                           const AutomataLimits& limits);

}  // namespace primrt

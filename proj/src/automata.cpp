#include "primrt/automata.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

#include "primrt/pair_digraph.hpp"

namespace primrt {

namespace {

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i] == std::numeric_limits<std::size_t>::max() ? std::string("overflow") : std::to_string(v[i]);
  }
  return s;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max() : a + b;
}

}  // namespace

Automaton::Automaton(std::vector<BoolMatrix> letters, std::vector<std::string> labels)
    : letters_(std::move(letters)), labels_(std::move(labels)) {
  if (letters_.empty()) throw Error(ErrorKind::dimension, "automaton has no letters");
  n_ = letters_.front().n();
  if (labels_.empty()) {
    for (std::size_t a = 0; a < letters_.size(); ++a) labels_.push_back("a" + std::to_string(a + 1));
  }
  if (labels_.size() != letters_.size()) {
    throw Error(ErrorKind::dimension, "label count does not match letter count");
  }
  delta_.resize(letters_.size());
  for (std::size_t a = 0; a < letters_.size(); ++a) {
    const BoolMatrix& m = letters_[a];
    if (m.n() != n_) throw Error(ErrorKind::dimension, "letter " + labels_[a] + " has wrong dimension");
    if (!m.is_row_stochastic()) {
      throw Error(ErrorKind::dimension, "letter " + labels_[a] + " is not binary row-stochastic");
    }
    delta_[a].resize(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (m.get(q, j)) {
          delta_[a][q] = j;
          break;
        }
      }
    }
  }
}

std::size_t Automaton::run(std::size_t q, const std::vector<std::size_t>& word) const {
  for (std::size_t a : word) q = delta_.at(a)[q];
  return q;
}

LetterCapExceeded::LetterCapExceeded(std::size_t cap, std::vector<std::size_t> per_generator,
                                     std::size_t would_be, bool exact)
    : Error(ErrorKind::cap_exceeded,
            "associated automaton would have " + std::string(exact ? "" : "up to ") +
                std::to_string(would_be) + " letters, cap is " + std::to_string(cap) +
                " (product of row weights per generator: " + join_counts(per_generator) + ")"),
      cap_(cap),
      per_generator_(std::move(per_generator)),
      would_be_(would_be),
      exact_(exact) {}

Automaton associated_automaton(const MatrixSet& set, std::size_t cap) {
  set.require_nz();
  const std::size_t n = set.n();

  std::vector<std::size_t> per_generator;
  std::size_t total = 0;
  for (const auto& g : set.generators()) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count = saturating_mul(count, g.row_weight(i));
    per_generator.push_back(count);
    total = saturating_add(total, count);
  }
  // Selections from one generator are pairwise distinct, so a single
  // generator above the cap already decides the outcome.
  if (*std::max_element(per_generator.begin(), per_generator.end()) > cap) {
    throw LetterCapExceeded(cap, per_generator, total, false);
  }

  std::vector<BoolMatrix> letters;
  std::vector<std::string> labels;
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t g = 0; g < set.size(); ++g) {
    std::vector<std::vector<std::size_t>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (set[g].get(i, j)) choices[i].push_back(j);
      }
    }
    // Odometer over per-row choices, last row varying fastest.
    std::vector<std::size_t> pick(n, 0);
    std::size_t selection = 0;
    while (true) {
      ++selection;
      std::vector<std::size_t> image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = choices[i][pick[i]];
      if (index.emplace(image, letters.size()).second) {
        BoolMatrix letter(n);
        for (std::size_t i = 0; i < n; ++i) letter.set(i, image[i]);
        letters.push_back(std::move(letter));
        labels.push_back(set.label(g) + "." + std::to_string(selection));
      }
      bool carry = true;
      for (std::size_t r = n; carry && r > 0; --r) {
        if (++pick[r - 1] < choices[r - 1].size()) {
          carry = false;
        } else {
          pick[r - 1] = 0;
        }
      }
      if (carry) break;
    }
  }
  if (letters.size() > cap) throw LetterCapExceeded(cap, per_generator, letters.size(), true);
  return Automaton(std::move(letters), std::move(labels));
}

SubsetBfsResult subset_bfs(const Automaton& aut, std::size_t max_states) {
  using Mask = std::uint64_t;
  const std::size_t n = aut.n();
  if (n > 64) {
    throw Error(ErrorKind::out_of_range, "subset search supports n <= 64, got n = " + std::to_string(n));
  }
  SubsetBfsResult result;
  result.n = n;
  result.krt.resize(n + 1);

  struct Parent {
    Mask from;
    std::size_t letter;
    std::size_t depth;
  };
  std::unordered_map<Mask, Parent> parent;
  std::deque<Mask> queue;
  for (std::size_t q = 0; q < n; ++q) {
    const Mask m = Mask{1} << q;
    parent.emplace(m, Parent{0, 0, 0});
    queue.push_back(m);
  }

  auto word_of = [&](Mask m) {
    std::vector<std::size_t> w;
    while (true) {
      const Parent& p = parent.at(m);
      if (p.depth == 0) break;
      w.push_back(p.letter);
      m = p.from;
    }
    return w;
  };

  std::size_t reached = 1;
  bool limit_hit = false;
  if (n == 1) {
    result.reset = FirstReach{ReachStatus::found, 0, {}};
  }
  while (!queue.empty() && reached < n) {
    const Mask s = queue.front();
    queue.pop_front();
    const std::size_t depth = parent.at(s).depth;
    for (std::size_t a = 0; a < aut.size() && reached < n; ++a) {
      Mask pre = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if ((s >> aut.delta(a, q)) & 1U) pre |= Mask{1} << q;
      }
      if (pre == 0 || parent.contains(pre)) continue;
      if (parent.size() >= max_states) {
        limit_hit = true;
        queue.clear();
        break;
      }
      parent.emplace(pre, Parent{s, a, depth + 1});
      queue.push_back(pre);
      const auto size = static_cast<std::size_t>(std::popcount(pre));
      if (size > reached) {
        const auto w = word_of(pre);
        for (std::size_t k = std::max<std::size_t>(reached + 1, 2); k <= size; ++k) {
          result.krt[k] = FirstReach{ReachStatus::found, depth + 1, w};
        }
        reached = size;
      }
    }
  }
  const ReachStatus missing = limit_hit ? ReachStatus::limit_reached : ReachStatus::unreachable;
  for (std::size_t k = 2; k <= n; ++k) {
    if (!result.krt[k].found()) result.krt[k].status = missing;
  }
  if (n >= 2) {
    result.reset = result.krt[n];
  }
  result.explored = parent.size();
  return result;
}

namespace {

struct ThreeWay {
  SearchResult set;
  SubsetBfsResult aut;
  SubsetBfsResult aut_t;
};

ThreeWay compute_three_way(const MatrixSet& set, const AutomataLimits& limits) {
  const PrimitivityReport prim = is_primitive(set);
  if (!prim.primitive) throw Error(ErrorKind::not_primitive, "matrix set is not primitive");
  ThreeWay t{explore(set, limits.search),
             subset_bfs(associated_automaton(set, limits.letter_cap), limits.subset_states),
             subset_bfs(associated_automaton(transpose_set(set), limits.letter_cap),
                        limits.subset_states)};
  return t;
}

std::size_t require_found(const FirstReach& r, const char* what) {
  if (!r.found()) {
    throw Error(ErrorKind::limit_exhausted, std::string(what) + " not reached within the search limits");
  }
  return r.length;
}

}  // namespace

SandwichReport verify_theorem_sandwich(const MatrixSet& set, const AutomataLimits& limits) {
  const ThreeWay t = compute_three_way(set, limits);
  SandwichReport r;
  r.n = set.n();
  r.exponent = require_found(t.set.exponent, "exponent");
  r.rt_aut = require_found(t.aut.reset, "reset threshold of Aut(M)");
  r.rt_aut_transposed = require_found(t.aut_t.reset, "reset threshold of Aut(M^T)");
  r.upper = r.rt_aut + r.rt_aut_transposed + r.n - 1;
  r.lower_holds = r.rt_aut <= r.exponent;
  r.upper_holds = r.exponent <= r.upper;
  r.lower_tight = r.rt_aut == r.exponent;
  r.upper_tight = r.exponent == r.upper;
  return r;
}

std::vector<KrtEqualityReport> verify_krt_equality_profile(const MatrixSet& set,
                                                           const AutomataLimits& limits) {
  const ThreeWay t = compute_three_way(set, limits);
  std::vector<KrtEqualityReport> out;
  for (std::size_t k = 2; k <= set.n(); ++k) {
    KrtEqualityReport r;
    r.k = k;
    r.rt_set = require_found(t.set.rt(k), "rt_k(M)");
    r.rt_aut = require_found(t.aut.rt(k), "rt_k(Aut(M))");
    r.rt_aut_transposed = require_found(t.aut_t.rt(k), "rt_k(Aut(M^T))");
    r.holds = r.rt_set == std::min(r.rt_aut, r.rt_aut_transposed);
    out.push_back(r);
  }
  return out;
}

KrtEqualityReport verify_krt_equality(const MatrixSet& set, std::size_t k,
                                      const AutomataLimits& limits) {
  if (k < 2 || k > set.n()) {
    throw Error(ErrorKind::out_of_range, "k must lie in [2, n], got k = " + std::to_string(k));
  }
  return verify_krt_equality_profile(set, limits)[k - 2];
}

}  // namespace primrt

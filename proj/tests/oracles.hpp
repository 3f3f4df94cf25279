// Independent reference implementations for the tests. Nothing here calls
// into the library except to convert between representations; every oracle
// recomputes from definitions on plain nested vectors.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "primrt/bool_matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;
using Set = std::vector<Dense>;

inline Dense dense(const primrt::BoolMatrix& m) {
  Dense d(m.n(), std::vector<int>(m.n(), 0));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  return d;
}

inline Set dense(const primrt::MatrixSet& s) {
  Set out;
  for (const auto& g : s.generators()) out.push_back(dense(g));
  return out;
}

inline primrt::BoolMatrix to_matrix(const Dense& d) {
  primrt::BoolMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[i][j]) m.set(i, j);
  return m;
}

inline Dense identity(std::size_t n) {
  Dense d(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s)
        if (a[i][s] && b[s][j]) {
          c[i][j] = 1;
          break;
        }
  return c;
}

inline int col_weight(const Dense& a, std::size_t j) {
  int w = 0;
  for (const auto& row : a) w += row[j];
  return w;
}

inline int row_weight(const Dense& a, std::size_t i) {
  int w = 0;
  for (int x : a[i]) w += x;
  return w;
}

inline int max_weight(const Dense& a) {
  int w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max({w, row_weight(a, i), col_weight(a, i)});
  return w;
}

inline bool all_ones(const Dense& a) {
  for (const auto& row : a)
    for (int x : row)
      if (!x) return false;
  return true;
}

inline bool has_all_ones_column(const Dense& a) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (col_weight(a, j) == static_cast<int>(a.size())) return true;
  return false;
}

inline bool nz(const Dense& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (row_weight(a, i) == 0 || col_weight(a, i) == 0) return false;
  return true;
}

// ---------------------------------------------------------------- pair digraph

using Pair = std::pair<int, int>;

inline Pair norm(int a, int b) { return a <= b ? Pair{a, b} : Pair{b, a}; }

/// Edges straight from the definition: (i,j) -> (x,y) under g iff
/// g(i,x) = g(j,y) = 1 or g(i,y) = g(j,x) = 1.
inline std::map<Pair, std::set<std::pair<Pair, int>>> pair_edges(const Set& s) {
  const int n = static_cast<int>(s.front().size());
  std::map<Pair, std::set<std::pair<Pair, int>>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto& e = out[{i, j}];
      for (int g = 0; g < static_cast<int>(s.size()); ++g)
        for (int x = 0; x < n; ++x)
          for (int y = x; y < n; ++y) {
            const auto& m = s[g];
            if ((m[i][x] && m[j][y]) || (m[i][y] && m[j][x])) e.insert({{x, y}, g});
          }
    }
  return out;
}

/// Forward BFS from one source; distance to the nearest singleton (or to
/// `target`), -1 if none.
inline int pair_distance(const Set& s, Pair source, std::optional<Pair> target = std::nullopt) {
  const auto edges = pair_edges(s);
  auto done = [&](Pair p) { return target ? p == *target : p.first == p.second; };
  std::map<Pair, int> dist{{source, 0}};
  std::deque<Pair> q{source};
  while (!q.empty()) {
    const Pair u = q.front();
    q.pop_front();
    if (done(u)) return dist[u];
    for (const auto& [v, g] : edges.at(u))
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return -1;
}

// ------------------------------------------------------------------ semigroup

struct Profile {
  std::vector<int> krt;  // indexed by k; -1 = not reached
  int exponent = -1;
};

/// Every word up to `depth`, no dedup at all.
inline Profile enumerate_words(const Set& s, int depth) {
  const std::size_t n = s.front().size();
  Profile p;
  p.krt.assign(n + 1, -1);
  std::vector<Dense> level{identity(n)};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Dense> next;
    next.reserve(level.size() * s.size());
    for (const auto& a : level)
      for (const auto& g : s) next.push_back(mul(a, g));
    for (const auto& m : next) {
      const int w = max_weight(m);
      for (int k = 2; k <= w; ++k)
        if (p.krt[k] < 0) p.krt[k] = len;
      if (p.exponent < 0 && all_ones(m)) p.exponent = len;
    }
    level.swap(next);
  }
  return p;
}

/// Closure of the generated semigroup with std::set dedup; fills lengths.
/// Stops at the first all-ones level, by which point every k is reached.
inline Profile closure(const Set& s) {
  const std::size_t n = s.front().size();
  Profile p;
  p.krt.assign(n + 1, -1);
  std::set<Dense> seen;
  std::vector<Dense> frontier;
  for (const auto& g : s)
    if (seen.insert(g).second) frontier.push_back(g);
  for (int len = 1; !frontier.empty(); ++len) {
    for (const auto& m : frontier) {
      const int w = max_weight(m);
      for (int k = 2; k <= w; ++k)
        if (p.krt[k] < 0) p.krt[k] = len;
      if (p.exponent < 0 && all_ones(m)) p.exponent = len;
    }
    if (p.exponent >= 0) break;
    std::vector<Dense> next;
    for (const auto& a : frontier)
      for (const auto& g : s) {
        Dense c = mul(a, g);
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    frontier.swap(next);
  }
  return p;
}

inline bool primitive_by_closure(const Set& s) { return closure(s).exponent >= 0; }

// ------------------------------------------------------------------- automata

using Func = std::vector<int>;  // q -> delta(q)

/// Every f : [n] -> [n] with M(q, f(q)) = 1 for some generator M, distinct.
inline std::set<Func> minorant_letters(const Set& s) {
  const int n = static_cast<int>(s.front().size());
  std::set<Func> out;
  Func f(n, 0);
  std::function<void(int, const Dense&)> rec = [&](int q, const Dense& m) {
    if (q == n) {
      out.insert(f);
      return;
    }
    for (int t = 0; t < n; ++t)
      if (m[q][t]) {
        f[q] = t;
        rec(q + 1, m);
      }
  };
  for (const auto& m : s) rec(0, m);
  return out;
}

inline Func as_func(const Dense& d) {
  Func f(d.size(), -1);
  for (std::size_t q = 0; q < d.size(); ++q)
    for (std::size_t t = 0; t < d.size(); ++t)
      if (d[q][t]) f[q] = static_cast<int>(t);
  return f;
}

struct AutProfile {
  std::vector<int> krt;  // -1 = never
  int reset = -1;
};

/// Forward BFS over the transformation monoid, composing left to right.
inline AutProfile transformation_bfs(const std::vector<Func>& letters, std::size_t n) {
  AutProfile p;
  p.krt.assign(n + 1, -1);
  auto fiber = [&](const Func& f) {
    std::vector<int> c(n, 0);
    int best = 0;
    for (int x : f) best = std::max(best, ++c[x]);
    return best;
  };
  Func id(n);
  for (std::size_t q = 0; q < n; ++q) id[q] = static_cast<int>(q);
  std::set<Func> seen{id};
  std::vector<Func> frontier{id};
  if (n == 1) p.reset = 0;
  for (int len = 1; !frontier.empty(); ++len) {
    std::vector<Func> next;
    for (const auto& f : frontier)
      for (const auto& a : letters) {
        Func g(n);
        for (std::size_t q = 0; q < n; ++q) g[q] = a[f[q]];
        if (!seen.insert(g).second) continue;
        const int w = fiber(g);
        for (int k = 2; k <= w; ++k)
          if (p.krt[k] < 0) p.krt[k] = len;
        if (p.reset < 0 && w == static_cast<int>(n)) p.reset = len;
        next.push_back(std::move(g));
      }
    frontier.swap(next);
  }
  return p;
}

// --------------------------------------------------------------------- bounds

/// U~^k_h(n) by plain memoized recursion over GMP rationals.
inline mpq_class tilde_u(long n, long k, long h, std::map<long, mpq_class>& memo) {
  if (h >= k) return 0;
  if (auto it = memo.find(h); it != memo.end()) return it->second;
  auto ahat = [&](long p) {
    const long spread = (n - h + p - 1) / p;
    return std::max({n - h * (h - 1) - 1, spread, 1L});
  };
  mpq_class best = 0;
  for (long p = 1; p <= std::min(h, n - h); ++p) {
    mpq_class jump = tilde_u(n, k, h + p, memo) + mpq_class(n * (n - 1), 2);
    mpq_class crawl = tilde_u(n, k, h + 1, memo) + mpq_class(n * (n + 1 - ahat(p)), 2);
    jump.canonicalize();
    crawl.canonicalize();
    best = std::max(best, std::min(jump, crawl));
  }
  memo[h] = best;
  return best;
}

inline mpq_class tilde_u(long n, long k, long h) {
  std::map<long, mpq_class> memo;
  return tilde_u(n, k, h, memo);
}

struct Akn {
  bool member = false;
  int value = -1;
};

/// a_k^n(A) by direct set comparison of column supports.
inline Akn akn(const Dense& a, int k) {
  const int n = static_cast<int>(a.size());
  Akn r;
  if (!nz(a)) return r;
  bool has_k = false;
  for (int t = 0; t < n; ++t) {
    if (row_weight(a, t) > k || col_weight(a, t) > k) return r;
    has_k = has_k || col_weight(a, t) == k;
  }
  if (!has_k) return r;
  r.member = true;
  for (int c = 0; c < n; ++c) {
    if (col_weight(a, c) != k) continue;
    int escaping = 0;
    for (int i = 0; i < n; ++i) {
      bool inside = true;
      for (int row = 0; row < n; ++row)
        if (a[row][i] && !a[row][c]) inside = false;
      if (!inside) ++escaping;
    }
    if (r.value < 0 || escaping < r.value) r.value = escaping;
  }
  return r;
}

// ------------------------------------------------------------------ generators

inline primrt::BoolMatrix random_nz(std::mt19937_64& rng, std::size_t n, double density = 0.35) {
  std::bernoulli_distribution coin(density);
  for (;;) {
    primrt::BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (coin(rng)) m.set(i, j);
    if (primrt::is_nz(m)) return m;
  }
}

inline primrt::MatrixSet random_nz_set(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                       double density = 0.35) {
  std::vector<primrt::BoolMatrix> gens;
  for (std::size_t g = 0; g < m; ++g) gens.push_back(random_nz(rng, n, density));
  return primrt::MatrixSet(std::move(gens));
}

/// Rejection-samples sets that the closure oracle finds primitive.
inline primrt::MatrixSet random_primitive_set(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                              double density = 0.35) {
  for (;;) {
    auto s = random_nz_set(rng, n, m, density);
    if (primitive_by_closure(dense(s))) return s;
  }
}

}  // namespace oracle

#include "primrt/akn.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "primrt/error.hpp"

namespace primrt {

namespace {

using Int = std::int64_t;

Int ceil_div(Int a, Int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void require_nk(std::size_t n, std::size_t k) {
  if (n < 2 || k < 2 || k + 1 > n) {
    throw Error(ErrorKind::out_of_range, "need n >= 2 and 2 <= k <= n-1, got n = " +
                                             std::to_string(n) + ", k = " + std::to_string(k));
  }
}

Int merge_term(std::size_t n, std::size_t k) {
  return static_cast<Int>(n) - static_cast<Int>(k) * static_cast<Int>(k - 1) - 1;
}

}  // namespace

std::size_t akn_lower(std::size_t n, std::size_t k) {
  require_nk(n, k);
  const Int spread = ceil_div(static_cast<Int>(n - k), static_cast<Int>(k));
  return static_cast<std::size_t>(std::max({merge_term(n, k), spread, Int{1}}));
}

std::size_t akn_upper(std::size_t n, std::size_t k) {
  require_nk(n, k);
  const Int merge = merge_term(n, k);
  const Int spread = ceil_div(static_cast<Int>(n - k), static_cast<Int>(k));
  return static_cast<std::size_t>(merge >= spread ? merge : spread);
}

std::size_t akp_hat(std::size_t n, std::size_t k, std::size_t p) {
  if (n < 3 || k < 2 || k >= n || p < 1 || p > std::min(k, n - k)) {
    throw Error(ErrorKind::out_of_range,
                "need n >= 3, 2 <= k < n, 1 <= p <= min(k, n-k), got n = " + std::to_string(n) +
                    ", k = " + std::to_string(k) + ", p = " + std::to_string(p));
  }
  const Int spread = ceil_div(static_cast<Int>(n - k), static_cast<Int>(p));
  return static_cast<std::size_t>(std::max({merge_term(n, k), spread, Int{1}}));
}

AknEvaluation evaluate_akn(const BoolMatrix& a, std::size_t k) {
  using Word = BoolMatrix::Word;
  AknEvaluation ev;
  const std::size_t n = a.n();
  if (k < 1 || k >= n) {
    ev.membership = Membership::k_out_of_range;
    return ev;
  }
  if (!is_nz(a)) {
    ev.membership = Membership::not_nz;
    return ev;
  }
  const WeightProfile wp = weight_profile(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (wp.per_row[i] > k) {
      ev.membership = Membership::heavy_row;
      ev.offending_index = i;
      return ev;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (wp.per_column[j] > k) {
      ev.membership = Membership::heavy_column;
      ev.offending_index = j;
      return ev;
    }
    if (wp.per_column[j] == k) ev.heavy_columns.push_back(j);
  }
  if (ev.heavy_columns.empty()) {
    ev.membership = Membership::no_weight_k_column;
    return ev;
  }
  ev.membership = Membership::member;

  // Row i of the transpose is the support of column i.
  const BoolMatrix cols = a.transposed();
  auto diff = [&](std::size_t i, std::size_t c) {
    std::size_t count = 0;
    auto ci = cols.row(i);
    auto cc = cols.row(c);
    for (std::size_t w = 0; w < ci.size(); ++w) {
      count += static_cast<std::size_t>(std::popcount(static_cast<Word>(ci[w] & ~cc[w])));
    }
    return count;
  };

  std::vector<std::size_t> escaping(ev.heavy_columns.size(), 0);
  std::vector<std::size_t> widest(ev.heavy_columns.size(), 0);
  for (std::size_t t = 0; t < ev.heavy_columns.size(); ++t) {
    const std::size_t c = ev.heavy_columns[t];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const std::size_t d = diff(i, c);
      if (d > 0) ++escaping[t];
      widest[t] = std::max(widest[t], d);
    }
  }
  ev.value = escaping[0];
  ev.argmin_column = ev.heavy_columns[0];
  for (std::size_t t = 1; t < escaping.size(); ++t) {
    if (escaping[t] < ev.value) {
      ev.value = escaping[t];
      ev.argmin_column = ev.heavy_columns[t];
    }
  }
  ev.p = *std::max_element(widest.begin(), widest.end());
  bool first = true;
  for (std::size_t t = 0; t < escaping.size(); ++t) {
    if (widest[t] != ev.p) continue;
    ev.p_columns.push_back(ev.heavy_columns[t]);
    if (first || escaping[t] < ev.refined_value) ev.refined_value = escaping[t];
    first = false;
  }
  return ev;
}

WitnessMatrix build_witness(std::size_t n, std::size_t k) {
  require_nk(n, k);
  const Int merge = merge_term(n, k);
  const auto spread = static_cast<std::size_t>(ceil_div(static_cast<Int>(n - k), static_cast<Int>(k)));
  const std::size_t v = spread + 1;

  WitnessMatrix w;
  w.matrix = BoolMatrix(n);
  w.claimed_a = akn_upper(n, k);
  w.kind = merge >= static_cast<Int>(spread) ? WitnessKind::hat : WitnessKind::tilde;

  // Left block: column b is all-ones on row block b (blocks of k rows, the
  // last one possibly shorter).
  for (std::size_t b = 0; b < v; ++b) {
    const std::size_t end = std::min(n, k * (b + 1));
    for (std::size_t r = k * b; r < end; ++r) w.matrix.set(r, b);
  }

  if (w.kind == WitnessKind::hat) {
    // Top row r owns k-1 weight-one columns; then a shifted identity below.
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t t = 0; t + 1 < k; ++t) w.matrix.set(r, v + r * (k - 1) + t);
    }
    const auto alpha = static_cast<std::size_t>(merge) - spread;
    const std::size_t first = v + k * (k - 1);
    for (std::size_t t = 0; t < alpha; ++t) w.matrix.set(k + t, first + t);
  } else {
    // Remaining n - v columns dealt to the top rows, k-1 per row.
    for (std::size_t t = 0; v + t < n; ++t) w.matrix.set(t / (k - 1), v + t);
  }
  return w;
}

}  // namespace primrt

#include "primrt/heuristic.hpp"

#include <optional>
#include <string>

#include "primrt/error.hpp"
#include "primrt/pair_digraph.hpp"

namespace primrt {

namespace {

std::string certificate(const PrimitivityReport& r) {
  if (r.unreachable) {
    return "set is reducible: state " + std::to_string(r.unreachable->second + 1) +
           " is unreachable from state " + std::to_string(r.unreachable->first + 1);
  }
  return "set is not primitive: pair (" + std::to_string(r.failing_vertex->i + 1) + "," +
         std::to_string(r.failing_vertex->j + 1) + ") reaches no singleton";
}

// supp(A_{*j}) within supp(A_{*i}), read off rows of the transpose.
bool column_within(const BoolMatrix& cols, std::size_t j, std::size_t i) {
  auto cj = cols.row(j);
  auto ci = cols.row(i);
  for (std::size_t w = 0; w < cj.size(); ++w) {
    if ((cj[w] & ~ci[w]) != 0) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(HeuristicMode mode) noexcept {
  return mode == HeuristicMode::specific ? "specific" : "any";
}

HeuristicTrace run_heuristic(const MatrixSet& set, HeuristicMode mode) {
  const PrimitivityReport report = is_primitive(set);
  if (!report.primitive) throw Error(ErrorKind::not_primitive, certificate(report));
  const std::size_t n = set.n();

  // Seed: heaviest column over all generators, lowest generator then column.
  std::size_t seed = 0;
  std::size_t column = 0;
  std::size_t best = 0;
  for (std::size_t g = 0; g < set.size(); ++g) {
    const WeightProfile wp = weight_profile(set[g]);
    if (wp.max_col_weight > best) {
      best = wp.max_col_weight;
      seed = g;
      column = wp.argmax_col;
    }
  }

  HeuristicTrace trace;
  trace.word.push_back(seed);
  BoolMatrix a = set[seed];
  trace.support_sizes.push_back(a.col_weight(column));

  const PairDigraph pd = build_pair_digraph(set);
  std::optional<SingletonDistances> dist;
  if (mode == HeuristicMode::any) dist = singleton_distances(pd);
  else dist = singleton_distances(pd, PairVertex(column, column));

  while (a.col_weight(column) < n) {
    const BoolMatrix cols = a.transposed();
    std::size_t pick = n;
    std::size_t pick_distance = SingletonDistances::unreachable;
    for (std::size_t j = 0; j < n; ++j) {
      if (column_within(cols, j, column)) continue;
      const std::size_t d = dist->distance(pd.index(PairVertex(column, j)));
      if (d < pick_distance) {
        pick = j;
        pick_distance = d;
      }
    }
    // Primitivity guarantees a candidate with a finite distance.
    const MergingWord mw = merging_word(pd, *dist, PairVertex(column, pick));
    for (std::size_t g : mw.word) {
      trace.word.push_back(g);
      a = a * set[g];
    }
    column = mw.target.i;
    ++trace.iterations;
    trace.support_sizes.push_back(a.col_weight(column));
  }
  trace.final = a;
  trace.column_index = column;

  // Prefix weight profiles over rows and columns.
  trace.per_k_length.assign(n + 1, 0);
  std::size_t reached = 1;
  BoolMatrix prefix = BoolMatrix::identity(n);
  for (std::size_t len = 1; len <= trace.word.size() && reached < n; ++len) {
    prefix = prefix * set[trace.word[len - 1]];
    const std::size_t w = weight_profile(prefix).max_weight();
    for (; reached < w; ++reached) trace.per_k_length[reached + 1] = len;
  }
  return trace;
}

}  // namespace primrt

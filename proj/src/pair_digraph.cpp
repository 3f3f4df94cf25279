#include "primrt/pair_digraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace primrt {

namespace {

std::vector<std::size_t> support(std::span<const BoolMatrix::Word> row) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < row.size(); ++w) {
    BoolMatrix::Word bits = row[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string show(PairVertex v) {
  return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + ")";
}

}  // namespace

PairDigraph build_pair_digraph(const MatrixSet& set) {
  set.require_nz();
  PairDigraph pd;
  const std::size_t n = set.n();
  pd.n_ = n;
  pd.generators_ = set.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) pd.vertices_.emplace_back(i, j);
  }
  pd.out_.resize(pd.vertices_.size());
  pd.in_.resize(pd.vertices_.size());

  std::vector<std::size_t> targets;
  for (std::size_t g = 0; g < set.size(); ++g) {
    const BoolMatrix& m = set[g];
    std::vector<std::vector<std::size_t>> rows(n);
    for (std::size_t s = 0; s < n; ++s) rows[s] = support(m.row(s));
    for (std::size_t v = 0; v < pd.vertices_.size(); ++v) {
      const PairVertex pv = pd.vertices_[v];
      targets.clear();
      for (std::size_t x : rows[pv.i]) {
        for (std::size_t y : rows[pv.j]) targets.push_back(pd.index(PairVertex(x, y)));
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (std::size_t t : targets) {
        pd.out_[v].push_back({t, g});
        pd.in_[t].push_back({v, g});
      }
    }
  }
  return pd;
}

SingletonDistances singleton_distances(const PairDigraph& pd, std::optional<PairVertex> target) {
  constexpr std::size_t none = SingletonDistances::unreachable;
  SingletonDistances d;
  d.target_ = target;
  const std::size_t count = pd.vertex_count();
  d.distance_.assign(count, none);
  d.label_.assign(count, none);
  d.next_.assign(count, none);

  std::deque<std::size_t> queue;
  if (target) {
    const std::size_t t = pd.index(*target);
    d.distance_[t] = 0;
    queue.push_back(t);
  } else {
    for (std::size_t v = 0; v < count; ++v) {
      if (pd.vertex(v).singleton()) {
        d.distance_[v] = 0;
        queue.push_back(v);
      }
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& e : pd.predecessors(u)) {
      if (d.distance_[e.target] == none) {
        d.distance_[e.target] = d.distance_[u] + 1;
        queue.push_back(e.target);
      }
    }
  }
  for (std::size_t v = 0; v < count; ++v) {
    if (d.distance_[v] == none || d.distance_[v] == 0) continue;
    for (const auto& e : pd.successors(v)) {
      if (d.distance_[e.target] + 1 == d.distance_[v]) {
        d.label_[v] = e.label;
        d.next_[v] = e.target;
        break;
      }
    }
  }
  return d;
}

NoPathError::NoPathError(PairVertex source)
    : Error(ErrorKind::no_path, "no path from pair " + show(source) + " to a singleton"),
      source_(source) {}

MergingWord merging_word(const PairDigraph& pd, const SingletonDistances& dist,
                         PairVertex source) {
  std::size_t v = pd.index(source);
  if (!dist.reachable(v)) throw NoPathError(source);
  MergingWord mw;
  mw.source = source;
  mw.word.reserve(dist.distance(v));
  while (dist.distance(v) != 0) {
    mw.word.push_back(dist.first_label(v));
    v = dist.next_vertex(v);
  }
  mw.target = pd.vertex(v);
  return mw;
}

MergingWord merging_word(const PairDigraph& pd, PairVertex source,
                         std::optional<PairVertex> target) {
  return merging_word(pd, singleton_distances(pd, target), source);
}

PrimitivityReport is_primitive(const MatrixSet& set) {
  set.require_nz();
  PrimitivityReport report;
  report.unreachable = unreachable_pair(set);
  report.irreducible = !report.unreachable.has_value();
  if (!report.irreducible) return report;
  const PairDigraph pd = build_pair_digraph(set);
  const SingletonDistances dist = singleton_distances(pd);
  for (std::size_t v = 0; v < pd.vertex_count(); ++v) {
    if (!dist.reachable(v)) {
      report.failing_vertex = pd.vertex(v);
      return report;
    }
  }
  report.primitive = true;
  return report;
}

}  // namespace primrt

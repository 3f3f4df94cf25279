#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "primrt/bool_matrix.hpp"
#include "primrt/error.hpp"

namespace primrt {

/// Unordered state pair, stored normalized with i <= j.
struct PairVertex {
  std::size_t i = 0;
  std::size_t j = 0;

  PairVertex() = default;
  PairVertex(std::size_t a, std::size_t b) : i(a < b ? a : b), j(a < b ? b : a) {}

  bool singleton() const noexcept { return i == j; }
  friend bool operator==(const PairVertex&, const PairVertex&) = default;
};

/// Labeled digraph on state pairs. (i,j) -> (i',j') carries generator g when
/// g(i,i') = g(j,j') = 1 or g(i,j') = g(j,i') = 1.
class PairDigraph {
 public:
  struct Edge {
    std::size_t target;
    std::size_t label;
  };

  std::size_t n() const noexcept { return n_; }
  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  std::size_t index(PairVertex v) const noexcept {
    return v.i * n_ - v.i * (v.i == 0 ? 0 : v.i - 1) / 2 + (v.j - v.i);
  }
  const PairVertex& vertex(std::size_t idx) const noexcept { return vertices_[idx]; }

  /// Outgoing edges sorted by (label, target index).
  const std::vector<Edge>& successors(std::size_t idx) const noexcept { return out_[idx]; }
  const std::vector<Edge>& predecessors(std::size_t idx) const noexcept { return in_[idx]; }

  friend PairDigraph build_pair_digraph(const MatrixSet& set);

 private:
  std::size_t n_ = 0;
  std::size_t generators_ = 0;
  std::vector<PairVertex> vertices_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
};

/// Requires every generator NZ (irreducibility is not needed to build).
PairDigraph build_pair_digraph(const MatrixSet& set);

/// Backward BFS result: distance to the nearest singleton (or to a fixed
/// target vertex) plus the canonical first step of a shortest path.
class SingletonDistances {
 public:
  static constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

  bool reachable(std::size_t idx) const noexcept { return distance_[idx] != unreachable; }
  std::size_t distance(std::size_t idx) const noexcept { return distance_[idx]; }
  /// Generator index of the first edge on the canonical shortest path.
  std::size_t first_label(std::size_t idx) const noexcept { return label_[idx]; }
  std::size_t next_vertex(std::size_t idx) const noexcept { return next_[idx]; }
  const std::optional<PairVertex>& target() const noexcept { return target_; }
  std::size_t size() const noexcept { return distance_.size(); }

  friend SingletonDistances singleton_distances(const PairDigraph& pd,
                                                std::optional<PairVertex> target);

 private:
  std::optional<PairVertex> target_;
  std::vector<std::size_t> distance_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> next_;
};

/// Nearest-singleton distances by default; a target restricts to one vertex.
/// The canonical step at a vertex is the lowest generator, then the lowest
/// successor index, that decreases the distance by one.
SingletonDistances singleton_distances(const PairDigraph& pd,
                                       std::optional<PairVertex> target = std::nullopt);

struct MergingWord {
  PairVertex source;
  PairVertex target;
  std::vector<std::size_t> word;
};

class NoPathError : public Error {
 public:
  explicit NoPathError(PairVertex source);
  const PairVertex& source() const noexcept { return source_; }

 private:
  PairVertex source_;
};

/// Shortest labeled path from `source` to a singleton; throws NoPathError.
MergingWord merging_word(const PairDigraph& pd, PairVertex source,
                         std::optional<PairVertex> target = std::nullopt);
MergingWord merging_word(const PairDigraph& pd, const SingletonDistances& dist,
                         PairVertex source);

struct PrimitivityReport {
  bool primitive = false;
  bool irreducible = false;
  /// (from, to) with `to` unreachable from `from`, for reducible sets.
  std::optional<std::pair<std::size_t, std::size_t>> unreachable;
  /// A pair vertex with no path to any singleton.
  std::optional<PairVertex> failing_vertex;
};

/// Primitivity of an NZ set: irreducible and every pair reaches a singleton.
PrimitivityReport is_primitive(const MatrixSet& set);

}  // namespace primrt

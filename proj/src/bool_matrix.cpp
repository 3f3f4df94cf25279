#include "primrt/bool_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "primrt/error.hpp"

namespace primrt {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Mask of the valid bits in the last word of a row.
BoolMatrix::Word tail_mask(std::size_t n) {
  const std::size_t r = n % 64;
  return r == 0 ? ~BoolMatrix::Word{0} : ((BoolMatrix::Word{1} << r) - 1);
}

}  // namespace

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

BoolMatrix::BoolMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BoolMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n_) {
      throw Error(ErrorKind::dimension, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(r.size()) + " entries, expected " +
                                            std::to_string(n_));
    }
    std::size_t j = 0;
    for (int v : r) set(i, j++, v != 0);
    ++i;
  }
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BoolMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::dimension, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) +
                                            " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::ones(std::size_t n) {
  BoolMatrix m(n);
  if (n == 0) return m;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = m.row(i);
    std::fill(r.begin(), r.end(), ~Word{0});
    r.back() &= tail_mask(n);
  }
  return m;
}

std::size_t BoolMatrix::row_weight(std::size_t i) const noexcept {
  std::size_t w = 0;
  for (Word x : row(i)) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::size_t BoolMatrix::col_weight(std::size_t j) const noexcept {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n_; ++i) w += get(i, j) ? 1 : 0;
  return w;
}

std::vector<BoolMatrix::Word> BoolMatrix::column_support(std::size_t j) const {
  std::vector<Word> col(words_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i, j)) col[i / 64] |= Word{1} << (i % 64);
  }
  return col;
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (get(i, j)) t.set(j, i);
    }
  }
  return t;
}

bool BoolMatrix::is_row_stochastic() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (row_weight(i) != 1) return false;
  }
  return true;
}

bool BoolMatrix::is_permutation() const noexcept {
  if (!is_row_stochastic()) return false;
  for (std::size_t j = 0; j < n_; ++j) {
    if (col_weight(j) != 1) return false;
  }
  return true;
}

bool BoolMatrix::all_ones() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (row_weight(i) != n_) return false;
  }
  return true;
}

bool BoolMatrix::has_all_ones_column() const noexcept {
  if (n_ == 0) return false;
  // AND of all rows leaves exactly the all-ones columns.
  std::vector<Word> acc(row(0).begin(), row(0).end());
  for (std::size_t i = 1; i < n_; ++i) {
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) acc[w] &= r[w];
  }
  return std::any_of(acc.begin(), acc.end(), [](Word w) { return w != 0; });
}

bool BoolMatrix::leq(const BoolMatrix& other) const noexcept {
  if (other.n_ != n_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if ((bits_[k] & ~other.bits_[k]) != 0) return false;
  }
  return true;
}

std::string BoolMatrix::to_string() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::dimension, "cannot multiply " + std::to_string(a.n()) + "x" +
                                          std::to_string(a.n()) + " by " +
                                          std::to_string(b.n()) + "x" + std::to_string(b.n()));
  }
  const std::size_t n = a.n();
  const std::size_t words = a.words_per_row();
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto dst = out.row(i);
    auto src = a.row(i);
    for (std::size_t w = 0; w < words; ++w) {
      BoolMatrix::Word bits = src[w];
      while (bits != 0) {
        const std::size_t s = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        auto brow = b.row(s);
        for (std::size_t v = 0; v < words; ++v) dst[v] |= brow[v];
      }
    }
  }
  return out;
}

bool is_nz(const BoolMatrix& a) noexcept {
  const std::size_t n = a.n();
  if (n == 0) return false;
  std::vector<BoolMatrix::Word> cols(a.words_per_row(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = a.row(i);
    bool any = false;
    for (std::size_t w = 0; w < r.size(); ++w) {
      any = any || r[w] != 0;
      cols[w] |= r[w];
    }
    if (!any) return false;
  }
  std::size_t covered = 0;
  for (auto w : cols) covered += static_cast<std::size_t>(std::popcount(w));
  return covered == n;
}

WeightProfile weight_profile(const BoolMatrix& a) {
  const std::size_t n = a.n();
  WeightProfile p;
  p.per_row.resize(n, 0);
  p.per_column.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    p.per_row[i] = a.row_weight(i);
    auto r = a.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
      BoolMatrix::Word bits = r[w];
      while (bits != 0) {
        ++p.per_column[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.per_row[i] > p.max_row_weight) {
      p.max_row_weight = p.per_row[i];
      p.argmax_row = i;
    }
    if (p.per_column[i] > p.max_col_weight) {
      p.max_col_weight = p.per_column[i];
      p.argmax_col = i;
    }
  }
  return p;
}

MatrixSet::MatrixSet(std::vector<BoolMatrix> generators, std::vector<std::string> labels)
    : generators_(std::move(generators)), labels_(std::move(labels)) {
  if (generators_.empty()) throw Error(ErrorKind::dimension, "matrix set has no generators");
  n_ = generators_.front().n();
  if (n_ == 0) throw Error(ErrorKind::dimension, "matrix dimension must be at least 1");
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].n() != n_) {
      throw Error(ErrorKind::dimension, "generator " + std::to_string(g + 1) + " is " +
                                            std::to_string(generators_[g].n()) + "x" +
                                            std::to_string(generators_[g].n()) +
                                            ", expected " + std::to_string(n_) + "x" +
                                            std::to_string(n_));
    }
  }
  if (labels_.empty()) {
    for (std::size_t g = 0; g < generators_.size(); ++g) labels_.push_back("M" + std::to_string(g + 1));
  } else if (labels_.size() != generators_.size()) {
    throw Error(ErrorKind::dimension, "label count does not match generator count");
  }
}

void MatrixSet::require_nz() const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto p = weight_profile(generators_[g]);
    for (std::size_t i = 0; i < n_; ++i) {
      if (p.per_row[i] == 0) {
        throw Error(ErrorKind::not_nz, "generator " + labels_[g] + " has a zero row " +
                                           std::to_string(i + 1));
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (p.per_column[j] == 0) {
        throw Error(ErrorKind::not_nz, "generator " + labels_[g] + " has a zero column " +
                                           std::to_string(j + 1));
      }
    }
  }
}

bool is_nz(const MatrixSet& set) noexcept {
  return std::all_of(set.generators().begin(), set.generators().end(),
                     [](const BoolMatrix& m) { return is_nz(m); });
}

std::optional<std::pair<std::size_t, std::size_t>> unreachable_pair(const MatrixSet& set) {
  const std::size_t n = set.n();
  BoolMatrix sum(n);
  for (const auto& g : set.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto dst = sum.row(i);
      auto src = g.row(i);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
    }
  }
  // Strongly connected iff state 0 reaches everything forward and backward.
  auto reach = [n](const BoolMatrix& adj) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v] && adj.get(u, v)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  };
  const auto fwd = reach(sum);
  for (std::size_t v = 0; v < n; ++v) {
    if (!fwd[v]) return std::make_pair(std::size_t{0}, v);
  }
  const auto bwd = reach(sum.transposed());
  for (std::size_t v = 0; v < n; ++v) {
    if (!bwd[v]) return std::make_pair(v, std::size_t{0});
  }
  return std::nullopt;
}

MatrixSet transpose_set(const MatrixSet& set) {
  std::vector<BoolMatrix> gens;
  std::vector<std::string> labels;
  gens.reserve(set.size());
  for (std::size_t g = 0; g < set.size(); ++g) {
    gens.push_back(set[g].transposed());
    std::string label = set.label(g);
    if (!label.empty() && label.back() == '\'') {
      label.pop_back();
    } else {
      label.push_back('\'');
    }
    labels.push_back(std::move(label));
  }
  return MatrixSet(std::move(gens), std::move(labels));
}

}  // namespace primrt

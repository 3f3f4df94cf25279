#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace primrt {

/// Square 0/1 matrix over the boolean semiring.
///
/// Rows are stored as packed 64-bit words so that products reduce to
/// word-parallel ORs of rows. Indices are 0-based throughout the library;
/// the CLI converts to 1-based when printing.
class BoolMatrix {
 public:
  using Word = std::uint64_t;

  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n);

  /// Builds from nested 0/1 lists; any nonzero entry is stored as 1.
  BoolMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix zero(std::size_t n) { return BoolMatrix(n); }
  static BoolMatrix ones(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    Word& w = bits_[i * words_ + j / 64];
    const Word mask = Word{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }
  std::span<Word> row(std::size_t i) noexcept {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t row_weight(std::size_t i) const noexcept;
  std::size_t col_weight(std::size_t j) const noexcept;

  /// Column support as a packed row-index bitset (same word layout as a row).
  std::vector<Word> column_support(std::size_t j) const;

  BoolMatrix transposed() const;

  bool is_row_stochastic() const noexcept;
  bool is_permutation() const noexcept;
  bool all_ones() const noexcept;
  bool has_all_ones_column() const noexcept;

  /// Entrywise a <= b.
  bool leq(const BoolMatrix& other) const noexcept;

  std::span<const Word> words() const noexcept { return bits_; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Boolean product: (ab)(i,j) = OR_s a(i,s) AND b(s,j).
BoolMatrix boolean_product(const BoolMatrix& a, const BoolMatrix& b);

inline BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  return boolean_product(a, b);
}

/// No zero row and no zero column.
bool is_nz(const BoolMatrix& a) noexcept;

struct WeightProfile {
  std::size_t max_col_weight = 0;
  std::size_t max_row_weight = 0;
  std::size_t argmax_col = 0;
  std::size_t argmax_row = 0;
  std::vector<std::size_t> per_column;
  std::vector<std::size_t> per_row;

  std::size_t max_weight() const noexcept {
    return max_col_weight > max_row_weight ? max_col_weight : max_row_weight;
  }
};

/// Exact popcounts; argmax ties go to the lowest index.
WeightProfile weight_profile(const BoolMatrix& a);

/// Ordered, named list of same-dimension generators.
class MatrixSet {
 public:
  MatrixSet() = default;
  explicit MatrixSet(std::vector<BoolMatrix> generators,
                     std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const BoolMatrix& operator[](std::size_t g) const { return generators_[g]; }
  const std::vector<BoolMatrix>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t g) const { return labels_[g]; }

  /// Throws Error(not_nz) naming the first offending generator and line.
  void require_nz() const;

  friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BoolMatrix> generators_;
  std::vector<std::string> labels_;
};

bool is_nz(const MatrixSet& set) noexcept;

/// Pair (from, to) such that `to` is not reachable from `from` in the digraph
/// of the generator sum, or nullopt when that digraph is strongly connected.
std::optional<std::pair<std::size_t, std::size_t>> unreachable_pair(const MatrixSet& set);

inline bool is_irreducible(const MatrixSet& set) { return !unreachable_pair(set).has_value(); }

/// Transposes each generator; labels get a trailing apostrophe.
MatrixSet transpose_set(const MatrixSet& set);

}  // namespace primrt

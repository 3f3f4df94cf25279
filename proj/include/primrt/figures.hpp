#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primrt/bool_matrix.hpp"
#include "primrt/bounds.hpp"
#include "primrt/heuristic.hpp"
#include "primrt/rational.hpp"
#include "primrt/semigroup.hpp"

namespace primrt {

/// Long-format table: n,k,quantity,value,ceiling. Rationals print as "p/q",
/// integers bare; a missing value prints as "NA" in both value columns.
class CsvTable {
 public:
  struct Row {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::string quantity;
    std::optional<Rational> value;
  };

  void add(std::size_t n, std::optional<std::size_t> k, std::string quantity,
           std::optional<Rational> value);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::string render() const;

  static constexpr std::string_view header = "n,k,quantity,value,ceiling";

 private:
  std::vector<Row> rows_;
};

struct FigureOptions {
  std::vector<MatrixSet> sets;  // fig3, fig4, fig5
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> k;
  std::optional<std::size_t> k_max;
  MidrangeRule rule = MidrangeRule::quotient;
  HeuristicMode mode = HeuristicMode::specific;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> max_states;
};

std::vector<std::string> figure_names();

/// Throws Error(usage) for an unknown name or a missing set file.
CsvTable figure(std::string_view name, const FigureOptions& opts);

/// Per-k rows of B, F and the F argmin for one n.
void append_bounds(CsvTable& t, std::size_t n, std::size_t k_lo, std::size_t k_hi,
                   MidrangeRule rule);

}  // namespace primrt

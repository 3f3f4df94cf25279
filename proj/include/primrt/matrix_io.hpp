#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primrt/bool_matrix.hpp"

namespace primrt {

/// Matrix-set text format:
///
///   n m
///   <n lines of n characters>     (matrix 1)
///   <blank line>
///   ...                           (matrices 2..m)
///
/// Lines starting with '#' are comments; "# name: X" names the next matrix.
/// Digits above 1 are read as 1, CR line endings are tolerated.
MatrixSet parse_set(std::istream& in);
MatrixSet parse_set_string(std::string_view text);
MatrixSet parse_set_file(const std::string& path);

std::string serialize(const MatrixSet& set);

/// The named sets shipped with the workbench: "example", "cpr", "kari".
std::optional<MatrixSet> builtin_set(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace primrt

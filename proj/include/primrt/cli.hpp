#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "primrt/error.hpp"

namespace primrt {

/// Exit status for a failure category; 0 is success, 1 an internal error.
int exit_code(ErrorKind kind) noexcept;

/// Runs one workbench command. `args` excludes the program name. Data goes
/// to `out`; errors go to `err` as "error[category]: message".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primrt

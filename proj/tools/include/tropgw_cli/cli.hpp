#pragma once

#include "tropgw/errors.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace tropgw::cli {

/// Process exit code for a failure category; 0 is success.
int exit_code(ErrorCategory category) noexcept;

/// Runs one command line (without the program name). Reports go to `out`,
/// errors to `err` as "error: <category>: <message>".
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tropgw::cli

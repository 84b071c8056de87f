#pragma once

// Command dispatch for the `curvcmp` tool.
//
// Exit codes:
//   0  success (also --help)
//   1  unexpected internal failure
//   2  bad flags or arguments, unreadable/unwritable files, malformed CSV
//   3  infeasible boundary data
//   4  domain, singularity or grid errors
//   5  threshold search not bracketed

#include <iosfwd>
#include <string>
#include <vector>

#include "curvcmp/error.hpp"

namespace curvcmp::cli {

int exit_code(ErrorKind kind) noexcept;

/// args excludes the program name. Sample input is read from `in` when a
/// command's --in is absent or "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace curvcmp::cli

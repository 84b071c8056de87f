#pragma once

// Two-column sample files: a `t,g` header, one node per line, 17 significant
// digits, LF line endings.

#include <iosfwd>
#include <string>

#include "curvcmp/sampled_function.hpp"

namespace curvcmp::cli {

/// Shortest text that is at most 17 significant digits and parses back to x.
std::string format_double(double x);

/// Same idea with a fixed 17-digit %g layout, the CSV wire format.
std::string format_csv_double(double x);

void write_csv(std::ostream& out, const SampledFunction& f);

/// Throws Error(argument) on a malformed header, row or number; the
/// SampledFunction constructor supplies grid/domain errors.
SampledFunction read_csv(std::istream& in);

}  // namespace curvcmp::cli

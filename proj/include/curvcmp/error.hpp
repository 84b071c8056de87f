#pragma once

#include <stdexcept>
#include <string>

namespace curvcmp {

enum class ErrorKind {
  argument,    // malformed input (degenerate chord, bad stencil order, ...)
  infeasible,  // boundary data not realizable by a comparison function
  domain,      // guard violation: nonpositive values, spherical size, clamp
  singular,    // derivative divides by a vanishing factor
  grid,        // nonuniform or too-short grid, chord endpoint off grid
  bracket,     // threshold bisection endpoints classify identically
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace curvcmp

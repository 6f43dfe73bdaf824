#pragma once

#include <stdexcept>
#include <string>

namespace pldual {

enum class ErrorKind {
  singular_exponent,   // beta == -2, the coordinate map degenerates
  domain,              // argument outside the mathematical domain
  convergence,         // iterative method did not reach its tolerance
  window_too_small,    // eigensolver box does not hold / resolve the level
  grid_too_coarse,     // finite-difference truncation dominates a residual
  insufficient_points, // sequence analysis needs more samples
  usage,               // malformed command-line input
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace pldual

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace testing {

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Seeded draws for the property tests. A fixed seed keeps failures
// reproducible; the seed is printed by the tests that use it.
struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
};

}  // namespace testing

#include <optional>

#include "pldual/errors.hpp"

namespace testing {

// Kind of the pldual::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<pldual::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const pldual::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing

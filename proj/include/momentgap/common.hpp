// common.hpp -- shared error types, integer helpers, and number formatting.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace momentgap {

// Bad user input or violated precondition. CLI exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A resource guard tripped: dimension cap or search budget exceeded. CLI exit code 3.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative solver failed to reach its tolerance. CLI exit code 4.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

inline constexpr const char* kVersion = "1.0.0";

// base^exp for small nonnegative exponents; throws GuardError past limit.
std::int64_t ipow_checked(std::int64_t base, int exp, std::int64_t limit,
                          const std::string& what);

// Unchecked base^exp (caller guarantees no overflow).
std::int64_t ipow(std::int64_t base, int exp);

// Shortest round-trip decimal representation (printf %.17g).
std::string format_double(double x);

}  // namespace momentgap

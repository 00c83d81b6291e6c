#include "momentgap/common.hpp"

#include <cstdio>

namespace momentgap {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t ipow_checked(std::int64_t base, int exp, std::int64_t limit,
                          const std::string& what) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) {
      throw GuardError(what + ": dimension " + std::to_string(base) + "^" +
                       std::to_string(exp) + " exceeds guard " +
                       std::to_string(limit));
    }
    r *= base;
  }
  if (r > limit) {
    throw GuardError(what + ": dimension " + std::to_string(r) +
                     " exceeds guard " + std::to_string(limit));
  }
  return r;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace momentgap

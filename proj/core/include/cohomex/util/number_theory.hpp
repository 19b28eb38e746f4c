#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cohomex/errors.hpp"

namespace cohomex::util {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Prime factorization as ascending (prime, multiplicity) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// base^exp, throwing on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw ResourceLimitError("integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

/// Largest e with p^e dividing n (n > 0).
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

/// Exponent e when n == p^e, otherwise -1.
inline int exact_log(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return -1;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1 ? e : -1;
}

}  // namespace cohomex::util

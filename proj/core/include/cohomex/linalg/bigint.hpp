#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cohomex {

/// Arbitrary-precision integer used on every exact path.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline bool fits_u64(const BigInt& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& x) {
  // mpz_get_ui is only 32 bits wide on some platforms; go through limbs.
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline std::size_t bit_length(const BigInt& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace cohomex

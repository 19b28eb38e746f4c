#pragma once

#include <bit>
#include <utility>
#include <cstdint>

#include "cohomex/errors.hpp"
#include "cohomex/util/number_theory.hpp"

namespace cohomex {

/// Arithmetic in Z / p^k with p^k < 2^63. For p = 2 reduction is a bit mask.
class LocalRing {
 public:
  LocalRing(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!util::is_prime(p)) throw PreconditionError("local ring needs a prime");
    if (k == 0) throw PreconditionError("local precision must be positive");
    q_ = util::checked_pow(p, k);
    if (q_ >= (std::uint64_t{1} << 63)) throw PrecisionExhausted("p^k must stay below 2^63");
    two_ = p == 2;
    mask_ = q_ - 1;
  }

  std::uint64_t prime() const { return p_; }
  unsigned precision() const { return k_; }
  std::uint64_t modulus() const { return q_; }

  std::uint64_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(q_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (q_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (two_) return (a * b) & mask_;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }

  /// Valuation of a nonzero residue; k for zero.
  unsigned valuation(std::uint64_t a) const {
    if (a == 0) return k_;
    if (two_) return static_cast<unsigned>(std::countr_zero(a));
    unsigned v = 0;
    while (a % p_ == 0) {
      a /= p_;
      ++v;
    }
    return v;
  }

  /// a / p^v for a residue of valuation >= v, as a residue (upper digits 0).
  std::uint64_t shift_down(std::uint64_t a, unsigned v) const {
    if (two_) return a >> v;
    for (unsigned i = 0; i < v; ++i) a /= p_;
    return a;
  }

  std::uint64_t inverse(std::uint64_t unit) const {
    __int128 t = 0, nt = 1, r = q_, nr = unit % q_;
    while (nr != 0) {
      __int128 quo = r / nr;
      t -= quo * nt;
      std::swap(t, nt);
      r -= quo * nr;
      std::swap(r, nr);
    }
    if (r != 1) throw PreconditionError("inverse of a non-unit");
    if (t < 0) t += q_;
    return static_cast<std::uint64_t>(t);
  }

  /// Signed representative in (-q/2, q/2].
  std::int64_t lift(std::uint64_t a) const {
    return a > q_ / 2 ? -static_cast<std::int64_t>(q_ - a) : static_cast<std::int64_t>(a);
  }

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_ = 1;
  std::uint64_t mask_ = 0;
  bool two_ = false;
};

/// Smallest k with p^k > bound.
inline unsigned precision_for(std::uint64_t p, std::uint64_t bound) {
  unsigned k = 0;
  unsigned __int128 x = 1;
  while (x <= bound) {
    x *= p;
    ++k;
  }
  return k;
}

}  // namespace cohomex

#include "cohomex/cohomology/oracles.hpp"

#include <numeric>

#include "cohomex/errors.hpp"

namespace cohomex {

namespace {

/// Cyclic summands with 0 standing for Z.
std::vector<BigInt> summands(const AbelianGroupInvariants& a) {
  std::vector<BigInt> out(a.free_rank(), 0);
  out.insert(out.end(), a.torsion().begin(), a.torsion().end());
  return out;
}

AbelianGroupInvariants from_summands(const std::vector<BigInt>& s) {
  std::size_t free = 0;
  std::vector<BigInt> tors;
  for (const auto& x : s) {
    if (sgn(x) == 0) {
      ++free;
    } else {
      tors.push_back(x);
    }
  }
  return AbelianGroupInvariants::from_cyclic_orders(free, tors);
}

/// Z/a (x) Z/b with 0 = Z.
BigInt tensor(const BigInt& a, const BigInt& b) {
  if (sgn(a) == 0) return b;
  if (sgn(b) == 0) return a;
  return gcd(a, b);
}

}  // namespace

AbelianGroupInvariants cyclic_oracle(std::uint64_t n, const CoefficientSpec& coeffs,
                                     unsigned degree) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  if (coeffs.is_integral()) {
    if (degree == 0) return AbelianGroupInvariants::free(1);
    if (degree % 2 == 1) return AbelianGroupInvariants::trivial();
    return AbelianGroupInvariants::from_cyclic_orders(0, std::vector<std::uint64_t>{n});
  }
  const std::uint64_t m = coeffs.modulus();
  const std::uint64_t order = degree == 0 ? m : std::gcd(n, m);
  return AbelianGroupInvariants::from_cyclic_orders(0, std::vector<std::uint64_t>{order});
}

AbelianGroupInvariants kunneth(const std::vector<AbelianGroupInvariants>& a,
                               const std::vector<AbelianGroupInvariants>& b, unsigned n) {
  if (a.size() < n + 2 || b.size() < n + 2) {
    throw PreconditionError("Kunneth formula needs degrees 0..n+1 of both factors");
  }
  std::vector<BigInt> out;
  for (unsigned i = 0; i <= n; ++i) {
    for (const auto& x : summands(a[i])) {
      for (const auto& y : summands(b[n - i])) out.push_back(tensor(x, y));
    }
  }
  for (unsigned i = 0; i <= n + 1; ++i) {
    for (const auto& x : summands(a[i])) {
      for (const auto& y : summands(b[n + 1 - i])) {
        if (sgn(x) != 0 && sgn(y) != 0) out.push_back(gcd(x, y));
      }
    }
  }
  return from_summands(out);
}

AbelianGroupInvariants kunneth_oracle(const std::vector<std::uint64_t>& orders, unsigned degree) {
  if (orders.empty()) throw PreconditionError("Kunneth oracle needs at least one factor");
  std::vector<AbelianGroupInvariants> acc;
  for (unsigned d = 0; d <= degree + 1 + orders.size(); ++d) {
    acc.push_back(cyclic_oracle(orders[0], CoefficientSpec::integral(), d));
  }
  for (std::size_t f = 1; f < orders.size(); ++f) {
    // Each pass loses one degree of headroom.
    std::vector<AbelianGroupInvariants> next;
    std::vector<AbelianGroupInvariants> c;
    for (unsigned d = 0; d < acc.size(); ++d) {
      c.push_back(cyclic_oracle(orders[f], CoefficientSpec::integral(), d));
    }
    for (unsigned d = 0; d + 1 < acc.size(); ++d) next.push_back(kunneth(acc, c, d));
    acc = std::move(next);
  }
  return acc[degree];
}

AbelianGroupInvariants universal_coefficients(const AbelianGroupInvariants& hn,
                                              const AbelianGroupInvariants& hn1, std::uint64_t m) {
  if (m < 2) throw PreconditionError("modulus must be at least 2");
  const BigInt mb = from_u64(m);
  std::vector<BigInt> out;
  for (const auto& x : summands(hn)) out.push_back(tensor(x, mb));
  for (const auto& x : hn1.torsion()) out.push_back(gcd(x, mb));
  return from_summands(out);
}

}  // namespace cohomex

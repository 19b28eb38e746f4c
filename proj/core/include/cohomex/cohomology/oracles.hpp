#pragma once

#include <cstdint>
#include <vector>

#include "cohomex/cohomology/coefficients.hpp"
#include "cohomex/linalg/abelian_invariants.hpp"

namespace cohomex {

/// Closed form of H^degree(Z/n; coeffs): Z in degree 0, zero in odd degrees
/// and Z/n in positive even degrees integrally; Z/gcd(n, m) in every positive
/// degree and Z/m in degree 0 with Z/m coefficients.
AbelianGroupInvariants cyclic_oracle(std::uint64_t n, const CoefficientSpec& coeffs,
                                     unsigned degree);

/// Integral H^degree of Z/n_1 x ... x Z/n_r by iterating the Kunneth formula
/// over the cyclic closed forms. Throws PreconditionError on an empty list.
AbelianGroupInvariants kunneth_oracle(const std::vector<std::uint64_t>& orders, unsigned degree);

/// Integral Kunneth formula: H^n(G x H) from H^*(G) and H^*(H) given in
/// degrees 0..n+1 (entry i is H^i).
AbelianGroupInvariants kunneth(const std::vector<AbelianGroupInvariants>& a,
                               const std::vector<AbelianGroupInvariants>& b, unsigned n);

/// H^n(G; Z/m) = H^n(G) (x) Z/m + Tor(H^(n+1)(G), Z/m).
AbelianGroupInvariants universal_coefficients(const AbelianGroupInvariants& hn,
                                              const AbelianGroupInvariants& hn1, std::uint64_t m);

}  // namespace cohomex

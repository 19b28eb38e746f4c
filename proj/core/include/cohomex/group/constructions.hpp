#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohomex/group/finite_group.hpp"

namespace cohomex {

/// Parameters (p, alpha, beta, gamma, delta) of the two-generator family
///   <a, b, c | [a,c] = [b,c] = 1 = a^(p^alpha) = b^(p^beta) = c^(p^gamma),
///              [a,b] = c^(p^delta)>.
/// Normalized parameters satisfy delta <= gamma and
/// gamma - delta <= min(alpha, beta).
struct FamilyParams {
  std::uint64_t p = 2;
  unsigned alpha = 1;
  unsigned beta = 1;
  unsigned gamma = 1;
  unsigned delta = 0;

  bool is_normalized() const;
  /// log_p of the group order.
  unsigned log_order() const { return alpha + beta + gamma; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

/// Rewrites raw parameters into the normalized range, presenting the same
/// group: delta is capped at gamma, then gamma at min(alpha, beta) + delta.
FamilyParams normalize_params(std::uint64_t p, long long alpha, long long beta,
                              long long gamma, long long delta);
FamilyParams normalize_params(const FamilyParams& raw);

/// Elements are a^i b^j c^k in normal form; generators are named a, b, c.
FiniteGroup build_family_group(const FamilyParams& params);

/// Z/n with generator g; element i is g^i.
FiniteGroup cyclic_group(std::size_t n);

/// Componentwise product; element (g, h) has id g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// The Sylow p-subgroup of the symmetric group on p^n points, realized as
/// the iterated wreath product of Z/p acting on base-p digit strings.
FiniteGroup wreath_sylow(std::uint64_t p, unsigned n);

/// Group generated by permutations of {0..degree-1} (images listed per
/// point); elements are numbered in breadth-first order from the identity.
FiniteGroup permutation_group(std::size_t degree,
                              const std::vector<std::vector<std::uint32_t>>& gens,
                              const std::vector<std::string>& names,
                              std::string descriptor);

}  // namespace cohomex

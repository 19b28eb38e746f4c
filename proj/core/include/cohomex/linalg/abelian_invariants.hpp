#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohomex/linalg/bigint.hpp"

namespace cohomex {

/// A finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_r in
/// canonical form: every d_i > 1 and d_i | d_(i+1).
class AbelianGroupInvariants {
 public:
  AbelianGroupInvariants() = default;

  /// Canonicalizes an arbitrary list of cyclic orders; entries equal to 1 are
  /// dropped and a 0 entry counts as a free summand.
  static AbelianGroupInvariants from_cyclic_orders(std::size_t free_rank,
                                                   const std::vector<BigInt>& orders);
  static AbelianGroupInvariants from_cyclic_orders(
      std::size_t free_rank, const std::vector<std::uint64_t>& orders);
  static AbelianGroupInvariants free(std::size_t rank) {
    return from_cyclic_orders(rank, std::vector<BigInt>{});
  }
  static AbelianGroupInvariants trivial() { return {}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool has_free_part() const { return free_rank_ > 0; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  /// Order of the torsion subgroup.
  BigInt torsion_order() const;

  AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& other) const;

  /// e.g. "Z^2 + Z/2 + Z/4", or "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroupInvariants&,
                         const AbelianGroupInvariants&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

struct Exponent {
  /// Last torsion invariant factor, or 1 for a torsion-free group.
  BigInt value = 1;
  /// Set when the group has a free summand (so has elements of infinite order).
  bool has_free_part = false;
};

Exponent exponent_of(const AbelianGroupInvariants& inv);

}  // namespace cohomex

#include "cohomex/linalg/abelian_invariants.hpp"

#include <algorithm>

#include "cohomex/errors.hpp"

namespace cohomex {

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_orders(
    std::size_t free_rank, const std::vector<BigInt>& orders) {
  AbelianGroupInvariants out;
  out.free_rank_ = free_rank;
  std::vector<BigInt> d;
  for (const auto& o : orders) {
    if (sgn(o) < 0) throw PreconditionError("cyclic orders must be non-negative");
    if (sgn(o) == 0) {
      ++out.free_rank_;
    } else if (o != 1) {
      d.push_back(o);
    }
  }
  // The diagonal gcd/lcm sweep: after pass i, d[i] divides every later entry.
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  for (auto& x : d) {
    if (x != 1) out.torsion_.push_back(std::move(x));
  }
  return out;
}

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_orders(
    std::size_t free_rank, const std::vector<std::uint64_t>& orders) {
  std::vector<BigInt> big;
  big.reserve(orders.size());
  for (auto o : orders) big.push_back(from_u64(o));
  return from_cyclic_orders(free_rank, big);
}

BigInt AbelianGroupInvariants::torsion_order() const {
  BigInt n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

AbelianGroupInvariants AbelianGroupInvariants::direct_sum(
    const AbelianGroupInvariants& other) const {
  std::vector<BigInt> all = torsion_;
  all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, all);
}

std::string AbelianGroupInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank_ == 1) s = "Z";
  if (free_rank_ > 1) s = "Z^" + std::to_string(free_rank_);
  for (const auto& d : torsion_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

Exponent exponent_of(const AbelianGroupInvariants& inv) {
  Exponent e;
  if (!inv.torsion().empty()) e.value = inv.torsion().back();
  e.has_free_part = inv.has_free_part();
  return e;
}

}  // namespace cohomex

#include "cohomex/group/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "cohomex/errors.hpp"
#include "cohomex/util/number_theory.hpp"

namespace cohomex {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<ElementId> table,
                         std::vector<NamedGenerator> generators,
                         std::string descriptor)
    : order_(order),
      table_(std::move(table)),
      generators_(std::move(generators)),
      descriptor_(std::move(descriptor)) {
  if (order_ == 0) throw PreconditionError("group order must be positive");
  if (order_ > kMaxGroupOrder) {
    throw ResourceLimitError("group order " + std::to_string(order_) +
                             " exceeds the supported maximum " +
                             std::to_string(kMaxGroupOrder));
  }
  if (table_.size() != order_ * order_) {
    throw PreconditionError("multiplication table has wrong size");
  }
  for (ElementId x : table_) {
    if (x >= order_) throw InvariantViolation("table entry out of range");
  }
  for (ElementId a = 0; a < order_; ++a) {
    if (mul(kIdentity, a) != a || mul(a, kIdentity) != a) {
      throw InvariantViolation("element 0 is not a two-sided identity");
    }
  }
  // Each row of a group table is a permutation; this also yields inverses.
  inverse_.assign(order_, static_cast<ElementId>(order_));
  for (ElementId a = 0; a < order_; ++a) {
    std::vector<char> seen(order_, 0);
    for (ElementId b = 0; b < order_; ++b) {
      ElementId ab = mul(a, b);
      if (seen[ab]) throw InvariantViolation("table row is not a permutation");
      seen[ab] = 1;
      if (ab == kIdentity) inverse_[a] = b;
    }
  }
  for (ElementId a = 0; a < order_; ++a) {
    if (mul(inverse_[a], a) != kIdentity) {
      throw InvariantViolation("inverse table is not two-sided");
    }
  }
  const bool full_check = order_ <= kFullAssociativityOrder;
  for (ElementId a = 0; a < order_; ++a) {
    for (ElementId b = 0; b < order_; ++b) {
      const ElementId ab = mul(a, b);
      if (full_check) {
        for (ElementId c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw InvariantViolation("multiplication is not associative");
          }
        }
      }
      if (abelian_ && ab != mul(b, a)) abelian_ = false;
    }
  }
  if (!full_check) {
    for (const auto& g : generators_) {
      if (g.element >= order_) throw PreconditionError("generator id out of range");
      for (ElementId a = 0; a < order_; ++a) {
        const ElementId as = mul(a, g.element);
        for (ElementId c = 0; c < order_; ++c) {
          if (mul(as, c) != mul(a, mul(g.element, c))) {
            throw InvariantViolation("multiplication is not associative");
          }
        }
      }
    }
  }
  element_orders_.assign(order_, 1);
  for (ElementId a = 0; a < order_; ++a) {
    ElementId x = a;
    std::size_t k = 1;
    while (x != kIdentity) {
      x = mul(x, a);
      ++k;
    }
    element_orders_[a] = k;
  }
  for (const auto& g : generators_) {
    if (g.element >= order_) throw PreconditionError("generator id out of range");
  }
  std::vector<ElementId> seeds;
  for (const auto& g : generators_) seeds.push_back(g.element);
  if (closure(*this, seeds).size() != order_) {
    throw InvariantViolation("generators of " + descriptor_ +
                             " do not generate the group");
  }
  auto factors = util::factorize(order_);
  if (factors.size() == 1) prime_ = factors.front().first;
}

ElementId FiniteGroup::pow(ElementId a, long long exponent) const {
  const auto n = static_cast<long long>(element_orders_[a]);
  long long e = exponent % n;
  if (e < 0) e += n;
  ElementId result = kIdentity;
  for (long long i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

ElementId FiniteGroup::conjugate(ElementId h, ElementId g) const {
  return mul(mul(inv(g), h), g);
}

ElementId FiniteGroup::generator(const std::string& name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return g.element;
  }
  throw PreconditionError("group " + descriptor_ + " has no generator named '" +
                          name + "'");
}

std::vector<ElementId> closure(const FiniteGroup& group,
                               std::span<const ElementId> seeds) {
  std::vector<char> in(group.order(), 0);
  std::vector<ElementId> members{FiniteGroup::kIdentity};
  in[FiniteGroup::kIdentity] = 1;
  std::vector<ElementId> gens;
  for (ElementId s : seeds) {
    if (s != FiniteGroup::kIdentity) gens.push_back(s);
  }
  // In a finite group the multiplicative closure of a set is a subgroup.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId g : gens) {
      ElementId x = group.mul(members[i], g);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace cohomex

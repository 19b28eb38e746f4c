#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cohomex {

/// Dense element id; 0 is always the identity.
using ElementId = std::uint32_t;

/// Largest group order any constructor accepts.
inline constexpr std::size_t kMaxGroupOrder = 729;

/// Tables up to this order get the full triple associativity check; larger
/// ones are checked against the generators only (Light's test).
inline constexpr std::size_t kFullAssociativityOrder = 256;

struct NamedGenerator {
  std::string name;
  ElementId element = 0;

  friend bool operator==(const NamedGenerator&, const NamedGenerator&) = default;
};

/// A finite group given by its full multiplication table.
///
/// Values are immutable after construction. The constructor validates the
/// table (closure, identity, inverses, associativity) and that the named
/// generators generate the whole group, so every FiniteGroup in circulation
/// is a genuine group.
class FiniteGroup {
 public:
  static constexpr ElementId kIdentity = 0;

  /// `table` is row-major: table[a * order + b] = a * b.
  FiniteGroup(std::size_t order, std::vector<ElementId> table,
              std::vector<NamedGenerator> generators, std::string descriptor);

  std::size_t order() const { return order_; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, long long exponent) const;
  /// a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const;
  /// g^-1 h g
  ElementId conjugate(ElementId h, ElementId g) const;
  std::size_t element_order(ElementId a) const { return element_orders_[a]; }

  bool is_abelian() const { return abelian_; }
  bool is_p_group() const { return prime_ != 0 || order_ == 1; }
  /// The prime p when the order is a positive power of p, otherwise 0.
  std::uint64_t prime() const { return prime_; }

  const std::vector<NamedGenerator>& generators() const { return generators_; }
  /// Looks up a generator by name; throws PreconditionError when absent.
  ElementId generator(const std::string& name) const;
  const std::string& descriptor() const { return descriptor_; }
  std::span<const ElementId> table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::size_t> element_orders_;
  std::vector<NamedGenerator> generators_;
  std::string descriptor_;
  bool abelian_ = true;
  std::uint64_t prime_ = 0;
};

/// Elements reachable from `seeds` under multiplication, sorted ascending.
std::vector<ElementId> closure(const FiniteGroup& group,
                               std::span<const ElementId> seeds);

}  // namespace cohomex

#pragma once

#include <cstddef>
#include <vector>

#include "cohomex/linalg/bigint.hpp"

namespace cohomex {

/// Order of the element with coordinates `x` in the group with cyclic
/// summand orders `orders` (0 = infinite cyclic). Returns 0 for an element of
/// infinite order.
BigInt element_order(const std::vector<BigInt>& x, const std::vector<BigInt>& orders);

/// Reduces each coordinate into [0, order) (coordinates on Z summands are left alone).
void reduce_coordinates(std::vector<BigInt>& x, const std::vector<BigInt>& orders);

/// A homomorphism between finitely generated abelian groups given by cyclic
/// decompositions. Column j holds the image of source basis element j,
/// reduced modulo the target orders.
struct HomMatrix {
  std::vector<BigInt> source_orders;
  std::vector<BigInt> target_orders;
  /// entries[i][j]: coefficient of target basis element i in the image of source j.
  std::vector<std::vector<BigInt>> entries;

  HomMatrix() = default;
  HomMatrix(std::vector<BigInt> source, std::vector<BigInt> target);

  std::size_t rows() const { return target_orders.size(); }
  std::size_t cols() const { return source_orders.size(); }

  std::vector<BigInt> column(std::size_t j) const;
  void set_column(std::size_t j, std::vector<BigInt> image);
  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;
  /// this ∘ other (other's target must be this source).
  HomMatrix compose(const HomMatrix& other) const;
  bool is_zero() const;

  /// Order of the image subgroup (finite targets only).
  BigInt image_order() const;

  friend bool operator==(const HomMatrix&, const HomMatrix&) = default;
};

/// Order of {x : m x = 0} in the finite group with the given summand orders.
BigInt torsion_subgroup_order(const std::vector<BigInt>& orders, const BigInt& m);

}  // namespace cohomex

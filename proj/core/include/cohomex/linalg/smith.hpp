#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohomex/linalg/sparse_matrix.hpp"

namespace cohomex {

struct SnfOptions {
  bool want_transforms = false;
  /// Also accumulate V^-1 (implies want_transforms).
  bool want_v_inverse = false;
  /// Abort with ResourceLimitError once any working entry exceeds this many bits.
  std::size_t max_bits = 4096;
};

struct SnfResult {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> factors;
  std::size_t rank = 0;
  /// U * A * V = diag(factors) padded with zeros; U and V unimodular.
  std::optional<SparseIntMatrix> u;
  std::optional<SparseIntMatrix> v;
  std::optional<SparseIntMatrix> v_inverse;
};

SnfResult smith_normal_form(const SparseIntMatrix& a, const SnfOptions& options = {});

inline SnfResult smith_normal_form(const SparseIntMatrix& a, bool want_transforms) {
  SnfOptions o;
  o.want_transforms = want_transforms;
  return smith_normal_form(a, o);
}

}  // namespace cohomex

#pragma once

#include "cohomex/linalg/abelian_invariants.hpp"
#include "cohomex/linalg/smith.hpp"
#include "cohomex/linalg/sparse_matrix.hpp"

namespace cohomex {

/// ker(d_b) / im(d_a) for C_{n-1} --d_a--> C_n --d_b--> C_{n+1}, matrices
/// acting on column vectors. Throws InvariantViolation when d_b * d_a != 0.
AbelianGroupInvariants homology_at(const SparseIntMatrix& d_a, const SparseIntMatrix& d_b,
                                   std::size_t max_bits = SnfOptions{}.max_bits);

}  // namespace cohomex

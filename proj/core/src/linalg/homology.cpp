#include "cohomex/linalg/homology.hpp"

#include "cohomex/errors.hpp"

namespace cohomex {

AbelianGroupInvariants homology_at(const SparseIntMatrix& d_a, const SparseIntMatrix& d_b,
                                   std::size_t max_bits) {
  if (d_a.rows() != d_b.cols()) throw PreconditionError("complex shapes do not chain");
  if (!(d_b * d_a).is_zero()) throw InvariantViolation("d_b * d_a is not zero");
  const Index n = d_a.rows();

  SnfOptions kernel_opts;
  kernel_opts.want_v_inverse = true;
  kernel_opts.max_bits = max_bits;
  const SnfResult kb = smith_normal_form(d_b, kernel_opts);
  const auto r = static_cast<Index>(kb.rank);

  // The last n - r columns of V span ker d_b; V^-1 d_a has its image there.
  const SparseIntMatrix moved = *kb.v_inverse * d_a;
  std::vector<Triplet> trips;
  for (Index i = r; i < n; ++i) {
    for (const auto& [c, v] : moved.row(i)) trips.push_back({i - r, c, v});
  }
  const auto x = SparseIntMatrix::from_triplets(n - r, d_a.cols(), std::move(trips));

  SnfOptions image_opts;
  image_opts.max_bits = max_bits;
  const SnfResult xs = smith_normal_form(x, image_opts);
  return AbelianGroupInvariants::from_cyclic_orders(n - r - xs.rank, xs.factors);
}

}  // namespace cohomex

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohomex/cohomology/coefficients.hpp"
#include "cohomex/group/finite_group.hpp"
#include "cohomex/linalg/sparse_matrix.hpp"

namespace cohomex {

inline constexpr std::uint64_t kDefaultMaxGenerators = 20'000'000;

/// Normalized inhomogeneous cochains of a finite group. Degree n has one
/// generator per n-tuple of non-identity elements; tuple (g1, ..., gn) has
/// index sum (g_i - 1) * N^(n-i) with N = |G| - 1.
///
/// The coboundary d_n : C^n -> C^(n+1) is stored as a matrix acting on column
/// vectors (rows indexed by (n+1)-tuples):
///   (df)(g1..g_{n+1}) = f(g2..g_{n+1})
///                     + sum_i (-1)^i f(g1..g_i g_{i+1}..g_{n+1})
///                     + (-1)^(n+1) f(g1..g_n),
/// dropping every term whose tuple contains the identity.
class BarComplex {
 public:
  using RowEntry = std::pair<std::uint64_t, int>;

  explicit BarComplex(const FiniteGroup& group,
                      std::uint64_t max_generators = kDefaultMaxGenerators);

  const FiniteGroup& group() const { return *group_; }
  std::uint64_t max_generators() const { return max_generators_; }

  /// (|G| - 1)^n; throws ResourceLimitError (naming the degree and the
  /// predicted size) above the generator budget.
  std::uint64_t generator_count(unsigned n) const;
  /// generator_count without the budget check; saturates at UINT64_MAX.
  std::uint64_t predicted_count(unsigned n) const;

  std::uint64_t encode(std::span<const ElementId> tuple) const;
  std::vector<ElementId> decode(unsigned n, std::uint64_t index) const;

  /// Row `row` of d_n as (column, coefficient) pairs sorted by column,
  /// duplicates summed and zeros dropped. `out` is overwritten.
  void differential_row(unsigned n, std::uint64_t row, std::vector<RowEntry>& out) const;

  /// d_n as an exact matrix (budget-checked at degree n + 1).
  SparseIntMatrix differential(unsigned n) const;

  /// d_(n+1) * d_n == 0, checked row by row without materializing matrices.
  bool composes_to_zero(unsigned n) const;

 private:
  const FiniteGroup* group_;
  std::uint64_t max_generators_;
  std::uint64_t base_;
};

/// Degrees [n0, n1] of the bar complex with their differentials d_n for
/// n0 <= n < n1, coefficients reduced modulo m when modular.
struct CochainComplexSlice {
  std::string descriptor;
  CoefficientSpec coeffs = CoefficientSpec::integral();
  unsigned n0 = 0;
  unsigned n1 = 0;
  std::vector<std::uint64_t> counts;
  std::vector<SparseIntMatrix> differentials;
};

/// Builds degrees 0..max_degree, verifying d∘d = 0 on the slice.
CochainComplexSlice bar_complex(const FiniteGroup& group, const CoefficientSpec& coeffs,
                                unsigned max_degree,
                                std::uint64_t max_generators = kDefaultMaxGenerators);

}  // namespace cohomex

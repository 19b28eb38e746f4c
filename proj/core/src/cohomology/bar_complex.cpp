#include "cohomex/cohomology/bar_complex.hpp"

#include <algorithm>

#include "cohomex/errors.hpp"

namespace cohomex {

BarComplex::BarComplex(const FiniteGroup& group, std::uint64_t max_generators)
    : group_(&group), max_generators_(max_generators), base_(group.order() - 1) {
  if (max_generators == 0) throw PreconditionError("generator budget must be positive");
}

std::uint64_t BarComplex::predicted_count(unsigned n) const {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (base_ != 0 && c > UINT64_MAX / base_) return UINT64_MAX;
    c *= base_;
  }
  return c;
}

std::uint64_t BarComplex::generator_count(unsigned n) const {
  const std::uint64_t c = predicted_count(n);
  if (c > max_generators_) {
    throw ResourceLimitError("degree " + std::to_string(n) + " of " + group_->descriptor() +
                             " needs " + std::to_string(c) + " cochain generators, budget is " +
                             std::to_string(max_generators_));
  }
  return c;
}

std::uint64_t BarComplex::encode(std::span<const ElementId> tuple) const {
  std::uint64_t x = 0;
  for (ElementId g : tuple) x = x * base_ + (g - 1);
  return x;
}

std::vector<ElementId> BarComplex::decode(unsigned n, std::uint64_t index) const {
  std::vector<ElementId> t(n);
  for (unsigned i = n; i-- > 0;) {
    t[i] = static_cast<ElementId>(index % base_ + 1);
    index /= base_;
  }
  return t;
}

void BarComplex::differential_row(unsigned n, std::uint64_t row,
                                  std::vector<RowEntry>& out) const {
  out.clear();
  const unsigned len = n + 1;
  ElementId t[64];
  if (len > 64) throw ResourceLimitError("degree too large");
  std::uint64_t z = row;
  for (unsigned i = len; i-- > 0;) {
    t[i] = static_cast<ElementId>(z % base_ + 1);
    z /= base_;
  }
  // Drop the first entry: remainder modulo N^n.
  std::uint64_t high = 1;
  for (unsigned i = 0; i < n; ++i) high *= base_;
  out.emplace_back(row % high, 1);

  // Merge positions i-1, i (1-based i in 1..n): prefix digits t[0..i-2],
  // product, suffix digits t[i+1..n].
  for (unsigned i = 1; i <= n; ++i) {
    const ElementId prod = group_->mul(t[i - 1], t[i]);
    if (prod == FiniteGroup::kIdentity) continue;
    std::uint64_t x = 0;
    for (unsigned j = 0; j + 1 < i; ++j) x = x * base_ + (t[j] - 1);
    x = x * base_ + (prod - 1);
    for (unsigned j = i + 1; j < len; ++j) x = x * base_ + (t[j] - 1);
    out.emplace_back(x, (i % 2) ? -1 : 1);
  }
  out.emplace_back(row / base_, ((n + 1) % 2) ? -1 : 1);

  std::sort(out.begin(), out.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < out.size();) {
    std::size_t s = r;
    int sum = 0;
    for (; s < out.size() && out[s].first == out[r].first; ++s) sum += out[s].second;
    if (sum != 0) out[w++] = {out[r].first, sum};
    r = s;
  }
  out.resize(w);
}

SparseIntMatrix BarComplex::differential(unsigned n) const {
  const std::uint64_t rows = generator_count(n + 1);
  const std::uint64_t cols = generator_count(n);
  if (rows > UINT32_MAX || cols > UINT32_MAX) throw ResourceLimitError("matrix too large");
  SparseIntMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  std::vector<RowEntry> entries;
  for (std::uint64_t r = 0; r < rows; ++r) {
    differential_row(n, r, entries);
    SparseIntMatrix::Row row;
    row.reserve(entries.size());
    for (auto [c, v] : entries) row.emplace_back(static_cast<Index>(c), BigInt(v));
    m.set_row(static_cast<Index>(r), std::move(row));
  }
  return m;
}

bool BarComplex::composes_to_zero(unsigned n) const {
  const std::uint64_t rows = generator_count(n + 2);
  generator_count(n + 1);
  std::vector<RowEntry> outer, inner;
  std::vector<std::pair<std::uint64_t, long long>> acc;
  for (std::uint64_t r = 0; r < rows; ++r) {
    differential_row(n + 1, r, outer);
    acc.clear();
    for (auto [mid, a] : outer) {
      differential_row(n, mid, inner);
      for (auto [c, b] : inner) acc.emplace_back(c, static_cast<long long>(a) * b);
    }
    std::sort(acc.begin(), acc.end());
    for (std::size_t i = 0; i < acc.size();) {
      std::size_t j = i;
      long long sum = 0;
      for (; j < acc.size() && acc[j].first == acc[i].first; ++j) sum += acc[j].second;
      if (sum != 0) return false;
      i = j;
    }
  }
  return true;
}

CochainComplexSlice bar_complex(const FiniteGroup& group, const CoefficientSpec& coeffs,
                                unsigned max_degree, std::uint64_t max_generators) {
  BarComplex bar(group, max_generators);
  CochainComplexSlice slice;
  slice.descriptor = group.descriptor();
  slice.coeffs = coeffs;
  slice.n0 = 0;
  slice.n1 = max_degree;
  for (unsigned n = 0; n <= max_degree; ++n) slice.counts.push_back(bar.generator_count(n));
  for (unsigned n = 0; n < max_degree; ++n) {
    auto d = bar.differential(n);
    if (!coeffs.is_integral()) {
      const BigInt m = from_u64(coeffs.modulus());
      std::vector<Triplet> t;
      for (auto& tr : d.triplets()) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), tr.value.get_mpz_t(), m.get_mpz_t());
        if (sgn(r) != 0) t.push_back({tr.row, tr.col, r});
      }
      d = SparseIntMatrix::from_triplets(d.rows(), d.cols(), std::move(t));
    }
    slice.differentials.push_back(std::move(d));
  }
  for (unsigned n = 0; n + 1 < max_degree; ++n) {
    if (!bar.composes_to_zero(n)) {
      throw InvariantViolation("bar differentials do not compose to zero at degree " +
                               std::to_string(n));
    }
  }
  return slice;
}

}  // namespace cohomex

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "cohomex/linalg/bigint.hpp"

namespace cohomex {

using Index = std::uint32_t;

struct Triplet {
  Index row = 0;
  Index col = 0;
  BigInt value;
};

/// Exact sparse integer matrix stored by rows. Each row is sorted by column,
/// holds no duplicate columns and no explicit zeros.
class SparseIntMatrix {
 public:
  using Entry = std::pair<Index, BigInt>;
  using Row = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(Index rows, Index cols);

  /// Duplicate (row, col) pairs are summed; zero sums are dropped.
  static SparseIntMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> t);
  static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& dense);
  static SparseIntMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const Row& row(Index r) const { return data_[r]; }
  BigInt at(Index r, Index c) const;
  /// Setting zero erases the entry.
  void set(Index r, Index c, const BigInt& v);
  /// Replaces a whole row; `row` must be sorted, duplicate-free and zero-free.
  void set_row(Index r, Row row);

  std::vector<Triplet> triplets() const;
  SparseIntMatrix transpose() const;
  /// result(r, c) = this(row_of[r], col_of[c]).
  SparseIntMatrix permuted(const std::vector<Index>& row_of,
                           const std::vector<Index>& col_of) const;
  std::vector<std::vector<BigInt>> to_dense() const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Row> data_;
};

// Text format, one matrix:
//
//   # comments and blank lines are ignored
//   <rows> <cols>
//   <r> <c> <v>        (zero-based indices, one triplet per line)
//
// A chain complex is a file holding several matrices in order d_0, d_1, ...;
// every two-token line starts a new matrix.

SparseIntMatrix read_matrix(std::istream& in);
std::vector<SparseIntMatrix> read_matrices(std::istream& in);
void write_matrix(std::ostream& out, const SparseIntMatrix& m);

}  // namespace cohomex

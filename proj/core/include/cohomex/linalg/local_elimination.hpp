#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cohomex/linalg/local_ring.hpp"
#include "cohomex/linalg/sparse_matrix.hpp"

namespace cohomex {

struct LocalEntry {
  Index col;
  std::uint64_t value;
};
using LocalRow = std::vector<LocalEntry>;

/// Pivot value is p^level * unit.
struct LocalPivot {
  Index row;
  Index col;
  unsigned level;
  std::uint64_t unit;
};

struct LocalEliminationOptions {
  /// Keep the row operations so that U and U^-1 can be applied later.
  bool record_row_ops = false;
  /// Keep the pivot-row column factors so that V and V^-1 can be applied.
  bool record_col_ops = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct LocalEliminationStats {
  std::size_t initial_nnz = 0;
  std::size_t max_nnz = 0;
  std::size_t fill = 0;
  double seconds = 0;
};

/// Outcome of Markowitz-ordered elimination of a matrix over Z/p^k. With the
/// recorded operations, U * A * V = D where D carries p^level * unit at each
/// (pivot row, pivot col) and zeros elsewhere.
class LocalElimination {
 public:
  struct RowOp {
    Index target;
    std::uint64_t mult;
  };
  struct ColOp {
    Index col;
    std::uint64_t factor;
  };

  const LocalRing& ring() const { return ring_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<LocalPivot>& pivots() const { return pivots_; }
  const LocalEliminationStats& stats() const { return stats_; }
  bool has_row_ops() const { return has_row_ops_; }
  bool has_col_ops() const { return has_col_ops_; }

  /// Pivot levels in ascending order.
  std::vector<unsigned> levels() const;
  /// Index of the pivot whose row is r, or -1.
  std::vector<std::int64_t> pivot_of_row() const;
  std::vector<std::int64_t> pivot_of_col() const;

  /// v <- U v (length rows()).
  void apply_u(std::vector<std::uint64_t>& v) const;
  /// v <- U^-1 v.
  void apply_u_inverse(std::vector<std::uint64_t>& v) const;
  /// z <- V z (length cols()).
  void apply_v(std::vector<std::uint64_t>& z) const;
  /// z <- V^-1 z.
  void apply_v_inverse(std::vector<std::uint64_t>& z) const;

 private:
  friend LocalElimination eliminate_local(const LocalRing&, Index, std::vector<LocalRow>,
                                          const LocalEliminationOptions&);
  explicit LocalElimination(const LocalRing& ring) : ring_(ring) {}

  LocalRing ring_;
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<LocalPivot> pivots_;
  std::vector<std::vector<RowOp>> row_ops_;
  std::vector<std::vector<ColOp>> col_ops_;
  bool has_row_ops_ = false;
  bool has_col_ops_ = false;
  LocalEliminationStats stats_;
};

/// Rows must be sorted by column with residues in [1, q). Consumes the rows.
LocalElimination eliminate_local(const LocalRing& ring, Index cols, std::vector<LocalRow> rows,
                                 const LocalEliminationOptions& options = {});

/// Residues of an exact matrix modulo p^k, as local rows.
std::vector<LocalRow> reduce_rows(const SparseIntMatrix& a, const LocalRing& ring);

struct LocalSnf {
  std::uint64_t p = 0;
  unsigned precision = 0;
  std::size_t rank = 0;
  /// p-parts of the nonzero invariant factors, ascending; 1 where p does not divide.
  std::vector<BigInt> factors;
};

/// p-local Smith form of A computed modulo p^k. Invariant factors whose
/// p-part reaches p^k are indistinguishable from zero at this precision;
/// when `expected_rank` is given and more than the detected rank, the call
/// throws PrecisionExhausted.
LocalSnf snf_local(const SparseIntMatrix& a, std::uint64_t p, unsigned k,
                   std::optional<std::size_t> expected_rank = std::nullopt);

}  // namespace cohomex

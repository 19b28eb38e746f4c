#include "cohomex/linalg/local_elimination.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "cohomex/errors.hpp"

namespace cohomex {

namespace {

using Clock = std::chrono::steady_clock;

LocalRow::iterator find_col(LocalRow& row, Index c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const LocalEntry& e, Index col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it : row.end();
}

}  // namespace

std::vector<unsigned> LocalElimination::levels() const {
  std::vector<unsigned> out;
  out.reserve(pivots_.size());
  for (const auto& pv : pivots_) out.push_back(pv.level);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> LocalElimination::pivot_of_row() const {
  std::vector<std::int64_t> out(rows_, -1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) out[pivots_[i].row] = static_cast<std::int64_t>(i);
  return out;
}

std::vector<std::int64_t> LocalElimination::pivot_of_col() const {
  std::vector<std::int64_t> out(cols_, -1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) out[pivots_[i].col] = static_cast<std::int64_t>(i);
  return out;
}

void LocalElimination::apply_u(std::vector<std::uint64_t>& v) const {
  if (!has_row_ops_) throw PreconditionError("row operations were not recorded");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::uint64_t src = v[pivots_[i].row];
    if (src == 0) continue;
    for (const auto& op : row_ops_[i]) {
      v[op.target] = ring_.sub(v[op.target], ring_.mul(op.mult, src));
    }
  }
}

void LocalElimination::apply_u_inverse(std::vector<std::uint64_t>& v) const {
  if (!has_row_ops_) throw PreconditionError("row operations were not recorded");
  for (std::size_t i = pivots_.size(); i-- > 0;) {
    const std::uint64_t src = v[pivots_[i].row];
    if (src == 0) continue;
    for (const auto& op : row_ops_[i]) {
      v[op.target] = ring_.add(v[op.target], ring_.mul(op.mult, src));
    }
  }
}

void LocalElimination::apply_v(std::vector<std::uint64_t>& z) const {
  if (!has_col_ops_) throw PreconditionError("column operations were not recorded");
  for (std::size_t i = pivots_.size(); i-- > 0;) {
    std::uint64_t acc = 0;
    for (const auto& op : col_ops_[i]) acc = ring_.add(acc, ring_.mul(op.factor, z[op.col]));
    z[pivots_[i].col] = ring_.sub(z[pivots_[i].col], acc);
  }
}

void LocalElimination::apply_v_inverse(std::vector<std::uint64_t>& z) const {
  if (!has_col_ops_) throw PreconditionError("column operations were not recorded");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::uint64_t acc = 0;
    for (const auto& op : col_ops_[i]) acc = ring_.add(acc, ring_.mul(op.factor, z[op.col]));
    z[pivots_[i].col] = ring_.add(z[pivots_[i].col], acc);
  }
}

LocalElimination eliminate_local(const LocalRing& ring, Index ncols, std::vector<LocalRow> rows,
                                 const LocalEliminationOptions& options) {
  const auto start = Clock::now();
  LocalElimination out(ring);
  out.rows_ = static_cast<Index>(rows.size());
  out.cols_ = ncols;
  out.has_row_ops_ = options.record_row_ops;
  out.has_col_ops_ = options.record_col_ops;

  const Index nrows = out.rows_;
  std::vector<std::vector<Index>> col_rows(ncols);
  std::vector<std::uint32_t> col_count(ncols, 0);
  std::size_t nnz = 0;
  for (Index r = 0; r < nrows; ++r) {
    for (const auto& e : rows[r]) {
      if (e.col >= ncols || e.value == 0 || e.value >= ring.modulus()) {
        throw PreconditionError("local row entry out of range");
      }
      col_rows[e.col].push_back(r);
      ++col_count[e.col];
    }
    nnz += rows[r].size();
  }
  out.stats_.initial_nnz = nnz;
  out.stats_.max_nnz = nnz;

  std::vector<char> row_dead(nrows, 0), col_dead(ncols, 0);
  std::vector<std::pair<Index, std::uint64_t>> live;
  LocalRow scratch;
  unsigned level = 0;
  std::size_t since_check = 0;

  using Item = std::pair<std::uint32_t, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

  for (;;) {
    for (Index c = 0; c < ncols; ++c) {
      if (!col_dead[c] && col_count[c] > 0) queue.emplace(col_count[c], c);
    }
    if (queue.empty()) break;
    bool progressed = false;
    while (!queue.empty()) {
      const auto [count, c] = queue.top();
      queue.pop();
      if (col_dead[c] || col_count[c] == 0) continue;
      if (count != col_count[c]) {
        queue.emplace(col_count[c], c);
        continue;
      }

      // Compact the column list and pick the shortest row carrying an entry
      // of the current valuation.
      live.clear();
      std::int64_t best = -1;
      std::size_t best_len = SIZE_MAX;
      std::uint64_t best_value = 0;
      for (Index r : col_rows[c]) {
        if (row_dead[r]) continue;
        auto it = find_col(rows[r], c);
        if (it == rows[r].end()) continue;
        live.push_back({r, it->value});
        if (ring.valuation(it->value) == level && rows[r].size() < best_len) {
          best_len = rows[r].size();
          best = r;
          best_value = it->value;
        }
      }
      std::sort(live.begin(), live.end());
      live.erase(std::unique(live.begin(), live.end()), live.end());
      col_rows[c].clear();
      for (const auto& lr : live) col_rows[c].push_back(lr.first);
      if (best < 0) continue;
      progressed = true;

      const Index pr = static_cast<Index>(best);
      const std::uint64_t unit = ring.shift_down(best_value, level);
      const std::uint64_t unit_inv = ring.inverse(unit);
      LocalRow& prow = rows[pr];

      std::vector<LocalElimination::RowOp> row_log;
      for (const auto& [r, value] : live) {
        if (r == pr) continue;
        LocalRow& row = rows[r];
        const std::uint64_t mult = ring.mul(ring.shift_down(value, level), unit_inv);
        if (options.record_row_ops) row_log.push_back({r, mult});

        scratch.clear();
        scratch.reserve(row.size() + prow.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < prow.size()) {
          if (j == prow.size() || (i < row.size() && row[i].col < prow[j].col)) {
            scratch.push_back(row[i++]);
          } else if (i == row.size() || prow[j].col < row[i].col) {
            const std::uint64_t v = ring.neg(ring.mul(mult, prow[j].value));
            if (v != 0) {
              scratch.push_back({prow[j].col, v});
              col_rows[prow[j].col].push_back(r);
              ++col_count[prow[j].col];
              ++out.stats_.fill;
              ++nnz;
            }
            ++j;
          } else {
            const std::uint64_t v = ring.sub(row[i].value, ring.mul(mult, prow[j].value));
            if (v != 0) {
              scratch.push_back({row[i].col, v});
            } else {
              --col_count[row[i].col];
              --nnz;
            }
            ++i;
            ++j;
          }
        }
        row.swap(scratch);
      }

      std::vector<LocalElimination::ColOp> col_log;
      for (const auto& e : prow) {
        --col_count[e.col];
        --nnz;
        if (options.record_col_ops && e.col != c) {
          col_log.push_back({e.col, ring.mul(ring.shift_down(e.value, level), unit_inv)});
        }
      }
      out.stats_.max_nnz = std::max(out.stats_.max_nnz, nnz);
      LocalRow().swap(prow);
      std::vector<Index>().swap(col_rows[c]);
      row_dead[pr] = 1;
      col_dead[c] = 1;
      out.pivots_.push_back({pr, c, level, unit});
      if (options.record_row_ops) out.row_ops_.push_back(std::move(row_log));
      if (options.record_col_ops) out.col_ops_.push_back(std::move(col_log));

      if (options.deadline && ++since_check >= 256) {
        since_check = 0;
        if (Clock::now() > *options.deadline) {
          throw ResourceLimitError("time limit reached during local elimination");
        }
      }
    }
    if (!progressed && ++level >= ring.precision()) break;
  }

  out.stats_.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::vector<LocalRow> reduce_rows(const SparseIntMatrix& a, const LocalRing& ring) {
  std::vector<LocalRow> rows(a.rows());
  const BigInt q = from_u64(ring.modulus());
  BigInt r;
  for (Index i = 0; i < a.rows(); ++i) {
    for (const auto& [c, v] : a.row(i)) {
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
      if (sgn(r) != 0) rows[i].push_back({c, to_u64(r)});
    }
  }
  return rows;
}

LocalSnf snf_local(const SparseIntMatrix& a, std::uint64_t p, unsigned k,
                   std::optional<std::size_t> expected_rank) {
  LocalRing ring(p, k);
  auto elim = eliminate_local(ring, a.cols(), reduce_rows(a, ring));
  if (expected_rank && elim.rank() < *expected_rank) {
    throw PrecisionExhausted("local elimination at p^" + std::to_string(k) + " found rank " +
                             std::to_string(elim.rank()) + ", expected " +
                             std::to_string(*expected_rank));
  }
  LocalSnf out;
  out.p = p;
  out.precision = k;
  out.rank = elim.rank();
  for (unsigned lv : elim.levels()) {
    BigInt f;
    mpz_ui_pow_ui(f.get_mpz_t(), p, lv);
    out.factors.push_back(f);
  }
  return out;
}

}  // namespace cohomex

#include "cohomex/linalg/smith.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cohomex/errors.hpp"

namespace cohomex {

namespace {

using Row = SparseIntMatrix::Row;

struct NoTrack {
  void added(Index) const {}
  void cancelled(Index) const {}
};

class Guard {
 public:
  explicit Guard(std::size_t max_bits) : max_bits_(max_bits) {}
  void check(const BigInt& v) const {
    if (bit_length(v) > max_bits_) {
      throw ResourceLimitError("Smith normal form entry exceeded " + std::to_string(max_bits_) +
                               " bits");
    }
  }

 private:
  std::size_t max_bits_;
};

// dst <- alpha * dst + beta * src, both sorted rows.
template <class Track>
void combine(Row& dst, const BigInt& alpha, const Row& src, const BigInt& beta, Row& scratch,
             const Guard& guard, Track&& track) {
  scratch.clear();
  scratch.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  BigInt v;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      v = alpha * dst[i].second;
      if (sgn(v) != 0) {
        guard.check(v);
        scratch.emplace_back(dst[i].first, v);
      } else {
        track.cancelled(dst[i].first);
      }
      ++i;
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      v = beta * src[j].second;
      if (sgn(v) != 0) {
        guard.check(v);
        scratch.emplace_back(src[j].first, v);
        track.added(src[j].first);
      }
      ++j;
    } else {
      v = alpha * dst[i].second + beta * src[j].second;
      if (sgn(v) != 0) {
        guard.check(v);
        scratch.emplace_back(dst[i].first, v);
      } else {
        track.cancelled(dst[i].first);
      }
      ++i;
      ++j;
    }
  }
  dst.swap(scratch);
}

const BigInt* find(const Row& row, Index c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseIntMatrix::Entry& e, Index col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

std::vector<Row> identity_rows(Index n) {
  std::vector<Row> rows(n);
  for (Index i = 0; i < n; ++i) rows[i].emplace_back(i, BigInt(1));
  return rows;
}

SparseIntMatrix from_rows(Index nrows, Index ncols, std::vector<Row> rows) {
  SparseIntMatrix m(nrows, ncols);
  for (Index r = 0; r < nrows; ++r) m.set_row(r, std::move(rows[r]));
  return m;
}

class Eliminator {
 public:
  Eliminator(const SparseIntMatrix& a, const SnfOptions& o)
      : nrows_(a.rows()),
        ncols_(a.cols()),
        track_u_(o.want_transforms || o.want_v_inverse),
        track_vinv_(o.want_v_inverse),
        guard_(o.max_bits),
        rows_(nrows_),
        col_rows_(ncols_),
        col_count_(ncols_, 0),
        row_dead_(nrows_, 0),
        col_dead_(ncols_, 0) {
    for (Index r = 0; r < nrows_; ++r) {
      rows_[r] = a.row(r);
      for (const auto& e : rows_[r]) {
        guard_.check(e.second);
        col_rows_[e.first].push_back(r);
        ++col_count_[e.first];
      }
    }
    if (track_u_) {
      u_ = identity_rows(nrows_);
      vt_ = identity_rows(ncols_);
    }
    if (track_vinv_) vinv_ = identity_rows(ncols_);
  }

  void run() {
    while (auto pv = choose_pivot()) {
      auto [r, c] = *pv;
      for (;;) {
        r = clear_column(r, c);
        const auto next_c = clear_row(r, c);
        if (next_c == c) break;
        c = next_c;
      }
      row_dead_[r] = 1;
      col_dead_[c] = 1;
      pivots_.push_back({r, c});
    }
  }

  SnfResult finish() {
    SnfResult out;
    const std::size_t rank = pivots_.size();
    std::vector<BigInt> d(rank);
    for (std::size_t t = 0; t < rank; ++t) {
      auto [r, c] = pivots_[t];
      d[t] = *find(rows_[r], c);
      if (sgn(d[t]) < 0) {
        d[t] = -d[t];
        if (track_u_) {
          for (auto& e : u_[r]) e.second = -e.second;
        }
      }
    }

    if (!track_u_) {
      auto inv = sweep(std::move(d));
      out.factors = std::move(inv);
      out.rank = rank;
      return out;
    }

    // Pivot t moves to position t; the remaining rows/cols follow in order.
    std::vector<Index> row_of, col_of;
    std::vector<char> rused(nrows_, 0), cused(ncols_, 0);
    for (auto [r, c] : pivots_) {
      row_of.push_back(r);
      col_of.push_back(c);
      rused[r] = 1;
      cused[c] = 1;
    }
    for (Index r = 0; r < nrows_; ++r) {
      if (!rused[r]) row_of.push_back(r);
    }
    for (Index c = 0; c < ncols_; ++c) {
      if (!cused[c]) col_of.push_back(c);
    }
    std::vector<Row> u(nrows_), vt(ncols_), vinv;
    for (Index i = 0; i < nrows_; ++i) u[i] = std::move(u_[row_of[i]]);
    for (Index i = 0; i < ncols_; ++i) vt[i] = std::move(vt_[col_of[i]]);
    if (track_vinv_) {
      vinv.resize(ncols_);
      for (Index i = 0; i < ncols_; ++i) vinv[i] = std::move(vinv_[col_of[i]]);
    }

    Row scratch;
    const BigInt one = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i + 1; j < rank; ++j) {
        if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
        const BigInt a = d[i], b = d[j];
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const BigInt ag = a / g, bg = b / g;

        combine(u[i], one, u[j], one, scratch, guard_, NoTrack{});
        const BigInt tb = -(t * bg);
        combine(u[j], one, u[i], tb, scratch, guard_, NoTrack{});

        Row old_i = vt[i];
        combine(vt[i], s, vt[j], t, scratch, guard_, NoTrack{});
        combine(vt[j], ag, old_i, -bg, scratch, guard_, NoTrack{});

        if (track_vinv_) {
          Row old_vi = vinv[i];
          combine(vinv[i], ag, vinv[j], bg, scratch, guard_, NoTrack{});
          combine(vinv[j], s, old_vi, -t, scratch, guard_, NoTrack{});
        }
        d[i] = g;
        d[j] = a / g * b;
      }
    }

    out.factors = d;
    out.rank = rank;
    out.u = from_rows(nrows_, nrows_, std::move(u));
    out.v = from_rows(ncols_, ncols_, std::move(vt)).transpose();
    if (track_vinv_) out.v_inverse = from_rows(ncols_, ncols_, std::move(vinv));
    return out;
  }

 private:
  struct ColumnTrack {
    Eliminator* self;
    Index row;
    void added(Index c) const {
      self->col_rows_[c].push_back(row);
      ++self->col_count_[c];
    }
    void cancelled(Index c) const { --self->col_count_[c]; }
  };

  static std::vector<BigInt> sweep(std::vector<BigInt> d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
        BigInt g = gcd(d[i], d[j]);
        d[j] = d[i] / g * d[j];
        d[i] = g;
      }
    }
    return d;
  }

  std::optional<std::pair<Index, Index>> choose_pivot() const {
    std::optional<std::pair<Index, Index>> best;
    bool best_unit = false;
    std::size_t best_bits = 0;
    std::size_t best_cost = 0;
    for (Index r = 0; r < nrows_; ++r) {
      if (row_dead_[r] || rows_[r].empty()) continue;
      const std::size_t rlen = rows_[r].size() - 1;
      for (const auto& [c, v] : rows_[r]) {
        const bool unit = v == 1 || v == -1;
        const std::size_t bits = bit_length(v);
        const std::size_t cost = rlen * (col_count_[c] - 1);
        bool better = !best;
        if (!better) {
          if (unit != best_unit) {
            better = unit;
          } else if (bits != best_bits) {
            better = bits < best_bits;
          } else {
            better = cost < best_cost;
          }
        }
        if (better) {
          best = std::make_pair(r, c);
          best_unit = unit;
          best_bits = bits;
          best_cost = cost;
        }
      }
    }
    return best;
  }

  std::vector<Index> live_rows(Index c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::vector<Index> live;
    for (Index r : list) {
      if (!row_dead_[r] && find(rows_[r], c)) live.push_back(r);
    }
    list = live;
    return live;
  }

  // Row operations until the pivot is the only entry of column c; returns
  // the final pivot row.
  Index clear_column(Index r, Index c) {
    Row scratch;
    const BigInt one = 1;
    for (;;) {
      const BigInt pivot = *find(rows_[r], c);
      bool remainder = false;
      for (Index s : live_rows(c)) {
        if (s == r) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), find(rows_[s], c)->get_mpz_t(), pivot.get_mpz_t());
        if (sgn(q) != 0) {
          const BigInt mq = -q;
          combine(rows_[s], one, rows_[r], mq, scratch, guard_, ColumnTrack{this, s});
          if (track_u_) combine(u_[s], one, u_[r], mq, scratch, guard_, NoTrack{});
        }
        if (find(rows_[s], c)) remainder = true;
      }
      if (!remainder) return r;
      Index next = r;
      std::size_t bits = SIZE_MAX;
      for (Index s : live_rows(c)) {
        if (s == r) continue;
        const std::size_t b = bit_length(*find(rows_[s], c));
        if (b < bits) {
          bits = b;
          next = s;
        }
      }
      r = next;
    }
  }

  // Column operations until the pivot is the only entry of row r. Column c
  // is already clear apart from row r, so each column operation only touches
  // row r. Returns c when done, or a new pivot column holding a remainder.
  Index clear_row(Index r, Index c) {
    Row scratch;
    const BigInt one = 1;
    const BigInt pivot = *find(rows_[r], c);
    Row& row = rows_[r];
    Row kept;
    Index next = c;
    std::size_t next_bits = SIZE_MAX;
    for (auto& [j, v] : row) {
      if (j == c) {
        kept.emplace_back(j, v);
        continue;
      }
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
      if (sgn(q) != 0) {
        v -= q * pivot;
        const BigInt mq = -q;
        if (track_u_) combine(vt_[j], one, vt_[c], mq, scratch, guard_, NoTrack{});
        if (track_vinv_) combine(vinv_[c], one, vinv_[j], q, scratch, guard_, NoTrack{});
      }
      if (sgn(v) != 0) {
        kept.emplace_back(j, v);
        if (bit_length(v) < next_bits) {
          next_bits = bit_length(v);
          next = j;
        }
      } else {
        --col_count_[j];
      }
    }
    row.swap(kept);
    return next;
  }

  Index nrows_;
  Index ncols_;
  bool track_u_;
  bool track_vinv_;
  Guard guard_;
  std::vector<Row> rows_;
  std::vector<std::vector<Index>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<char> row_dead_;
  std::vector<char> col_dead_;
  std::vector<Row> u_;
  std::vector<Row> vt_;
  std::vector<Row> vinv_;
  std::vector<std::pair<Index, Index>> pivots_;
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& a, const SnfOptions& options) {
  Eliminator e(a, options);
  e.run();
  return e.finish();
}

}  // namespace cohomex

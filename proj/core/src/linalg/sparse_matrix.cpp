#include "cohomex/linalg/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cohomex/errors.hpp"

namespace cohomex {

SparseIntMatrix::SparseIntMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseIntMatrix SparseIntMatrix::from_triplets(Index rows, Index cols,
                                               std::vector<Triplet> t) {
  SparseIntMatrix m(rows, cols);
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < t.size();) {
    if (t[i].row >= rows || t[i].col >= cols) {
      throw PreconditionError("triplet index out of range");
    }
    BigInt sum = 0;
    std::size_t j = i;
    for (; j < t.size() && t[j].row == t[i].row && t[j].col == t[i].col; ++j) {
      sum += t[j].value;
    }
    if (sgn(sum) != 0) m.data_[t[i].row].emplace_back(t[i].col, std::move(sum));
    i = j;
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
  const auto rows = static_cast<Index>(dense.size());
  const auto cols = rows ? static_cast<Index>(dense.front().size()) : 0;
  SparseIntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw PreconditionError("ragged dense matrix");
    for (Index c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) m.data_[r].emplace_back(c, BigInt(static_cast<long>(dense[r][c])));
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(Index n) {
  SparseIntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.data_[i].emplace_back(i, BigInt(1));
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

BigInt SparseIntMatrix::at(Index r, Index c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, Index col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

void SparseIntMatrix::set(Index r, Index c, const BigInt& v) {
  if (r >= rows_ || c >= cols_) throw PreconditionError("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, Index col) { return e.first < col; });
  const bool present = it != row.end() && it->first == c;
  if (sgn(v) == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    row.insert(it, Entry{c, v});
  }
}

void SparseIntMatrix::set_row(Index r, Row row) {
  if (r >= rows_) throw PreconditionError("matrix row out of range");
  data_[r] = std::move(row);
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.push_back(Triplet{r, c, v});
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_);
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

SparseIntMatrix SparseIntMatrix::permuted(const std::vector<Index>& row_of,
                                          const std::vector<Index>& col_of) const {
  if (row_of.size() != rows_ || col_of.size() != cols_) {
    throw PreconditionError("permutation size mismatch");
  }
  std::vector<Index> new_col(cols_);
  for (Index c = 0; c < cols_; ++c) new_col[col_of[c]] = c;
  SparseIntMatrix m(rows_, cols_);
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[row_of[r]]) m.data_[r].emplace_back(new_col[c], v);
    std::sort(m.data_[r].begin(), m.data_[r].end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }
  return m;
}

std::vector<std::vector<BigInt>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> d(rows_, std::vector<BigInt>(cols_, 0));
  for (Index r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) d[r][c] = v;
  }
  return d;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
  SparseIntMatrix m(a.rows_, b.cols_);
  std::map<Index, BigInt> acc;
  for (Index r = 0; r < a.rows_; ++r) {
    acc.clear();
    for (const auto& [k, v] : a.data_[r]) {
      for (const auto& [c, w] : b.data_[k]) acc[c] += v * w;
    }
    for (auto& [c, v] : acc) {
      if (sgn(v) != 0) m.data_[r].emplace_back(c, std::move(v));
    }
  }
  return m;
}

namespace {

struct Line {
  std::vector<std::string> tokens;
  std::size_t number;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream ss(text);
    Line line{{}, number};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long to_index(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0 || v > UINT32_MAX) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad index '" + tok + "'");
  }
}

BigInt to_value(const std::string& tok, std::size_t line) {
  BigInt v;
  if (v.set_str(tok, 10) != 0) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + tok + "'");
  }
  return v;
}

}  // namespace

std::vector<SparseIntMatrix> read_matrices(std::istream& in) {
  std::vector<SparseIntMatrix> out;
  Index rows = 0, cols = 0;
  std::vector<Triplet> trips;
  bool open = false;
  auto flush = [&] {
    if (open) out.push_back(SparseIntMatrix::from_triplets(rows, cols, std::move(trips)));
    trips.clear();
  };
  for (const auto& line : tokenize(in)) {
    if (line.tokens.size() == 2) {
      flush();
      rows = static_cast<Index>(to_index(line.tokens[0], line.number));
      cols = static_cast<Index>(to_index(line.tokens[1], line.number));
      open = true;
    } else if (line.tokens.size() == 3) {
      if (!open) {
        throw ParseError("line " + std::to_string(line.number) +
                         ": triplet before a 'rows cols' header");
      }
      Triplet t{static_cast<Index>(to_index(line.tokens[0], line.number)),
                static_cast<Index>(to_index(line.tokens[1], line.number)),
                to_value(line.tokens[2], line.number)};
      if (t.row >= rows || t.col >= cols) {
        throw ParseError("line " + std::to_string(line.number) +
                         ": index outside the declared shape");
      }
      trips.push_back(std::move(t));
    } else {
      throw ParseError("line " + std::to_string(line.number) +
                       ": expected 'rows cols' or 'r c v'");
    }
  }
  flush();
  return out;
}

SparseIntMatrix read_matrix(std::istream& in) {
  auto all = read_matrices(in);
  if (all.size() != 1) {
    throw ParseError("expected exactly one matrix, found " + std::to_string(all.size()));
  }
  return std::move(all.front());
}

void write_matrix(std::ostream& out, const SparseIntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) out << r << ' ' << c << ' ' << v.get_str() << '\n';
  }
}

}  // namespace cohomex

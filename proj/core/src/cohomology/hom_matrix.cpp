#include "cohomex/cohomology/hom_matrix.hpp"

#include "cohomex/errors.hpp"
#include "cohomex/linalg/smith.hpp"

namespace cohomex {

BigInt element_order(const std::vector<BigInt>& x, const std::vector<BigInt>& orders) {
  if (x.size() != orders.size()) throw PreconditionError("coordinate length mismatch");
  BigInt out = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(orders[i]) == 0) {
      if (sgn(x[i]) != 0) return 0;
      continue;
    }
    BigInt g = gcd(x[i], orders[i]);
    out = lcm(out, orders[i] / g);
  }
  return out;
}

void reduce_coordinates(std::vector<BigInt>& x, const std::vector<BigInt>& orders) {
  if (x.size() != orders.size()) throw PreconditionError("coordinate length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(orders[i]) != 0) mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), orders[i].get_mpz_t());
  }
}

HomMatrix::HomMatrix(std::vector<BigInt> source, std::vector<BigInt> target)
    : source_orders(std::move(source)),
      target_orders(std::move(target)),
      entries(target_orders.size(), std::vector<BigInt>(source_orders.size(), 0)) {}

std::vector<BigInt> HomMatrix::column(std::size_t j) const {
  std::vector<BigInt> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out[i] = entries[i][j];
  return out;
}

void HomMatrix::set_column(std::size_t j, std::vector<BigInt> image) {
  reduce_coordinates(image, target_orders);
  for (std::size_t i = 0; i < rows(); ++i) entries[i][j] = image[i];
}

std::vector<BigInt> HomMatrix::apply(const std::vector<BigInt>& x) const {
  if (x.size() != cols()) throw PreconditionError("vector length mismatch");
  std::vector<BigInt> y(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) y[i] += entries[i][j] * x[j];
  }
  reduce_coordinates(y, target_orders);
  return y;
}

HomMatrix HomMatrix::compose(const HomMatrix& other) const {
  if (other.target_orders != source_orders) throw PreconditionError("composition mismatch");
  HomMatrix out(other.source_orders, target_orders);
  for (std::size_t j = 0; j < other.cols(); ++j) out.set_column(j, apply(other.column(j)));
  return out;
}

bool HomMatrix::is_zero() const {
  for (const auto& row : entries) {
    for (const auto& v : row) {
      if (sgn(v) != 0) return false;
    }
  }
  return true;
}

BigInt HomMatrix::image_order() const {
  // |im| = |target| / |target / im|, and target / im is the cokernel of
  // [diag(orders) | entries].
  BigInt total = 1;
  std::vector<Triplet> t;
  const auto r = static_cast<Index>(rows());
  const auto c = static_cast<Index>(cols());
  for (Index i = 0; i < r; ++i) {
    if (sgn(target_orders[i]) == 0) throw UnsupportedError("image order of an infinite target");
    total *= target_orders[i];
    t.push_back({i, i, target_orders[i]});
    for (Index j = 0; j < c; ++j) {
      if (sgn(entries[i][j]) != 0) t.push_back({i, r + j, entries[i][j]});
    }
  }
  auto snf = smith_normal_form(SparseIntMatrix::from_triplets(r, r + c, std::move(t)));
  BigInt coker = 1;
  for (const auto& f : snf.factors) coker *= f;
  return total / coker;
}

BigInt torsion_subgroup_order(const std::vector<BigInt>& orders, const BigInt& m) {
  BigInt out = 1;
  for (const auto& o : orders) {
    if (sgn(o) == 0) continue;
    out *= gcd(o, m);
  }
  return out;
}

}  // namespace cohomex

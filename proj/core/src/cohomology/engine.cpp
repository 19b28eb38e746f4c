#include "cohomex/cohomology/engine.hpp"

#include <unistd.h>

#include <algorithm>
#include <random>
#include <string>

#include "cohomex/errors.hpp"
#include "cohomex/linalg/homology.hpp"
#include "cohomex/util/number_theory.hpp"

namespace cohomex {

namespace {

using Clock = std::chrono::steady_clock;

unsigned max_precision(std::uint64_t p, unsigned bits = 63) {
  unsigned k = 0;
  unsigned __int128 x = p;
  while (x < (static_cast<unsigned __int128>(1) << std::min(bits, 63u))) {
    x *= p;
    ++k;
  }
  return k;
}

unsigned default_precision(std::uint64_t p, std::uint64_t max_generators) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(256 * 256) * max_generators;
  const std::uint64_t b =
      bound > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(bound);
  return std::min(precision_for(p, b), max_precision(p));
}

std::uint64_t available_memory() {
  const long pages = ::sysconf(_SC_AVPHYS_PAGES);
  const long page = ::sysconf(_SC_PAGESIZE);
  if (pages <= 0 || page <= 0) return UINT64_MAX;
  return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page);
}

BigInt pow_big(std::uint64_t p, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

std::uint64_t pow_u64(std::uint64_t p, unsigned e) { return util::checked_pow(p, e); }

std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : util::factorize(n)) out.push_back(p);
  return out;
}

}  // namespace

std::vector<BigInt> CohomologyPresentation::orders() const {
  std::vector<BigInt> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b.order);
  return out;
}

struct CohomologyEngine::PrimeChain {
  PrimeChain(std::uint64_t p, unsigned k) : ring(p, k) {}
  LocalRing ring;
  std::vector<std::optional<LocalElimination>> elims;
};

CohomologyEngine::CohomologyEngine(FiniteGroup group, EngineOptions options)
    : group_(std::make_unique<FiniteGroup>(std::move(group))),
      options_(options),
      bar_(std::make_unique<BarComplex>(*group_, options.max_generators)) {}

CohomologyEngine::~CohomologyEngine() = default;
CohomologyEngine::CohomologyEngine(CohomologyEngine&&) noexcept = default;
CohomologyEngine& CohomologyEngine::operator=(CohomologyEngine&&) noexcept = default;

void CohomologyEngine::check_deadline() const {
  if (options_.deadline && Clock::now() > *options_.deadline) {
    throw ResourceLimitError("time limit reached while computing cohomology of " +
                             group_->descriptor());
  }
}

CohomologyEngine::PrimeChain& CohomologyEngine::chain(std::uint64_t p) {
  auto it = chains_.find(p);
  if (it == chains_.end()) {
    const unsigned k = options_.initial_precision
                           ? *options_.initial_precision
                           : default_precision(p, options_.max_generators);
    const unsigned cap = max_precision(p, options_.max_precision_bits);
    if (cap == 0) {
      throw ResourceLimitError("precision budget of " +
                               std::to_string(options_.max_precision_bits) +
                               " bits admits no power of " + std::to_string(p));
    }
    it = chains_.emplace(p, std::make_unique<PrimeChain>(p, std::min(k, cap))).first;
  }
  return *it->second;
}

unsigned CohomologyEngine::precision(std::uint64_t p) { return chain(p).ring.precision(); }

void CohomologyEngine::require_precision(std::uint64_t p, unsigned k) {
  auto& c = chain(p);
  if (c.ring.precision() >= k) return;
  if (k > max_precision(p, options_.max_precision_bits)) {
    throw PrecisionExhausted("precision " + std::to_string(p) + "^" + std::to_string(k) +
                             " exceeds the budget of " +
                             std::to_string(options_.max_precision_bits) + " bits");
  }
  c.ring = LocalRing(p, k);
  c.elims.clear();
  std::erase_if(presentations_, [&](const auto& kv) {
    const auto& coeffs = kv.first.second;
    return coeffs.is_integral() ? group_->order() % p == 0 : coeffs.modulus() % p == 0;
  });
}

const LocalElimination& CohomologyEngine::elimination(PrimeChain& c, unsigned t, bool rows,
                                                      bool cols) {
  if (c.elims.size() <= t) c.elims.resize(t + 1);
  if (c.elims[t] && (!rows || c.elims[t]->has_row_ops()) && (!cols || c.elims[t]->has_col_ops())) {
    return *c.elims[t];
  }
  const bool want_rows = rows || (c.elims[t] && c.elims[t]->has_row_ops());
  const bool want_cols = cols || (c.elims[t] && c.elims[t]->has_col_ops());

  const std::uint64_t n_rows = bar_->generator_count(t + 1);
  const std::uint64_t n_cols = bar_->generator_count(t);
  if (n_rows > UINT32_MAX || n_cols > UINT32_MAX) {
    throw ResourceLimitError("coboundary matrix exceeds 32-bit indexing");
  }
  // Rows carry at most t + 2 entries; elimination fill roughly sextuples that.
  const unsigned __int128 need =
      static_cast<unsigned __int128>(n_rows) * (t + 2) * sizeof(LocalEntry) * 6;
  const std::uint64_t limit =
      options_.max_memory_bytes ? options_.max_memory_bytes : available_memory();
  if (need > limit) {
    throw ResourceLimitError("eliminating d_" + std::to_string(t) + " of " +
                             group_->descriptor() + " needs about " +
                             std::to_string(static_cast<std::uint64_t>(need >> 20)) +
                             " MiB, limit is " + std::to_string(limit >> 20) + " MiB");
  }
  // Pivot rows of d_(t-1) span the image there; they are dropped as columns of d_t.
  std::vector<char> dropped(n_cols, 0);
  if (t > 0) {
    for (const auto& piv : elimination(c, t - 1, false, false).pivots()) dropped[piv.row] = 1;
  }

  check_deadline();
  const auto start = Clock::now();
  std::vector<LocalRow> local(n_rows);
  std::vector<BarComplex::RowEntry> buf;
  for (std::uint64_t r = 0; r < n_rows; ++r) {
    if ((r & 0xffff) == 0xffff) check_deadline();
    bar_->differential_row(t, r, buf);
    auto& row = local[r];
    for (auto [col, v] : buf) {
      if (dropped[col]) continue;
      const std::uint64_t x = c.ring.reduce(v);
      if (x != 0) row.push_back({static_cast<Index>(col), x});
    }
  }
  LocalEliminationOptions opts;
  opts.record_row_ops = want_rows;
  opts.record_col_ops = want_cols;
  opts.deadline = options_.deadline;
  c.elims[t] = eliminate_local(c.ring, static_cast<Index>(n_cols), std::move(local), opts);
  const auto& e = *c.elims[t];
  records_.push_back({c.ring.prime(), c.ring.precision(), t, n_rows, n_cols, e.rank(),
                      e.stats().max_nnz, want_rows || want_cols,
                      std::chrono::duration<double>(Clock::now() - start).count()});
  return e;
}

void CohomologyEngine::certify(PrimeChain& c, unsigned n) {
  if (n == 0) return;
  const std::uint64_t p = c.ring.prime();
  for (;;) {
    const std::size_t before = elimination(c, n - 1, false, false).rank();
    const std::size_t here = elimination(c, n, false, false).rank();
    const std::uint64_t count = bar_->generator_count(n);
    if (before + here == count) return;
    const unsigned k = c.ring.precision();
    const unsigned top = max_precision(p, options_.max_precision_bits);
    if (k >= top && top < max_precision(p)) {
      throw PrecisionExhausted("free rank persists in degree " + std::to_string(n) + " of " +
                               group_->descriptor() + " at the precision budget " +
                               std::to_string(p) + "^" + std::to_string(k));
    }
    if (k >= top) {
      throw InvariantViolation("free rank " + std::to_string(count - before - here) +
                               " in degree " + std::to_string(n) + " of " +
                               group_->descriptor() + " persists at precision " + std::to_string(p) +
                               "^" + std::to_string(k));
    }
    require_precision(p, std::min(top, k + std::max(4u, k / 2)));
  }
}

std::vector<std::uint64_t> CohomologyEngine::coefficient_primes(
    const CoefficientSpec& coeffs) const {
  return coeffs.is_integral() ? primes_of(group_->order()) : primes_of(coeffs.modulus());
}

std::vector<BigInt> CohomologyEngine::exact_cross_check(unsigned n) {
  const SparseIntMatrix d_a = n == 0 ? SparseIntMatrix(1, 0) : bar_->differential(n - 1);
  const SparseIntMatrix d_b = bar_->differential(n);
  const auto inv = homology_at(d_a, d_b);
  std::vector<BigInt> out(inv.free_rank(), 0);
  out.insert(out.end(), inv.torsion().begin(), inv.torsion().end());
  return out;
}

const CohomologyPresentation& CohomologyEngine::presentation(unsigned n,
                                                             const CoefficientSpec& coeffs) {
  const auto key = std::make_pair(n, coeffs);
  if (auto it = presentations_.find(key); it != presentations_.end()) return it->second;

  const std::uint64_t order = group_->order();
  for (auto p : coefficient_primes(coeffs)) {
    const unsigned v = order % p == 0 ? util::valuation(order, p) : 0;
    const unsigned j = coeffs.is_integral() ? 0 : util::valuation(coeffs.modulus(), p);
    require_precision(p, std::max(j + v + 1, 3 * v + 1));
  }

  CohomologyPresentation pres;
  pres.degree = n;
  pres.coeffs = coeffs;
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  if (coeffs.is_integral() && n == 0) {
    pres.basis.push_back({0, BigInt(0), ClassKind::free, 0});
    free_rank = 1;
  } else if (!coeffs.is_integral() || order > 1) {
    for (auto p : coefficient_primes(coeffs)) {
      auto& c = chain(p);
      certify(c, n);
      const unsigned j = coeffs.is_integral() ? 0 : util::valuation(coeffs.modulus(), p);
      auto cap = [&](unsigned level) { return coeffs.is_integral() ? level : std::min(level, j); };
      std::vector<BasisClass> classes;
      if (n > 0) {
        const auto& prev = elimination(c, n - 1, false, false);
        for (std::size_t i = 0; i < prev.pivots().size(); ++i) {
          const unsigned l = cap(prev.pivots()[i].level);
          if (l > 0) classes.push_back({p, pow_big(p, l), ClassKind::torsion, i});
        }
      }
      if (!coeffs.is_integral()) {
        const auto& here = elimination(c, n, false, false);
        for (std::size_t i = 0; i < here.pivots().size(); ++i) {
          const unsigned l = cap(here.pivots()[i].level);
          if (l > 0) classes.push_back({p, pow_big(p, l), ClassKind::modular_pivot, i});
        }
        const std::uint64_t count = bar_->generator_count(n);
        std::vector<char> used(count, 0);
        if (n > 0) {
          for (const auto& piv : elimination(c, n - 1, false, false).pivots()) used[piv.row] = 1;
        }
        for (const auto& piv : here.pivots()) used[piv.col] = 1;
        for (std::uint64_t col = 0; col < count; ++col) {
          if (!used[col]) classes.push_back({p, pow_big(p, j), ClassKind::modular_free, col});
        }
      }
      std::stable_sort(classes.begin(), classes.end(),
                       [](const BasisClass& a, const BasisClass& b) { return a.order < b.order; });
      for (auto& b : classes) {
        torsion.push_back(b.order);
        pres.basis.push_back(std::move(b));
      }
    }
  }
  pres.invariants = AbelianGroupInvariants::from_cyclic_orders(free_rank, torsion);

  if (n > 0) {
    const Exponent e = exponent_of(pres.invariants);
    if (e.has_free_part || BigInt(static_cast<unsigned long>(order)) % e.value != 0) {
      throw InvariantViolation("exponent of H^" + std::to_string(n) + "(" + group_->descriptor() +
                               ") does not divide the group order");
    }
  }
  if (coeffs.is_integral() && options_.exact_check_rows > 0 &&
      bar_->predicted_count(n + 1) <= options_.exact_check_rows) {
    const auto exact = exact_cross_check(n);
    std::size_t exact_free = 0;
    std::vector<BigInt> exact_torsion;
    for (const auto& o : exact) {
      if (sgn(o) == 0) {
        ++exact_free;
      } else {
        exact_torsion.push_back(o);
      }
    }
    if (AbelianGroupInvariants::from_cyclic_orders(exact_free, exact_torsion) != pres.invariants) {
      throw InvariantViolation("exact and local computations of H^" + std::to_string(n) + "(" +
                               group_->descriptor() + ") disagree");
    }
  }
  return presentations_.emplace(key, std::move(pres)).first->second;
}

AbelianGroupInvariants CohomologyEngine::cohomology(unsigned n, const CoefficientSpec& coeffs) {
  return presentation(n, coeffs).invariants;
}

LocalCochain CohomologyEngine::representative(unsigned n, const CoefficientSpec& coeffs,
                                              std::size_t i) {
  const CohomologyPresentation pres = presentation(n, coeffs);
  if (i >= pres.basis.size()) throw PreconditionError("basis index out of range");
  const BasisClass& b = pres.basis[i];
  LocalCochain out;
  if (b.kind == ClassKind::free) {
    out.values = {1};
    return out;
  }
  auto& c = chain(b.prime);
  out.prime = b.prime;
  out.precision = c.ring.precision();
  out.values.assign(bar_->generator_count(n), 0);
  switch (b.kind) {
    case ClassKind::torsion: {
      // p^level x = d(V e_c) / unit, so x is the exact integral cocycle d(V e_c) / p^level.
      const auto& e = elimination(c, n - 1, false, true);
      const auto& piv = e.pivots()[b.index];
      std::vector<std::uint64_t> y(bar_->generator_count(n - 1), 0);
      y[piv.col] = c.ring.inverse(piv.unit);
      e.apply_v(y);
      const std::int64_t pl = static_cast<std::int64_t>(pow_u64(b.prime, piv.level));
      std::vector<BarComplex::RowEntry> buf;
      for (std::uint64_t r = 0; r < out.values.size(); ++r) {
        bar_->differential_row(n - 1, r, buf);
        __int128 acc = 0;
        for (auto [col, v] : buf) acc += static_cast<__int128>(v) * y[col];
        if (acc % pl != 0) throw InvariantViolation("torsion representative is not divisible");
        acc /= pl;
        acc %= static_cast<__int128>(c.ring.modulus());
        if (acc < 0) acc += c.ring.modulus();
        out.values[r] = static_cast<std::uint64_t>(acc);
      }
      break;
    }
    case ClassKind::modular_pivot: {
      const auto& e = elimination(c, n, false, true);
      const auto& piv = e.pivots()[b.index];
      const unsigned j = util::valuation(coeffs.modulus(), b.prime);
      out.values[piv.col] = pow_u64(b.prime, j - std::min(piv.level, j));
      e.apply_v(out.values);
      break;
    }
    case ClassKind::modular_free: {
      const auto& e = elimination(c, n, false, true);
      out.values[b.index] = 1;
      e.apply_v(out.values);
      break;
    }
    case ClassKind::free:
      break;
  }
  return out;
}

std::vector<BigInt> CohomologyEngine::local_coordinates(unsigned n, const CoefficientSpec& coeffs,
                                                        const LocalCochain& cochain) {
  const CohomologyPresentation pres = presentation(n, coeffs);
  std::vector<BigInt> out(pres.basis.size(), 0);
  const std::uint64_t count = bar_->generator_count(n);
  if (cochain.values.size() != count) throw PreconditionError("cochain length mismatch");

  if (coeffs.is_integral() && n == 0) {
    if (cochain.prime == 0) {
      out[0] = from_u64(cochain.values[0]);
    } else {
      out[0] = BigInt(static_cast<long>(LocalRing(cochain.prime, cochain.precision)
                                            .lift(cochain.values[0])));
    }
    return out;
  }
  const std::uint64_t p = cochain.prime;
  bool any = false;
  for (const auto& b : pres.basis) any = any || b.prime == p;
  if (!any) return out;

  auto& c = chain(p);
  const LocalRing& ring = c.ring;
  const unsigned k = ring.precision();
  const unsigned e = std::min(cochain.precision, k);
  std::vector<std::uint64_t> w(count);
  const std::uint64_t q = ring.modulus();
  for (std::uint64_t i = 0; i < count; ++i) w[i] = cochain.values[i] % q;

  const unsigned j = coeffs.is_integral() ? k : util::valuation(coeffs.modulus(), p);
  const std::uint64_t pj = pow_u64(p, j);
  std::vector<std::int64_t> prev_row;
  unsigned a = 0;
  if (n > 0) {
    const auto& prev = elimination(c, n - 1, true, false);
    prev.apply_u(w);
    prev_row = prev.pivot_of_row();
    for (const auto& piv : prev.pivots()) a = std::max(a, piv.level);
  }
  auto prev_pivot = [&](std::size_t i) -> const LocalPivot& {
    return c.elims[n - 1]->pivots()[i];
  };

  const auto& here = elimination(c, n, false, !coeffs.is_integral());
  std::vector<std::uint64_t> beta;
  if (coeffs.is_integral()) {
    // The part of U z off the pivot rows of d_(n-1) is divisible by
    // p^(e - a - b) for a cocycle; the class it carries is then zero.
    unsigned bmax = 0;
    for (const auto& piv : here.pivots()) bmax = std::max(bmax, piv.level);
    if (e < 2 * a + bmax + 1) {
      throw PrecisionExhausted("precision " + std::to_string(e) +
                               " is too small to read coordinates in degree " + std::to_string(n));
    }
    const std::uint64_t bound = pow_u64(p, e - a - bmax);
    for (std::uint64_t s = 0; s < count; ++s) {
      if (n > 0 && prev_row[s] >= 0) continue;
      if (w[s] % bound != 0) {
        throw InvariantViolation("cochain is not a cocycle in degree " + std::to_string(n));
      }
    }
  } else {
    if (e < j) {
      throw PrecisionExhausted("cochain precision is below the coefficient modulus");
    }
    beta.assign(count, 0);
    for (std::uint64_t s = 0; s < count; ++s) {
      if (n == 0 || prev_row[s] < 0) beta[s] = w[s];
    }
    here.apply_v_inverse(beta);
    for (auto& x : beta) x %= pj;
    for (const auto& piv : here.pivots()) {
      const std::uint64_t s = pow_u64(p, j - std::min(piv.level, j));
      if (beta[piv.col] % s != 0) {
        throw InvariantViolation("cochain is not a cocycle modulo " +
                                 std::to_string(coeffs.modulus()) + " in degree " +
                                 std::to_string(n));
      }
    }
  }

  for (std::size_t i = 0; i < pres.basis.size(); ++i) {
    const BasisClass& b = pres.basis[i];
    if (b.prime != p) continue;
    const std::uint64_t ord = to_u64(b.order);
    switch (b.kind) {
      case ClassKind::torsion: {
        out[i] = from_u64(w[prev_pivot(b.index).row] % ord);
        break;
      }
      case ClassKind::modular_pivot: {
        const auto& piv = here.pivots()[b.index];
        const std::uint64_t s = pj / ord;
        out[i] = from_u64(beta[piv.col] / s % ord);
        break;
      }
      case ClassKind::modular_free:
        out[i] = from_u64(beta[b.index] % ord);
        break;
      case ClassKind::free:
        break;
    }
  }
  return out;
}

std::vector<BigInt> CohomologyEngine::coordinates(unsigned n, const CoefficientSpec& coeffs,
                                                  const std::vector<BigInt>& cochain) {
  const std::uint64_t count = bar_->generator_count(n);
  if (cochain.size() != count) throw PreconditionError("cochain length mismatch");

  // Exact cocycle test before working locally.
  const std::uint64_t next = bar_->generator_count(n + 1);
  std::vector<BarComplex::RowEntry> buf;
  BigInt acc;
  for (std::uint64_t r = 0; r < next; ++r) {
    bar_->differential_row(n, r, buf);
    acc = 0;
    for (auto [col, v] : buf) acc += cochain[col] * v;
    if (!coeffs.is_integral()) acc %= static_cast<unsigned long>(coeffs.modulus());
    if (sgn(acc) != 0) {
      throw InvariantViolation("cochain is not a cocycle in degree " + std::to_string(n));
    }
  }

  const CohomologyPresentation pres = presentation(n, coeffs);
  if (coeffs.is_integral() && n == 0) return {cochain[0]};
  std::vector<BigInt> out(pres.basis.size(), 0);
  for (auto p : coefficient_primes(coeffs)) {
    auto& c = chain(p);
    LocalCochain local{p, c.ring.precision(), std::vector<std::uint64_t>(count)};
    const unsigned long q = c.ring.modulus();
    for (std::uint64_t i = 0; i < count; ++i) {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), cochain[i].get_mpz_t(), q);
      local.values[i] = to_u64(r);
    }
    auto part = local_coordinates(n, coeffs, local);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (pres.basis[i].prime == p) out[i] = part[i];
    }
  }
  return out;
}

namespace {

/// d_n applied to a local cochain, tested for vanishing modulo p^j.
bool local_cocycle(const BarComplex& bar, unsigned n, const LocalRing& ring,
                   const std::vector<std::uint64_t>& values, std::uint64_t pj) {
  const std::uint64_t rows = bar.generator_count(n + 1);
  std::vector<BarComplex::RowEntry> buf;
  for (std::uint64_t r = 0; r < rows; ++r) {
    bar.differential_row(n, r, buf);
    std::uint64_t s = 0;
    for (auto [col, v] : buf) s = ring.add(s, ring.mul(ring.reduce(v), values[col]));
    if (s % pj != 0) return false;
  }
  return true;
}

}  // namespace

HomMatrix CohomologyEngine::restriction(CohomologyEngine& sub,
                                        std::span<const ElementId> inclusion, unsigned n,
                                        const CoefficientSpec& coeffs) {
  const FiniteGroup& h = sub.group();
  if (inclusion.size() != h.order() || inclusion.empty() ||
      inclusion[0] != FiniteGroup::kIdentity) {
    throw PreconditionError("inclusion must send the identity of the subgroup to the identity");
  }
  for (std::size_t a = 0; a < h.order(); ++a) {
    if (inclusion[a] >= group_->order()) throw PreconditionError("inclusion out of range");
    for (std::size_t b = 0; b < h.order(); ++b) {
      if (inclusion[h.mul(static_cast<ElementId>(a), static_cast<ElementId>(b))] !=
          group_->mul(inclusion[a], inclusion[b])) {
        throw PreconditionError("inclusion is not a homomorphism");
      }
    }
  }
  if (group_->order() % h.order() != 0) throw PreconditionError("subgroup order must divide |G|");

  for (auto p : coefficient_primes(coeffs)) {
    const unsigned k = std::max(precision(p), sub.precision(p));
    require_precision(p, k);
    sub.require_precision(p, k);
  }
  // Presentations may raise precision for modular coefficients; align again.
  presentation(n, coeffs);
  sub.presentation(n, coeffs);
  for (auto p : coefficient_primes(coeffs)) {
    const unsigned k = std::max(precision(p), sub.precision(p));
    require_precision(p, k);
    sub.require_precision(p, k);
  }
  const CohomologyPresentation source = presentation(n, coeffs);
  const CohomologyPresentation target = sub.presentation(n, coeffs);
  HomMatrix out(source.orders(), target.orders());

  if (coeffs.is_integral() && n == 0) {
    out.entries[0][0] = 1;
    return out;
  }
  const std::uint64_t sub_count = sub.bar().generator_count(n);
  std::vector<std::uint64_t> image_of(sub_count);
  std::vector<ElementId> tuple(n);
  for (std::uint64_t t = 0; t < sub_count; ++t) {
    auto ht = sub.bar().decode(n, t);
    for (unsigned i = 0; i < n; ++i) tuple[i] = inclusion[ht[i]];
    image_of[t] = bar_->encode(tuple);
  }

  for (std::size_t i = 0; i < source.basis.size(); ++i) {
    check_deadline();
    const LocalCochain z = representative(n, coeffs, i);
    LocalCochain r{z.prime, z.precision, std::vector<std::uint64_t>(sub_count)};
    for (std::uint64_t t = 0; t < sub_count; ++t) r.values[t] = z.values[image_of[t]];
    const LocalRing ring(z.prime, z.precision);
    const std::uint64_t pj = coeffs.is_integral()
                                 ? ring.modulus()
                                 : pow_u64(z.prime, util::valuation(coeffs.modulus(), z.prime));
    if (!local_cocycle(sub.bar(), n, ring, r.values, pj)) {
      throw InvariantViolation("restricted representative is not a cocycle");
    }
    out.set_column(i, sub.local_coordinates(n, coeffs, r));
  }
  return out;
}

HomMatrix CohomologyEngine::bockstein(unsigned n, std::uint64_t m) {
  const CoefficientSpec mod = CoefficientSpec::modular(m);
  presentation(n, mod);
  const CohomologyPresentation target = presentation(n + 1, CoefficientSpec::integral());
  const CohomologyPresentation src = presentation(n, mod);
  HomMatrix out(src.orders(), target.orders());

  const std::uint64_t rows = bar_->generator_count(n + 1);
  std::vector<BarComplex::RowEntry> buf;
  for (std::size_t i = 0; i < src.basis.size(); ++i) {
    check_deadline();
    const std::uint64_t p = src.basis[i].prime;
    const unsigned j = util::valuation(m, p);
    const std::uint64_t pj = pow_u64(p, j);
    const std::uint64_t u = m / pj;
    const LocalCochain z = representative(n, mod, i);
    const LocalRing ring(p, z.precision);
    LocalCochain y{p, z.precision, std::vector<std::uint64_t>(rows)};
    for (std::uint64_t r = 0; r < rows; ++r) {
      bar_->differential_row(n, r, buf);
      __int128 s = 0;
      for (auto [col, v] : buf) s += static_cast<__int128>(v) * z.values[col];
      if (s % pj != 0) throw InvariantViolation("Bockstein lift is not divisible by p^j");
      s /= pj;
      __int128 rem = s % ring.modulus();
      if (rem < 0) rem += ring.modulus();
      y.values[r] = static_cast<std::uint64_t>(rem);
    }
    auto coords = local_coordinates(n + 1, CoefficientSpec::integral(), y);
    const BigInt u_inv = from_u64(ring.inverse(u % ring.modulus()));
    for (auto& x : coords) x *= u_inv;
    out.set_column(i, std::move(coords));
  }
  return out;
}

HomMatrix restriction(CohomologyEngine& g, CohomologyEngine& sub, const Subgroup& h, unsigned n,
                      const CoefficientSpec& coeffs) {
  if (h.order() != sub.group().order()) {
    throw PreconditionError("subgroup engine does not match the subgroup");
  }
  return g.restriction(sub, h.members, n, coeffs);
}

GeneratorRestrictingResult generator_restricting_classes(CohomologyEngine& g,
                                                         CohomologyEngine& c_engine,
                                                         const Subgroup& c, unsigned degree,
                                                         std::uint64_t cap, bool sample) {
  if (degree == 0 || degree % 2 != 0) {
    throw PreconditionError("generator restriction needs a positive even degree");
  }
  const std::uint64_t n = c.order();
  bool cyclic = false;
  for (ElementId x : c.members) cyclic = cyclic || g.group().element_order(x) == n;
  if (!cyclic) throw PreconditionError("subgroup is not cyclic");
  if (cap == 0) throw PreconditionError("enumeration cap must be positive");

  const HomMatrix res = restriction(g, c_engine, c, degree, CoefficientSpec::integral());
  GeneratorRestrictingResult out;
  out.degree = degree;
  out.group_order = 1;
  for (const auto& o : res.source_orders) out.group_order *= o;
  const BigInt n_big = from_u64(n);
  std::vector<std::uint64_t> radix;
  for (const auto& o : res.source_orders) radix.push_back(to_u64(o));

  auto consider = [&](const std::vector<BigInt>& x) {
    if (element_order(res.apply(x), res.target_orders) == n_big) {
      out.classes.push_back({{degree, x}, element_order(x, res.source_orders)});
    }
  };
  std::vector<BigInt> x(radix.size(), 0);
  if (out.group_order <= from_u64(cap)) {
    std::vector<std::uint64_t> digits(radix.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < radix.size(); ++i) x[i] = from_u64(digits[i]);
      consider(x);
      std::size_t i = 0;
      while (i < radix.size() && ++digits[i] == radix[i]) digits[i++] = 0;
      if (i == radix.size()) break;
    }
    out.examined = out.group_order;
  } else {
    if (!sample) {
      throw ResourceLimitError("H^" + std::to_string(degree) + " has " + to_string(out.group_order) +
                               " elements, above the enumeration cap " + std::to_string(cap));
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (std::uint64_t s = 0; s < cap; ++s) {
      for (std::size_t i = 0; i < radix.size(); ++i) {
        x[i] = from_u64(std::uniform_int_distribution<std::uint64_t>(0, radix[i] - 1)(rng));
      }
      consider(x);
    }
    out.examined = from_u64(cap);
    out.partial = true;
  }
  return out;
}

}  // namespace cohomex

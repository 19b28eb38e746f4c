#include "cohomex/group/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cohomex/errors.hpp"
#include "cohomex/group/descriptor.hpp"
#include "cohomex/util/number_theory.hpp"

namespace cohomex {

bool FamilyParams::is_normalized() const {
  return alpha >= 1 && beta >= 1 && gamma >= 1 && delta <= gamma &&
         gamma - delta <= std::min(alpha, beta);
}

FamilyParams normalize_params(std::uint64_t p, long long alpha, long long beta,
                              long long gamma, long long delta) {
  if (!util::is_prime(p)) {
    throw PreconditionError("family parameter p=" + std::to_string(p) +
                            " is not prime");
  }
  if (alpha < 1 || beta < 1 || gamma < 1) {
    throw PreconditionError("family parameters alpha, beta, gamma must be positive");
  }
  if (delta < 0) throw PreconditionError("family parameter delta must be >= 0");
  if (gamma < delta) delta = gamma;
  if (gamma - delta > std::min(alpha, beta)) gamma = std::min(alpha, beta) + delta;
  return FamilyParams{p, static_cast<unsigned>(alpha), static_cast<unsigned>(beta),
                      static_cast<unsigned>(gamma), static_cast<unsigned>(delta)};
}

FamilyParams normalize_params(const FamilyParams& raw) {
  return normalize_params(raw.p, raw.alpha, raw.beta, raw.gamma, raw.delta);
}

FiniteGroup build_family_group(const FamilyParams& params) {
  if (!params.is_normalized()) {
    throw PreconditionError("family parameters are not normalized");
  }
  const std::uint64_t p = params.p;
  if (params.log_order() > 64 ||
      util::checked_pow(p, params.log_order()) > kMaxGroupOrder) {
    throw ResourceLimitError("family group order p^" +
                             std::to_string(params.log_order()) +
                             " exceeds the supported maximum");
  }
  const auto na = util::checked_pow(p, params.alpha);
  const auto nb = util::checked_pow(p, params.beta);
  const auto nc = util::checked_pow(p, params.gamma);
  const auto twist = util::checked_pow(p, params.delta) % nc;
  const std::size_t order = na * nb * nc;
  auto id = [&](std::uint64_t i, std::uint64_t j, std::uint64_t k) {
    return static_cast<ElementId>(i + na * (j + nb * k));
  };
  // b^j a^i = a^i b^j c^(-ij p^delta), equivalently [a,b] = a^-1 b^-1 a b = c^(p^delta).
  std::vector<ElementId> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const auto i1 = x % na, j1 = (x / na) % nb, k1 = x / (na * nb);
    for (std::uint64_t y = 0; y < order; ++y) {
      const auto i2 = y % na, j2 = (y / na) % nb, k2 = y / (na * nb);
      const auto shift = (j1 * i2 % nc) * twist % nc;
      table[x * order + y] =
          id((i1 + i2) % na, (j1 + j2) % nb, (k1 + k2 + nc - shift) % nc);
    }
  }
  std::vector<NamedGenerator> gens{{"a", id(1 % na, 0, 0)},
                                   {"b", id(0, 1 % nb, 0)},
                                   {"c", id(0, 0, 1 % nc)}};
  return FiniteGroup(order, std::move(table), std::move(gens),
                     format_family_descriptor(params));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  if (n > kMaxGroupOrder) {
    throw ResourceLimitError("cyclic group order exceeds the supported maximum");
  }
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<ElementId>((a + b) % n);
    }
  }
  std::vector<NamedGenerator> gens{{"g", static_cast<ElementId>(1 % n)}};
  return FiniteGroup(n, std::move(table), std::move(gens),
                     "cyclic:" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order();
  if (ng * nh > kMaxGroupOrder) {
    throw ResourceLimitError("direct product order " + std::to_string(ng * nh) +
                             " exceeds the supported maximum");
  }
  const std::size_t n = ng * nh;
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto gx = static_cast<ElementId>(x / nh), hx = static_cast<ElementId>(x % nh);
      const auto gy = static_cast<ElementId>(y / nh), hy = static_cast<ElementId>(y % nh);
      table[x * n + y] = static_cast<ElementId>(g.mul(gx, gy) * nh + h.mul(hx, hy));
    }
  }
  std::set<std::string> left_names;
  for (const auto& gen : g.generators()) left_names.insert(gen.name);
  std::vector<NamedGenerator> gens;
  bool clash = false;
  for (const auto& gen : h.generators()) clash = clash || left_names.count(gen.name);
  for (const auto& gen : g.generators()) {
    gens.push_back({clash ? gen.name + "_1" : gen.name,
                    static_cast<ElementId>(gen.element * nh)});
  }
  for (const auto& gen : h.generators()) {
    gens.push_back({clash ? gen.name + "_2" : gen.name, gen.element});
  }
  return FiniteGroup(n, std::move(table), std::move(gens),
                     format_product_descriptor(g.descriptor(), h.descriptor()));
}

FiniteGroup permutation_group(std::size_t degree,
                              const std::vector<std::vector<std::uint32_t>>& gens,
                              const std::vector<std::string>& names,
                              std::string descriptor) {
  using Perm = std::vector<std::uint32_t>;
  Perm identity(degree);
  for (std::uint32_t i = 0; i < degree; ++i) identity[i] = i;
  for (const auto& g : gens) {
    if (g.size() != degree) throw PreconditionError("permutation has wrong degree");
  }
  // Composition convention: (x * y)(i) = y(x(i)), i.e. apply x first.
  auto compose = [&](const Perm& x, const Perm& y) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };
  std::map<Perm, ElementId> index{{identity, 0}};
  std::vector<Perm> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = compose(elements[i], g);
      if (!index.count(next)) {
        if (elements.size() >= kMaxGroupOrder) {
          throw ResourceLimitError("permutation group exceeds the supported order");
        }
        index.emplace(next, static_cast<ElementId>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  std::vector<NamedGenerator> named;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    named.push_back({names.at(i), index.at(gens[i])});
  }
  return FiniteGroup(n, std::move(table), std::move(named), std::move(descriptor));
}

FiniteGroup wreath_sylow(std::uint64_t p, unsigned n) {
  if (!util::is_prime(p)) throw PreconditionError("wreath_sylow needs a prime p");
  if (n == 0) throw PreconditionError("wreath_sylow needs n >= 1");
  // |G_n| = p^((p^n - 1) / (p - 1)); refuse before enumerating.
  const std::uint64_t points = util::checked_pow(p, n);
  const std::uint64_t log_order = (points - 1) / (p - 1);
  if (log_order >= 64 || util::checked_pow(p, static_cast<unsigned>(log_order)) >
                             kMaxGroupOrder) {
    throw ResourceLimitError("Sylow subgroup of S_" + std::to_string(points) +
                             " exceeds the supported order");
  }
  // Generator t_l increments base-p digit l of a point, provided every
  // higher digit is zero; t_(n-1) acts on the top digit unconditionally.
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::string> names;
  for (unsigned level = 0; level < n; ++level) {
    const std::uint64_t unit = util::checked_pow(p, level);
    std::vector<std::uint32_t> perm(points);
    for (std::uint64_t x = 0; x < points; ++x) {
      const bool active = x / (unit * p) == 0;
      if (!active) {
        perm[x] = static_cast<std::uint32_t>(x);
        continue;
      }
      const std::uint64_t digit = (x / unit) % p;
      perm[x] = static_cast<std::uint32_t>(x - digit * unit + ((digit + 1) % p) * unit);
    }
    gens.push_back(std::move(perm));
    names.push_back("t" + std::to_string(level));
  }
  return permutation_group(points, gens, names, format_wreath_descriptor(p, n));
}

}  // namespace cohomex

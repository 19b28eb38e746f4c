#include "cohomex/group/subgroups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cohomex/errors.hpp"
#include "cohomex/util/number_theory.hpp"

namespace cohomex {

namespace {

/// Greedy generating set: keep an element only if it enlarges the span.
std::vector<ElementId> greedy_generators(const FiniteGroup& g,
                                         std::span<const ElementId> members) {
  std::vector<ElementId> gens;
  std::vector<ElementId> span{FiniteGroup::kIdentity};
  // Prefer elements of large order so fewer generators are needed.
  std::vector<ElementId> order(members.begin(), members.end());
  std::stable_sort(order.begin(), order.end(), [&](ElementId x, ElementId y) {
    return g.element_order(x) > g.element_order(y);
  });
  for (ElementId x : order) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

std::vector<std::size_t> order_histogram(const FiniteGroup& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (ElementId x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

}  // namespace

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s{g.descriptor(), {}};
  s.members.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) s.members[x] = x;
  return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{g.descriptor(), {FiniteGroup::kIdentity}};
}

Subgroup generate_subgroup(const FiniteGroup& g, std::span<const ElementId> gens) {
  for (ElementId x : gens) {
    if (x >= g.order()) throw PreconditionError("element id out of range");
  }
  return Subgroup{g.descriptor(), closure(g, gens)};
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != FiniteGroup::kIdentity) {
    throw PreconditionError("subgroup must contain the identity");
  }
  Subgroup s{g.descriptor(), std::move(members)};
  for (ElementId x : s.members) {
    if (x >= g.order()) throw PreconditionError("element id out of range");
    if (!s.contains(g.inv(x))) throw PreconditionError("set is not closed under inverses");
    for (ElementId y : s.members) {
      if (!s.contains(g.mul(x, y))) {
        throw PreconditionError("set is not closed under multiplication");
      }
    }
  }
  if (g.order() % s.order() != 0) {
    throw InvariantViolation("subgroup order does not divide the group order");
  }
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out{a.parent, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(out.members));
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementId x : h.members) {
    for (const auto& gen : g.generators()) {
      if (!h.contains(g.conjugate(x, gen.element))) return false;
    }
  }
  return true;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z{g.descriptor(), {}};
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (const auto& gen : g.generators()) {
      if (g.mul(x, gen.element) != g.mul(gen.element, x)) {
        central = false;
        break;
      }
    }
    if (central) z.members.push_back(x);
  }
  return z;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup z{g.descriptor(), {}};
  for (ElementId x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (ElementId y : h.members) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) z.members.push_back(x);
  }
  return z;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<ElementId> comms;
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generate_subgroup(g, comms);
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  if (!g.is_p_group()) throw PreconditionError("Frattini subgroup needs a p-group");
  const auto p = static_cast<long long>(g.prime());
  auto comm = commutator_subgroup(g);
  std::vector<ElementId> seeds = comm.members;
  for (ElementId x = 0; x < g.order(); ++x) seeds.push_back(g.pow(x, p));
  return generate_subgroup(g, seeds);
}

bool is_elementary_abelian(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  if (!g.is_abelian() || !g.is_p_group()) return false;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != g.prime()) return false;
  }
  return true;
}

AbelianGroupInvariants abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) {
    throw PreconditionError("abelian_invariants called on nonabelian group " +
                            g.descriptor());
  }
  std::vector<std::uint64_t> orders;
  for (auto [p, v] : util::factorize(g.order())) {
    // log_p |{x : x^(p^j) = 1}| = sum_i min(j, e_i) over the p-primary factors.
    std::vector<unsigned> omega{0};
    for (unsigned j = 1; omega.back() < v; ++j) {
      const auto pj = util::checked_pow(p, j);
      std::size_t count = 0;
      for (ElementId x = 0; x < g.order(); ++x) {
        if (pj % g.element_order(x) == 0) ++count;
      }
      omega.push_back(static_cast<unsigned>(util::exact_log(count, p)));
    }
    // Number of factors of order >= p^j is omega[j] - omega[j-1].
    const unsigned top = static_cast<unsigned>(omega.size()) - 1;
    for (unsigned j = 1; j <= top; ++j) {
      const unsigned ge_j = omega[j] - omega[j - 1];
      const unsigned ge_next = j < top ? omega[j + 1] - omega[j] : 0;
      for (unsigned k = 0; k < ge_j - ge_next; ++k) {
        orders.push_back(util::checked_pow(p, j));
      }
    }
  }
  return AbelianGroupInvariants::from_cyclic_orders(0, orders);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = h.order();
  std::vector<ElementId> local(g.order(), static_cast<ElementId>(n));
  for (std::size_t i = 0; i < n; ++i) local[h.members[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ElementId prod = local[g.mul(h.members[i], h.members[j])];
      if (prod == n) throw PreconditionError("set is not a subgroup");
      table[i * n + j] = prod;
    }
  }
  std::vector<NamedGenerator> gens;
  std::size_t idx = 0;
  for (ElementId x : greedy_generators(g, h.members)) {
    gens.push_back({"h" + std::to_string(idx++), local[x]});
  }
  std::string desc = "sub:(" + g.descriptor() + ")[";
  for (std::size_t i = 0; i < n; ++i) {
    desc += (i ? "," : "") + std::to_string(h.members[i]);
  }
  desc += "]";
  return FiniteGroup(n, std::move(table), std::move(gens), std::move(desc));
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Subgroup& h) {
  if (h.order() == 1) return {};
  const FiniteGroup hg = subgroup_as_group(g, h);
  if (!hg.is_p_group()) throw PreconditionError("maximal_subgroups needs a p-group");
  const std::uint64_t p = hg.prime();
  const Subgroup phi = frattini_subgroup(hg);
  // Basis of the F_p-vector space H / Phi(H).
  std::vector<ElementId> basis;
  std::vector<ElementId> seeds = phi.members;
  std::vector<ElementId> span = phi.members;
  for (ElementId x = 0; x < hg.order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    basis.push_back(x);
    seeds.push_back(x);
    span = closure(hg, seeds);
  }
  const std::size_t d = basis.size();
  std::set<std::vector<ElementId>> found;
  // Hyperplanes are kernels of functionals f, normalized so the first
  // nonzero coordinate is 1.
  std::vector<std::uint64_t> f(d, 0);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool seen_nonzero) {
    if (i == d) {
      if (!seen_nonzero) return;
      std::size_t lead = 0;
      while (f[lead] == 0) ++lead;
      std::vector<ElementId> gens = phi.members;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == lead) continue;
        // e_j - f_j e_lead lies in the kernel.
        const auto coeff = static_cast<long long>((p - f[j]) % p);
        gens.push_back(hg.mul(basis[j], hg.pow(basis[lead], coeff)));
      }
      std::vector<ElementId> members;
      for (ElementId x : closure(hg, gens)) members.push_back(h.members[x]);
      std::sort(members.begin(), members.end());
      found.insert(std::move(members));
      return;
    }
    const std::uint64_t limit = seen_nonzero ? p : 2;
    for (std::uint64_t v = 0; v < limit; ++v) {
      f[i] = v;
      rec(i + 1, seen_nonzero || v != 0);
    }
    f[i] = 0;
  };
  rec(0, false);
  std::vector<Subgroup> out;
  for (const auto& m : found) out.push_back(Subgroup{g.descriptor(), m});
  return out;
}

std::vector<Subgroup> subgroups_of_index_at_most(const FiniteGroup& g,
                                                 std::uint64_t bound,
                                                 unsigned max_depth) {
  if (!g.is_p_group()) {
    throw PreconditionError("subgroup enumeration needs a p-group, got " +
                            g.descriptor());
  }
  std::vector<Subgroup> all{whole_group(g)};
  if (g.order() == 1 || bound < g.prime()) return all;
  const std::uint64_t p = g.prime();
  unsigned depth = 0;
  for (std::uint64_t b = bound; b >= p; b /= p) ++depth;
  if (depth > max_depth) {
    throw ResourceLimitError("subgroup enumeration to index " + std::to_string(bound) +
                             " needs depth " + std::to_string(depth) +
                             ", above the configured " + std::to_string(max_depth));
  }
  std::set<std::vector<ElementId>> seen{all.front().members};
  std::vector<Subgroup> frontier = all;
  for (unsigned step = 0; step < depth; ++step) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      for (auto& m : maximal_subgroups(g, h)) {
        if (seen.insert(m.members).second) next.push_back(std::move(m));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.members < b.members;
  });
  return all;
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  Subgroup core = h;
  for (ElementId x = 0; x < g.order(); ++x) {
    std::vector<ElementId> conj;
    conj.reserve(h.order());
    for (ElementId y : h.members) conj.push_back(g.conjugate(y, x));
    std::sort(conj.begin(), conj.end());
    core = intersect(core, Subgroup{g.descriptor(), std::move(conj)});
  }
  return core;
}

CosetAction coset_action(const FiniteGroup& g, const Subgroup& h) {
  CosetAction action;
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    const auto idx = static_cast<std::uint32_t>(action.cosets.size());
    std::vector<ElementId> coset;
    for (ElementId y : h.members) {
      const ElementId yx = g.mul(y, x);
      coset_of[yx] = idx;
      coset.push_back(yx);
    }
    std::sort(coset.begin(), coset.end());
    action.cosets.push_back(std::move(coset));
  }
  action.images.assign(g.order(), std::vector<std::uint32_t>(action.cosets.size()));
  for (ElementId x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < action.cosets.size(); ++i) {
      action.images[x][i] = coset_of[g.mul(action.cosets[i].front(), x)];
    }
  }
  return action;
}

std::vector<ElementId> CosetAction::kernel() const {
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < images.size(); ++x) {
    bool trivial = true;
    for (std::size_t i = 0; i < images[x].size() && trivial; ++i) {
      trivial = images[x][i] == i;
    }
    if (trivial) out.push_back(static_cast<ElementId>(x));
  }
  return out;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) {
    throw PreconditionError("quotient by a subgroup that is not normal");
  }
  std::vector<ElementId> coset_of(g.order(), static_cast<ElementId>(g.order()));
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != g.order()) continue;
    const auto idx = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId y : n.members) coset_of[g.mul(x, y)] = idx;
  }
  const std::size_t q = reps.size();
  std::vector<ElementId> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
    }
  }
  std::vector<NamedGenerator> gens;
  for (const auto& gen : g.generators()) gens.push_back({gen.name, coset_of[gen.element]});
  std::string desc = "quotient:(" + g.descriptor() + ")/" + std::to_string(n.order());
  return Quotient{FiniteGroup(q, std::move(table), std::move(gens), std::move(desc)),
                  std::move(coset_of)};
}

SplittingResult minimal_splitting_subgroup(const FiniteGroup& g, const Subgroup& c) {
  const auto z = center(g);
  for (ElementId x : c.members) {
    if (!z.contains(x)) throw PreconditionError("subgroup C is not central");
  }
  const std::size_t n = c.order();
  ElementId gen = FiniteGroup::kIdentity;
  for (ElementId x : c.members) {
    if (g.element_order(x) == n) gen = x;
  }
  if (g.element_order(gen) != n) throw PreconditionError("subgroup C is not cyclic");
  const auto q = quotient_group(g, c);
  if (!q.group.is_abelian()) {
    throw UnsupportedError("minimal splitting subgroup needs an abelian quotient G/C");
  }
  const auto q_inv = abelian_invariants(q.group);
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<ElementId> seed{g.pow(gen, static_cast<long long>(n / d))};
    Subgroup dsub = generate_subgroup(g, seed);
    const auto gd = quotient_group(g, dsub);
    if (!gd.group.is_abelian()) continue;
    const auto target =
        q_inv.direct_sum(AbelianGroupInvariants::from_cyclic_orders(
            0, std::vector<std::uint64_t>{n / d}));
    if (abelian_invariants(gd.group) == target) return SplittingResult{dsub, d};
  }
  throw InvariantViolation("no splitting subgroup found; D = C always splits");
}

bool is_direct_factor(const FiniteGroup& z_group, const Subgroup& c) {
  if (c.order() == 1) return true;
  if (!z_group.is_p_group()) throw UnsupportedError("complement search supports p-groups only");
  const Subgroup z = center(z_group);
  for (ElementId x : c.members) {
    if (!z.contains(x)) throw UnsupportedError("complement search needs a central subgroup");
  }
  const std::uint64_t index = c.order();
  unsigned depth = static_cast<unsigned>(util::exact_log(index, z_group.prime()));
  for (const auto& k : subgroups_of_index_at_most(z_group, index, depth)) {
    if (k.order() * c.order() == z_group.order() && intersect(k, c).is_trivial()) {
      return true;
    }
  }
  return false;
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() > 64 || b.order() > 64) {
    throw ResourceLimitError("brute-force isomorphism is limited to order 64");
  }
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return false;
  if (order_histogram(a) != order_histogram(b)) return false;
  std::vector<ElementId> all(a.order());
  for (ElementId x = 0; x < a.order(); ++x) all[x] = x;
  const std::vector<ElementId> gens = greedy_generators(a, all);
  const std::size_t k = gens.size();
  std::vector<ElementId> images(k);

  // Extends the map from the generators to <gens[0..level]>; returns false
  // on inconsistency or non-injectivity.
  auto extend = [&](std::size_t level, std::vector<ElementId>& phi) {
    const ElementId unset = static_cast<ElementId>(a.order());
    phi.assign(a.order(), unset);
    phi[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
    std::vector<char> used(b.order(), 0);
    used[FiniteGroup::kIdentity] = 1;
    std::vector<ElementId> queue{FiniteGroup::kIdentity};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const ElementId x = queue[i];
      for (std::size_t j = 0; j <= level; ++j) {
        const ElementId y = a.mul(x, gens[j]);
        const ElementId img = b.mul(phi[x], images[j]);
        if (phi[y] == unset) {
          if (used[img]) return false;
          used[img] = 1;
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<ElementId> phi;
  std::function<bool(std::size_t)> search = [&](std::size_t level) {
    if (level == k) return true;
    for (ElementId y = 0; y < b.order(); ++y) {
      if (b.element_order(y) != a.element_order(gens[level])) continue;
      images[level] = y;
      if (extend(level, phi) && search(level + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace cohomex

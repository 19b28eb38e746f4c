#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohomex/group/finite_group.hpp"
#include "cohomex/linalg/abelian_invariants.hpp"

namespace cohomex {

/// A subgroup recorded by its sorted member ids inside a parent group.
struct Subgroup {
  std::string parent;
  std::vector<ElementId> members;

  std::size_t order() const { return members.size(); }
  bool contains(ElementId x) const;
  bool is_trivial() const { return members.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members == b.members;
  }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    return a.members <=> b.members;
  }
};

/// G / N with the projection G -> G/N on element ids.
struct Quotient {
  FiniteGroup group;
  std::vector<ElementId> projection;
};

/// Permutation representation of G on the right cosets Hx.
struct CosetAction {
  /// cosets[i] lists the members of the i-th coset; coset 0 is H.
  std::vector<std::vector<ElementId>> cosets;
  /// images[g][i] = index of coset (cosets[i]) * g.
  std::vector<std::vector<std::uint32_t>> images;

  std::size_t degree() const { return cosets.size(); }
  /// Elements acting trivially on every coset.
  std::vector<ElementId> kernel() const;
  bool is_faithful() const { return kernel().size() == 1; }
};

/// Result of the minimal splitting search for a central cyclic subgroup C.
struct SplittingResult {
  Subgroup d;
  /// m = |D|, the order of the extension class of G over G/C.
  std::size_t m = 1;
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup generate_subgroup(const FiniteGroup& g, std::span<const ElementId> gens);
/// Validates closure and returns the subgroup; throws PreconditionError.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElementId> members);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup commutator_subgroup(const FiniteGroup& g);
/// Phi(G) = G^p [G, G] for a p-group G.
Subgroup frattini_subgroup(const FiniteGroup& g);
bool is_elementary_abelian(const FiniteGroup& g);
/// Invariant factors of an abelian group; throws PreconditionError otherwise.
AbelianGroupInvariants abelian_invariants(const FiniteGroup& g);

/// The subgroup as a group in its own right. Member i of `h` becomes element
/// id i (member 0 is the identity); generators are named h0, h1, ...
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// All subgroups of index at most `bound` (a power of p) in the p-group G,
/// G itself included, duplicate-free and sorted by decreasing order. Found
/// by descending through maximal subgroups (preimages of hyperplanes of
/// G / Phi(G)) `depth` times at most; throws ResourceLimitError when the
/// bound needs more than `max_depth` descents.
std::vector<Subgroup> subgroups_of_index_at_most(const FiniteGroup& g,
                                                 std::uint64_t bound,
                                                 unsigned max_depth = 3);

/// Maximal subgroups of a p-group (index p).
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Subgroup& h);

/// Intersection of all conjugates of H.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);
CosetAction coset_action(const FiniteGroup& g, const Subgroup& h);
/// Throws PreconditionError when N is not normal.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

/// Smallest D <= C with G/D isomorphic to (C/D) x (G/C). C must be central
/// and cyclic; G/C must be abelian (UnsupportedError otherwise).
SplittingResult minimal_splitting_subgroup(const FiniteGroup& g, const Subgroup& c);

/// True when the central subgroup C has a complement in the p-group Z (so C
/// is a direct factor). Throws UnsupportedError when Z is not a p-group or C
/// is not central.
bool is_direct_factor(const FiniteGroup& z_group, const Subgroup& c);

/// Brute-force isomorphism test over generator images; order <= 64 only.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace cohomex

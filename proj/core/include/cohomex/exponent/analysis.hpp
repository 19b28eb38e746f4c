#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohomex/cohomology/engine.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/subgroups.hpp"
#include "cohomex/linalg/bigint.hpp"

namespace cohomex {

enum class VerdictStatus { pass, fail, vacuous, partial };

std::string to_string(VerdictStatus s);
/// Parses "pass", "fail", "vacuous" or "partial"; throws ParseError.
VerdictStatus parse_verdict_status(const std::string& text);

/// Outcome of one claim at one degree (or a structural fact when degree is empty).
struct Evidence {
  std::optional<unsigned> degree;
  VerdictStatus status = VerdictStatus::pass;
  std::string note;
  /// Orders of the classes or groups the note refers to.
  std::vector<BigInt> orders;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Verdict {
  /// "prop1", "prop2", "cor1", "cor4", "lemma1" or "transfer".
  std::string claim;
  VerdictStatus status = VerdictStatus::pass;
  std::string reason;
  std::vector<Evidence> evidence;
  /// Set exactly when status is fail.
  std::optional<std::string> counter_witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"prop1", "prop2", "cor1", "cor4", "lemma1", "transfer"};
  return ids;
}

/// max(alpha, beta, 2 gamma - delta); params must be normalized.
unsigned epsilon(const FamilyParams& params);

/// p^(gamma - delta). With a group, also compares against |D| of the minimal
/// splitting subgroup over <c> and throws InvariantViolation on a mismatch.
std::uint64_t extension_class_order(const FamilyParams& params);
std::uint64_t extension_class_order(const FamilyParams& params, const FiniteGroup& g);

struct Lemma1Result {
  /// Least n with K_n trivial, if one was found up to max_n.
  std::optional<unsigned> n;
  /// |K_0|, |K_1|, ... where K_n intersects the cores of all subgroups of
  /// index at most p^n.
  std::vector<std::size_t> core_orders;
};

/// Throws PreconditionError unless G is a p-group.
Lemma1Result lemma1_bound(const FiniteGroup& g, unsigned max_n);

struct Prop2Witnesses {
  Subgroup ac;
  Subgroup bc;
  Subgroup third;
  /// Indices of <a,c>, <b,c> and <a, b^(p^(gamma-delta))>.
  std::vector<std::uint64_t> indices;
  Subgroup intersection;
};

/// The three subgroups of the family group whose cores meet trivially.
/// Throws InvariantViolation when the intersection is not trivial.
Prop2Witnesses prop2_witness_subgroups(const FamilyParams& params, const FiniteGroup& g);

struct ExponentSummary {
  FamilyParams params;
  unsigned epsilon = 0;
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t mn = 1;
  std::optional<unsigned> lemma1_n;
  /// exponents[i] is the exponent of H^i(G; Z) (0 for degree 0, which is Z).
  std::vector<BigInt> exponents;
  /// First positive degree with exponent p^epsilon, if observed.
  std::optional<unsigned> first_epsilon_degree;
};

struct CheckOptions {
  std::uint64_t enumeration_cap = kEnumerationCap;
  /// Sample beyond the cap (partial verdicts) instead of failing.
  bool sample = true;
  unsigned lemma1_depth = 4;
};

/// Classes restricting to a generator of H^(2i)(C) have order divisible by m n.
Verdict check_prop1(CohomologyEngine& g, const Subgroup& c, unsigned max_degree,
                    const CheckOptions& options = {});

/// Elementary abelian groups have exponent p in every positive degree; other
/// p-groups show an element of order p^2 somewhere in the window.
Verdict check_cor4(CohomologyEngine& g, unsigned max_degree);

/// Every H^i(G_n), 0 < i <= max_degree, has exponent dividing p^n.
Verdict check_transfer_bound(CohomologyEngine& g_n, std::uint64_t p, unsigned n,
                             unsigned max_degree);
Verdict check_transfer_bound(std::uint64_t p, unsigned n, unsigned max_degree,
                             const EngineOptions& options = {});

struct Prop2Report {
  ExponentSummary summary;
  Verdict verdict;
};

/// `g` must be the engine of build_family_group(params).
Prop2Report check_prop2(const FamilyParams& params, CohomologyEngine& g, unsigned max_degree,
                        const CheckOptions& options = {});

/// If C is not a direct factor of its centralizer, no class of order |C|
/// restricts to a generator of H^(2i)(C).
Verdict check_cor1(CohomologyEngine& g, const Subgroup& c, unsigned max_degree,
                   const CheckOptions& options = {});

/// lemma1_bound as a verdict against an expected value (none = report only).
Verdict check_lemma1(const FiniteGroup& g, unsigned max_n,
                     std::optional<unsigned> expected = std::nullopt);

/// Per-degree exponents of H^i(G; Z) for i in [0, max_degree].
std::vector<BigInt> cohomology_exponents(CohomologyEngine& g, unsigned max_degree);

}  // namespace cohomex

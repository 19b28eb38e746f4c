#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cohomex/cohomology/bar_complex.hpp"
#include "cohomex/cohomology/coefficients.hpp"
#include "cohomex/cohomology/hom_matrix.hpp"
#include "cohomex/group/finite_group.hpp"
#include "cohomex/group/subgroups.hpp"
#include "cohomex/linalg/abelian_invariants.hpp"
#include "cohomex/linalg/local_elimination.hpp"

namespace cohomex {

struct EngineOptions {
  std::uint64_t max_generators = kDefaultMaxGenerators;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// When d_n has at most this many rows, integral H^n is recomputed with the
  /// exact Smith form and compared (0 disables the check).
  std::uint64_t exact_check_rows = 0;
  /// Starting precision exponent for every prime, overriding the default
  /// derived from the generator budget.
  std::optional<unsigned> initial_precision;
  /// Working moduli p^k stay below 2^max_precision_bits (at most 63).
  unsigned max_precision_bits = 63;
  /// Refuse eliminations predicted to need more memory than this; 0 means
  /// the physical memory currently available.
  std::uint64_t max_memory_bytes = 0;
};

enum class ClassKind {
  /// The generator of H^0(G; Z) = Z.
  free,
  /// Torsion of the integral cokernel in degree n (pivot of d_(n-1)).
  torsion,
  /// Tor term of the modular groups (pivot of d_n).
  modular_pivot,
  /// A free column of d_n, present only in degree 0 for finite groups.
  modular_free,
};

/// One cyclic summand of a computed cohomology group.
struct BasisClass {
  /// The prime whose local computation produced the class; 0 for `free`.
  std::uint64_t prime = 0;
  /// Order of the class; 0 for an infinite cyclic summand.
  BigInt order;
  ClassKind kind = ClassKind::torsion;
  /// Pivot index (torsion, modular_pivot) or column (modular_free).
  std::size_t index = 0;
};

/// H^n(G; coeffs) as a direct sum of cyclic groups, one summand per basis
/// class: the primary decomposition grouped by prime in ascending order.
struct CohomologyPresentation {
  unsigned degree = 0;
  CoefficientSpec coeffs = CoefficientSpec::integral();
  AbelianGroupInvariants invariants;
  std::vector<BasisClass> basis;

  std::vector<BigInt> orders() const;
};

/// A degree-n cochain known modulo p^precision.
struct LocalCochain {
  std::uint64_t prime = 0;
  unsigned precision = 0;
  std::vector<std::uint64_t> values;
};

struct EliminationRecord {
  std::uint64_t prime;
  unsigned precision;
  unsigned degree;
  std::uint64_t rows;
  std::uint64_t cols;
  std::size_t rank;
  std::size_t max_nnz;
  bool logged;
  double seconds;
};

/// Cohomology of one finite group from its normalized bar complex, computed
/// prime by prime with p-local sparse elimination and certified by the
/// vanishing of the free rank in positive degrees.
///
/// An engine caches eliminations and is not safe for concurrent use; give
/// each worker its own engine.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(FiniteGroup group, EngineOptions options = {});
  ~CohomologyEngine();
  CohomologyEngine(CohomologyEngine&&) noexcept;
  CohomologyEngine& operator=(CohomologyEngine&&) noexcept;

  const FiniteGroup& group() const { return *group_; }
  const BarComplex& bar() const { return *bar_; }
  const EngineOptions& options() const { return options_; }

  AbelianGroupInvariants cohomology(unsigned n, const CoefficientSpec& coeffs);
  const CohomologyPresentation& presentation(unsigned n, const CoefficientSpec& coeffs);

  /// A cocycle representing basis class i.
  LocalCochain representative(unsigned n, const CoefficientSpec& coeffs, std::size_t i);

  /// Coordinates of a cocycle in the basis of presentation(n, coeffs). The
  /// cochain holds one integer per n-tuple (exact for integral coefficients,
  /// any lift for modular ones). Throws InvariantViolation if it is not a cocycle.
  std::vector<BigInt> coordinates(unsigned n, const CoefficientSpec& coeffs,
                                  const std::vector<BigInt>& cochain);

  /// Coordinates of the p-primary part of a class given by a local cocycle.
  std::vector<BigInt> local_coordinates(unsigned n, const CoefficientSpec& coeffs,
                                        const LocalCochain& cochain);

  /// The map H^n(G) -> H^n(H) induced by the inclusion H -> G, where
  /// `inclusion[h]` is the image in G of element h of `sub.group()`.
  HomMatrix restriction(CohomologyEngine& sub, std::span<const ElementId> inclusion, unsigned n,
                        const CoefficientSpec& coeffs);

  /// Connecting map H^n(G; Z/m) -> H^(n+1)(G; Z) of 0 -> Z -m-> Z -> Z/m -> 0.
  HomMatrix bockstein(unsigned n, std::uint64_t m);

  /// Working precision exponent for p (after any escalation).
  unsigned precision(std::uint64_t p);
  /// Raises the precision for p to at least k, discarding cached work.
  void require_precision(std::uint64_t p, unsigned k);

  const std::vector<EliminationRecord>& eliminations() const { return records_; }

 private:
  struct PrimeChain;

  PrimeChain& chain(std::uint64_t p);
  const LocalElimination& elimination(PrimeChain& c, unsigned t, bool rows, bool cols);
  void certify(PrimeChain& c, unsigned n);
  std::vector<std::uint64_t> coefficient_primes(const CoefficientSpec& coeffs) const;
  void check_deadline() const;
  std::vector<BigInt> exact_cross_check(unsigned n);

  std::unique_ptr<FiniteGroup> group_;
  EngineOptions options_;
  std::unique_ptr<BarComplex> bar_;
  std::map<std::uint64_t, std::unique_ptr<PrimeChain>> chains_;
  std::map<std::pair<unsigned, CoefficientSpec>, CohomologyPresentation> presentations_;
  std::vector<EliminationRecord> records_;
};

/// restriction() along a Subgroup of G; `sub` must be the engine of
/// subgroup_as_group(G, h).
HomMatrix restriction(CohomologyEngine& g, CohomologyEngine& sub, const Subgroup& h, unsigned n,
                      const CoefficientSpec& coeffs);

/// An element of a computed cohomology group, in the basis of its presentation.
struct CohomologyClass {
  unsigned degree = 0;
  std::vector<BigInt> coordinates;
};

struct RestrictingClass {
  CohomologyClass cls;
  BigInt order;
};

struct GeneratorRestrictingResult {
  unsigned degree = 0;
  /// |H^degree(G)|.
  BigInt group_order;
  /// Number of classes examined.
  BigInt examined;
  /// True when the group was sampled instead of enumerated in full.
  bool partial = false;
  std::vector<RestrictingClass> classes;
};

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 16;

/// Classes of H^degree(G; Z) whose restriction to the cyclic subgroup C
/// generates H^degree(C; Z) = Z/|C|, with their orders. `c_engine` must be
/// the engine of subgroup_as_group(G, c). Groups larger than `cap` raise
/// ResourceLimitError unless `sample` is set, in which case `cap` classes are
/// drawn with a fixed seed and the result is marked partial.
GeneratorRestrictingResult generator_restricting_classes(CohomologyEngine& g,
                                                         CohomologyEngine& c_engine,
                                                         const Subgroup& c, unsigned degree,
                                                         std::uint64_t cap = kEnumerationCap,
                                                         bool sample = false);

}  // namespace cohomex

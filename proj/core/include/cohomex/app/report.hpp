#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomex/app/cache.hpp"
#include "cohomex/app/job.hpp"
#include "cohomex/exponent/analysis.hpp"
#include "cohomex/group/finite_group.hpp"
#include "cohomex/linalg/abelian_invariants.hpp"

namespace cohomex {

/// Version of the report layout documented in docs/report-schema.md.
inline constexpr int kReportSchemaVersion = 1;

struct GroupFacts {
  std::string descriptor;
  std::uint64_t order = 1;
  std::optional<std::uint64_t> prime;
  std::uint64_t center_order = 1;
  bool abelian = true;
  /// Set for abelian groups.
  std::optional<AbelianGroupInvariants> invariants;
  /// Name and element order of each generator.
  std::vector<std::pair<std::string, std::uint64_t>> generators;
};

GroupFacts group_facts(const FiniteGroup& g);
std::string render_group_facts(const GroupFacts& facts, OutputFormat format);

struct DegreeReport {
  unsigned degree = 0;
  AbelianGroupInvariants invariants;
  bool from_cache = false;
  double seconds = 0;
};

struct CohomologyReport {
  std::string descriptor;
  std::uint64_t order = 1;
  CoefficientSpec coeffs = CoefficientSpec::integral();
  std::vector<DegreeReport> degrees;
  std::vector<Verdict> verdicts;
  double seconds = 0;
};

/// Computes every degree of the job (through the cache when one is given)
/// and runs the requested checks with degrees up to job.degrees.hi.
CohomologyReport run_job(const JobSpec& job, const ResultCache* cache = nullptr);
/// Same, computing misses with an existing engine for the job's group
/// (PreconditionError if the canonical descriptors differ). The job's
/// budgets are then those the engine was built with.
CohomologyReport run_job(const JobSpec& job, const ResultCache* cache, CohomologyEngine& engine);

/// The cyclic subgroup the prop1/cor1 checks restrict to: <c> for family
/// groups, otherwise the center when it is cyclic and nontrivial. Throws
/// UnsupportedError when neither applies.
Subgroup claim_subgroup(const FiniteGroup& g);

/// Runs one claim against the group of `engine`.
Verdict run_claim(const std::string& claim, CohomologyEngine& engine, unsigned max_degree,
                  unsigned depth);

/// Timing fields (seconds, cache hits) are left out unless `timing` is set,
/// which makes the output a canonical function of the job.
std::string render_report(const CohomologyReport& report, OutputFormat format,
                          bool timing = true);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& text);

/// True when some verdict failed.
bool any_failed(const std::vector<Verdict>& verdicts);

std::string render_verdicts(const std::vector<Verdict>& verdicts, OutputFormat format);

}  // namespace cohomex

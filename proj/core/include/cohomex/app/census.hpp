#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohomex/app/cache.hpp"
#include "cohomex/app/job.hpp"
#include "cohomex/exponent/analysis.hpp"

namespace cohomex {

/// alpha, beta, gamma in [1, max_*], delta in [0, gamma], for each prime;
/// cells are normalized and deduplicated.
struct CensusGrid {
  std::vector<std::uint64_t> primes{2};
  unsigned max_alpha = 2;
  unsigned max_beta = 2;
  unsigned max_gamma = 2;

  std::vector<FamilyParams> cells() const;
};

struct CensusOptions {
  CensusGrid grid;
  unsigned max_degree = 4;
  unsigned lemma1_depth = 4;
  Budgets budgets;
  unsigned workers = 1;
};

struct CensusRow {
  FamilyParams params;
  std::string descriptor;
  /// A cell whose budget ran out keeps the degrees computed so far.
  bool skipped = false;
  std::string reason;
  ExponentSummary summary;
  double seconds = 0;
};

struct CensusReport {
  unsigned max_degree = 0;
  std::vector<CensusRow> rows;
  double seconds = 0;
};

/// One row per grid cell in cells() order; cells run on `workers` threads,
/// each with its own engine, sharing only the cache.
CensusReport run_census(const CensusOptions& options, const ResultCache* cache = nullptr);

std::string render_census(const CensusReport& report, OutputFormat format, bool timing = true);

}  // namespace cohomex

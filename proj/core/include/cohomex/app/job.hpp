#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cohomex/cohomology/bar_complex.hpp"
#include "cohomex/cohomology/coefficients.hpp"
#include "cohomex/cohomology/engine.hpp"

namespace cohomex {

enum class OutputFormat { json, md, csv };

/// "json", "md" or "csv"; throws ParseError.
OutputFormat parse_output_format(std::string_view text);
std::string to_string(OutputFormat f);

/// Inclusive range of degrees.
struct DegreeRange {
  unsigned lo = 0;
  unsigned hi = 0;

  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// "A..B" or a single "N"; throws ParseError when malformed or B < A.
DegreeRange parse_degree_range(std::string_view text);

struct Budgets {
  std::uint64_t max_generators = kDefaultMaxGenerators;
  unsigned max_precision_bits = 63;
  std::chrono::seconds time_limit{30 * 60};
};

struct JobSpec {
  std::string descriptor;
  CoefficientSpec coeffs = CoefficientSpec::integral();
  DegreeRange degrees{0, 4};
  /// Claim ids to verify on the group (see claim_ids()).
  std::vector<std::string> checks;
  Budgets budgets;
  OutputFormat format = OutputFormat::json;
  /// Subgroup enumeration depth for lemma1.
  unsigned depth = 4;

  /// Throws PreconditionError on an empty degree range, a non-positive
  /// budget or an unknown claim id.
  void validate() const;
  /// Engine options with a deadline `time_limit` from now.
  EngineOptions engine_options() const;
};

}  // namespace cohomex

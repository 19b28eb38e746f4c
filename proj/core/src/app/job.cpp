#include "cohomex/app/job.hpp"

#include <algorithm>
#include <charconv>

#include "cohomex/errors.hpp"
#include "cohomex/exponent/analysis.hpp"

namespace cohomex {

namespace {

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "md") return OutputFormat::md;
  if (text == "csv") return OutputFormat::csv;
  throw ParseError("unknown output format '" + std::string(text) + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::md:
      return "md";
    case OutputFormat::csv:
      return "csv";
  }
  return "json";
}

DegreeRange parse_degree_range(std::string_view text) {
  const auto dots = text.find("..");
  DegreeRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_unsigned(text, "degree");
  } else {
    r.lo = parse_unsigned(text.substr(0, dots), "degree range");
    r.hi = parse_unsigned(text.substr(dots + 2), "degree range");
  }
  if (r.hi < r.lo) throw ParseError("empty degree range '" + std::string(text) + "'");
  return r;
}

void JobSpec::validate() const {
  if (degrees.hi < degrees.lo) throw PreconditionError("empty degree range");
  if (budgets.max_generators == 0) throw PreconditionError("generator budget must be positive");
  if (budgets.max_precision_bits == 0) throw PreconditionError("precision budget must be positive");
  if (budgets.time_limit.count() <= 0) throw PreconditionError("time limit must be positive");
  for (const auto& c : checks) {
    const auto& ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) {
      throw PreconditionError("unknown claim '" + c + "'");
    }
  }
}

EngineOptions JobSpec::engine_options() const {
  EngineOptions o;
  o.max_generators = budgets.max_generators;
  o.max_precision_bits = std::min(budgets.max_precision_bits, 63u);
  o.deadline = std::chrono::steady_clock::now() + budgets.time_limit;
  return o;
}

}  // namespace cohomex

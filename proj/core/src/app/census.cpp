#include "cohomex/app/census.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "cohomex/app/report.hpp"
#include "cohomex/errors.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/descriptor.hpp"
#include "cohomex/util/number_theory.hpp"
#include "json.hpp"

namespace cohomex {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

std::string opt_text(const std::optional<unsigned>& x) {
  return x ? std::to_string(*x) : "";
}

CensusRow run_cell(const FamilyParams& params, const CensusOptions& options,
                   const ResultCache* cache) {
  const auto start = Clock::now();
  CensusRow row;
  row.params = params;
  row.descriptor = format_family_descriptor(params);
  ExponentSummary& s = row.summary;
  s.params = params;
  s.epsilon = epsilon(params);
  s.n = util::checked_pow(params.p, params.gamma);
  try {
    FiniteGroup group = build_family_group(params);
    s.m = extension_class_order(params, group);
    s.mn = s.m * s.n;
    try {
      s.lemma1_n = lemma1_bound(group, std::max(s.epsilon, options.lemma1_depth)).n;
    } catch (const ResourceLimitError&) {
    }
    JobSpec job;
    job.budgets = options.budgets;
    std::optional<CohomologyEngine> engine;
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), params.p, s.epsilon);
    for (unsigned d = 0; d <= options.max_degree; ++d) {
      const CacheKey key{row.descriptor, CoefficientSpec::integral(), d};
      std::optional<AbelianGroupInvariants> inv;
      if (cache) inv = cache->load(key);
      if (!inv) {
        if (!engine) engine.emplace(std::move(group), job.engine_options());
        inv = engine->cohomology(d, CoefficientSpec::integral());
        if (cache) cache->store(key, *inv);
      }
      const Exponent e = exponent_of(*inv);
      s.exponents.push_back(d == 0 ? BigInt(0) : e.value);
      if (d > 0 && e.value == pe && !s.first_epsilon_degree) s.first_epsilon_degree = d;
    }
  } catch (const ResourceLimitError& e) {
    row.skipped = true;
    row.reason = e.what();
  }
  row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<FamilyParams> CensusGrid::cells() const {
  std::set<FamilyParams> out;
  for (auto p : primes) {
    for (unsigned a = 1; a <= max_alpha; ++a) {
      for (unsigned b = 1; b <= max_beta; ++b) {
        for (unsigned g = 1; g <= max_gamma; ++g) {
          for (unsigned d = 0; d <= g; ++d) out.insert(normalize_params(p, a, b, g, d));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

CensusReport run_census(const CensusOptions& options, const ResultCache* cache) {
  const auto start = Clock::now();
  const auto cells = options.grid.cells();
  CensusReport report;
  report.max_degree = options.max_degree;
  report.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        report.rows[i] = run_cell(cells[i], options, cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, cells.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::string render_census(const CensusReport& report, OutputFormat format, bool timing) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      j["schema"] = "cohomex.census";
      j["schema_version"] = kReportSchemaVersion;
      j["algorithm_version"] = kAlgorithmVersion;
      j["max_degree"] = report.max_degree;
      ordered_json rows = ordered_json::array();
      for (const auto& r : report.rows) {
        const auto& s = r.summary;
        ordered_json x;
        x["descriptor"] = r.descriptor;
        x["params"] = ordered_json{{"p", r.params.p},         {"alpha", r.params.alpha},
                                   {"beta", r.params.beta},   {"gamma", r.params.gamma},
                                   {"delta", r.params.delta}};
        x["status"] = r.skipped ? "skipped" : "complete";
        x["reason"] = r.reason;
        x["epsilon"] = s.epsilon;
        x["m"] = s.m;
        x["n"] = s.n;
        x["mn"] = s.mn;
        x["lemma1_n"] = s.lemma1_n ? ordered_json(*s.lemma1_n) : ordered_json(nullptr);
        ordered_json ex = ordered_json::array();
        for (const auto& e : s.exponents) ex.push_back(to_string(e));
        x["exponents"] = ex;
        x["first_epsilon_degree"] =
            s.first_epsilon_degree ? ordered_json(*s.first_epsilon_degree) : ordered_json(nullptr);
        if (timing) x["seconds"] = r.seconds;
        rows.push_back(std::move(x));
      }
      j["rows"] = rows;
      if (timing) j["seconds"] = report.seconds;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::md: {
      out << "| p | alpha | beta | gamma | delta | epsilon | m | lemma1 n | exponents (deg 1.."
          << report.max_degree << ") | first p^epsilon | status |\n";
      out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : report.rows) {
        const auto& s = r.summary;
        std::string ex;
        for (std::size_t d = 1; d < s.exponents.size(); ++d) {
          if (d > 1) ex += ' ';
          ex += to_string(s.exponents[d]);
        }
        out << "| " << r.params.p << " | " << r.params.alpha << " | " << r.params.beta << " | "
            << r.params.gamma << " | " << r.params.delta << " | " << s.epsilon << " | " << s.m
            << " | " << opt_text(s.lemma1_n) << " | " << ex << " | "
            << opt_text(s.first_epsilon_degree) << " | "
            << (r.skipped ? "skipped" : "complete") << " |\n";
      }
      break;
    }
    case OutputFormat::csv: {
      out << "p,alpha,beta,gamma,delta,epsilon,m,lemma1_n,degree,exponent,status\n";
      for (const auto& r : report.rows) {
        const auto& s = r.summary;
        for (std::size_t d = 1; d < s.exponents.size(); ++d) {
          out << r.params.p << ',' << r.params.alpha << ',' << r.params.beta << ','
              << r.params.gamma << ',' << r.params.delta << ',' << s.epsilon << ',' << s.m << ','
              << opt_text(s.lemma1_n) << ',' << d << ',' << to_string(s.exponents[d]) << ','
              << (r.skipped ? "skipped" : "complete") << '\n';
        }
      }
      break;
    }
  }
  return out.str();
}

}  // namespace cohomex

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohomex/app/cache.hpp"
#include "cohomex/app/census.hpp"
#include "cohomex/app/job.hpp"
#include "cohomex/app/report.hpp"
#include "cohomex/errors.hpp"
#include "cohomex/group/descriptor.hpp"
#include "cohomex/linalg/homology.hpp"
#include "cohomex/linalg/local_elimination.hpp"
#include "cohomex/linalg/smith.hpp"

using namespace cohomex;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

struct Common {
  std::string degrees = "0..4";
  std::string coeffs = "int";
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t budget_generators = kDefaultMaxGenerators;
  unsigned budget_precision_bits = 63;
  long long time_limit = 30 * 60;
  unsigned depth = 4;
};

void add_common(CLI::App* cmd, Common& c, bool with_coeffs) {
  cmd->add_option("--degrees", c.degrees, "degree range A..B")->capture_default_str();
  if (with_coeffs) {
    cmd->add_option("--coeffs", c.coeffs, "int or mod:m")->capture_default_str();
  }
  cmd->add_option("--format", c.format, "json, md or csv")->capture_default_str();
  cmd->add_option("--cache-dir", c.cache_dir, "result cache directory (default $COHOMEX_CACHE)");
  cmd->add_flag("--no-cache", c.no_cache, "ignore the result cache");
  cmd->add_option("--budget-generators", c.budget_generators,
                  "largest admissible cochain generator count")
      ->capture_default_str();
  cmd->add_option("--budget-precision-bits", c.budget_precision_bits,
                  "working moduli stay below 2^bits")
      ->capture_default_str();
  cmd->add_option("--time-limit", c.time_limit, "seconds per job")->capture_default_str();
  cmd->add_option("--depth", c.depth, "subgroup index depth for lemma1")->capture_default_str();
}

Budgets budgets_of(const Common& c) {
  if (c.time_limit <= 0) throw ParseError("--time-limit must be positive");
  Budgets b;
  b.max_generators = c.budget_generators;
  b.max_precision_bits = c.budget_precision_bits;
  b.time_limit = std::chrono::seconds(c.time_limit);
  return b;
}

JobSpec job_of(const std::string& descriptor, const Common& c) {
  JobSpec job;
  job.descriptor = descriptor;
  job.coeffs = CoefficientSpec::parse(c.coeffs);
  job.degrees = parse_degree_range(c.degrees);
  job.budgets = budgets_of(c);
  job.format = parse_output_format(c.format);
  job.depth = c.depth;
  return job;
}

std::optional<ResultCache> cache_of(const Common& c) {
  if (c.no_cache) return std::nullopt;
  if (!c.cache_dir.empty()) return std::optional<ResultCache>(std::in_place, c.cache_dir);
  if (auto dir = ResultCache::directory_from_environment()) {
    return std::optional<ResultCache>(std::in_place, *dir);
  }
  return std::nullopt;
}

const ResultCache* ptr(const std::optional<ResultCache>& c) { return c ? &*c : nullptr; }

int cmd_snf(const std::string& path, std::optional<std::uint64_t> prime, unsigned precision,
            bool homology) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const auto matrices = read_matrices(in);
  if (homology) {
    // H at the i-th matrix: ker(d_i) / im(d_(i-1)).
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      const SparseIntMatrix prev =
          i == 0 ? SparseIntMatrix(matrices[i].cols(), 0) : matrices[i - 1];
      std::cout << "H_" << i << " = " << homology_at(prev, matrices[i]).to_string() << '\n';
    }
    return kOk;
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& m = matrices[i];
    std::cout << "matrix " << i << " (" << m.rows() << "x" << m.cols() << ")";
    if (prime) {
      const LocalSnf s = snf_local(m, *prime, precision);
      std::cout << " rank " << s.rank << " local factors";
      for (const auto& f : s.factors) std::cout << ' ' << to_string(f);
    } else {
      const SnfResult s = smith_normal_form(m);
      std::cout << " rank " << s.rank << " factors";
      for (const auto& f : s.factors) std::cout << ' ' << to_string(f);
    }
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomex: integral cohomology of finite groups and exponent checks"};
  app.require_subcommand(1);

  std::string descriptor;
  std::string group_format = "md";
  auto* group = app.add_subcommand("group", "print facts about a group");
  group->add_option("descriptor", descriptor, "group descriptor")->required();
  group->add_option("--format", group_format, "json, md or csv")->capture_default_str();

  Common coh;
  std::vector<std::string> checks;
  auto* cohomology = app.add_subcommand("cohomology", "compute H^n(G; coefficients)");
  cohomology->add_option("descriptor", descriptor, "group descriptor")->required();
  cohomology->add_option("--check", checks, "claims to verify alongside");
  add_common(cohomology, coh, true);

  Common ver;
  ver.degrees = "0..4";
  ver.format = "md";
  std::string claim;
  auto* verify = app.add_subcommand("verify", "check one claim on a group");
  verify->add_option("claim", claim, "prop1, prop2, cor1, cor4, lemma1 or transfer")->required();
  verify->add_option("descriptor", descriptor, "group descriptor")->required();
  add_common(verify, ver, false);

  Common cen;
  cen.degrees = "0..4";
  cen.format = "md";
  std::vector<std::uint64_t> primes{2};
  unsigned max_param = 2;
  unsigned workers = 1;
  auto* census = app.add_subcommand("census", "exponent summary over a family parameter grid");
  census->add_option("--primes", primes, "primes of the grid")->delimiter(',');
  census->add_option("--max-param", max_param, "bound on alpha, beta, gamma")
      ->capture_default_str();
  census->add_option("--workers", workers, "worker threads")->capture_default_str();
  add_common(census, cen, false);

  std::string matrix_file;
  std::optional<std::uint64_t> prime;
  unsigned precision = 32;
  bool homology = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of matrices in the text format");
  snf->add_option("file", matrix_file, "matrix or chain complex file")->required();
  snf->add_option("--prime", prime, "compute the p-local form instead");
  snf->add_option("--precision", precision, "working precision p^k for --prime")
      ->capture_default_str();
  snf->add_flag("--homology", homology, "print homology of the chain complex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*group) {
      const auto facts = group_facts(build_from_descriptor(descriptor));
      std::cout << render_group_facts(facts, parse_output_format(group_format));
      return kOk;
    }
    if (*cohomology) {
      JobSpec job = job_of(descriptor, coh);
      job.checks = checks;
      const auto cache = cache_of(coh);
      const auto report = run_job(job, ptr(cache));
      std::cout << render_report(report, job.format);
      return any_failed(report.verdicts) ? kFailure : kOk;
    }
    if (*verify) {
      const auto& ids = claim_ids();
      if (std::find(ids.begin(), ids.end(), claim) == ids.end()) {
        std::cerr << "unknown claim '" << claim << "'\n";
        return kUsage;
      }
      JobSpec job = job_of(descriptor, ver);
      job.checks = {claim};
      const auto cache = cache_of(ver);
      const auto report = run_job(job, ptr(cache));
      std::cout << render_verdicts(report.verdicts, job.format);
      return any_failed(report.verdicts) ? kFailure : kOk;
    }
    if (*census) {
      CensusOptions options;
      options.grid.primes = primes;
      options.grid.max_alpha = options.grid.max_beta = options.grid.max_gamma = max_param;
      options.max_degree = parse_degree_range(cen.degrees).hi;
      options.lemma1_depth = cen.depth;
      options.budgets = budgets_of(cen);
      options.workers = workers;
      const auto cache = cache_of(cen);
      const auto report = run_census(options, ptr(cache));
      std::cout << render_census(report, parse_output_format(cen.format));
      return kOk;
    }
    if (*snf) return cmd_snf(matrix_file, prime, precision, homology);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

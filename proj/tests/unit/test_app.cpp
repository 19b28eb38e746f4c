#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "cohomex/app/cache.hpp"
#include "cohomex/app/census.hpp"
#include "cohomex/app/job.hpp"
#include "cohomex/app/report.hpp"
#include "cohomex/errors.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/descriptor.hpp"
#include "json.hpp"

using namespace cohomex;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("cohomex-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

AbelianGroupInvariants inv(std::size_t free, std::vector<std::uint64_t> orders) {
  return AbelianGroupInvariants::from_cyclic_orders(free, orders);
}

// H^n(Z/k; Z): Z, then 0 in odd and Z/k in positive even degrees.
AbelianGroupInvariants cyclic_expected(std::uint64_t k, unsigned n) {
  if (n == 0) return inv(1, {});
  return n % 2 == 0 ? inv(0, {k}) : inv(0, {});
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(COHOMEX_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Job, DegreeRangeAndFormat) {
  EXPECT_EQ(parse_degree_range("0..6"), (DegreeRange{0, 6}));
  EXPECT_EQ(parse_degree_range("3"), (DegreeRange{3, 3}));
  EXPECT_THROW(parse_degree_range("4..2"), ParseError);
  EXPECT_THROW(parse_degree_range("a..2"), ParseError);
  EXPECT_THROW(parse_degree_range(""), ParseError);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_output_format("xml"), ParseError);
}

TEST(Job, ValidateRejectsBadBudgetsAndClaims) {
  JobSpec job;
  job.descriptor = "cyclic:2";
  EXPECT_NO_THROW(job.validate());
  job.budgets.max_generators = 0;
  EXPECT_THROW(job.validate(), PreconditionError);
  job.budgets.max_generators = 10;
  job.budgets.time_limit = std::chrono::seconds(0);
  EXPECT_THROW(job.validate(), PreconditionError);
  job.budgets.time_limit = std::chrono::seconds(5);
  job.checks = {"prop7"};
  EXPECT_THROW(job.validate(), PreconditionError);
}

TEST(Cache, Sha256KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cache, RoundTripAndKeySeparation) {
  TempDir dir;
  ResultCache cache(dir.path());
  const CacheKey a{"cyclic:4", CoefficientSpec::integral(), 2};
  const CacheKey b{"cyclic:4", CoefficientSpec::modular(4), 2};
  EXPECT_FALSE(cache.load(a));
  cache.store(a, inv(0, {4}));
  cache.store(b, inv(0, {4}));
  EXPECT_EQ(cache.load(a), inv(0, {4}));
  EXPECT_NE(a.digest(), b.digest());
  cache.store(b, inv(2, {2, 6}));
  EXPECT_EQ(cache.load(b), inv(2, {2, 6}));
  EXPECT_EQ(cache.load(a), inv(0, {4}));
  const auto s = cache.stats();
  EXPECT_EQ(s.writes, 3u);
  EXPECT_EQ(s.hits, 3u);
  EXPECT_EQ(s.misses, 1u);
}

TEST(Cache, CorruptTruncatedAndStaleEntriesReadAsAbsent) {
  TempDir dir;
  ResultCache cache(dir.path());
  const CacheKey key{"cyclic:6", CoefficientSpec::integral(), 4};
  cache.store(key, inv(0, {6}));
  const fs::path file = cache.entry_path(key);
  const std::string good = slurp(file);

  std::string tampered = good;
  tampered.replace(tampered.find("\\\"6\\\""), 5, "\\\"3\\\"");
  spit(file, tampered);
  EXPECT_FALSE(cache.load(key));

  spit(file, good.substr(0, good.size() / 2));
  EXPECT_FALSE(cache.load(key));

  // Same key text under another algorithm version.
  CacheKey old = key;
  old.version = "cohomex-alg-0";
  spit(file, good);
  auto j = nlohmann::json::parse(good);
  j["version"] = old.version;
  spit(file, j.dump());
  EXPECT_FALSE(cache.load(key));

  EXPECT_EQ(cache.stats().rejected, 3u);
  spit(file, good);
  EXPECT_EQ(cache.load(key), inv(0, {6}));
}

TEST(Cache, VersionIsPartOfTheKey) {
  TempDir dir;
  ResultCache cache(dir.path());
  CacheKey k{"cyclic:2", CoefficientSpec::integral(), 2};
  cache.store(k, inv(0, {2}));
  k.version = "cohomex-alg-999";
  EXPECT_FALSE(cache.load(k));
}

TEST(Cache, EnvironmentDirectory) {
  ::setenv("COHOMEX_CACHE", "/tmp/somewhere", 1);
  EXPECT_EQ(ResultCache::directory_from_environment(), fs::path("/tmp/somewhere"));
  ::setenv("COHOMEX_CACHE", "", 1);
  EXPECT_FALSE(ResultCache::directory_from_environment());
  ::unsetenv("COHOMEX_CACHE");
  EXPECT_FALSE(ResultCache::directory_from_environment());
}

TEST(Cache, ConcurrentThreadsNeverSeeTornEntries) {
  TempDir dir;
  ResultCache cache(dir.path());
  constexpr int kKeys = 8;
  std::atomic<int> bad{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < 6; ++t) {
    pool.emplace_back([&, t] {
      for (int round = 0; round < 150; ++round) {
        for (int k = 0; k < kKeys; ++k) {
          const CacheKey key{"cyclic:" + std::to_string(k + 2), CoefficientSpec::integral(), 2};
          const auto expect = inv(0, {static_cast<std::uint64_t>(k + 2)});
          if ((round + t) % 2 == 0) {
            cache.store(key, expect);
          } else if (auto got = cache.load(key); got && *got != expect) {
            ++bad;
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(bad.load(), 0);
  EXPECT_EQ(cache.stats().rejected, 0u);
  for (int k = 0; k < kKeys; ++k) {
    const CacheKey key{"cyclic:" + std::to_string(k + 2), CoefficientSpec::integral(), 2};
    EXPECT_EQ(cache.load(key), inv(0, {static_cast<std::uint64_t>(k + 2)}));
  }
}

TEST(Cache, ConcurrentProcessesAndKilledWriters) {
  TempDir dir;
  const CacheKey key{"cyclic:9", CoefficientSpec::integral(), 4};
  std::vector<pid_t> kids;
  for (int i = 0; i < 4; ++i) {
    const pid_t pid = ::fork();
    ASSERT_GE(pid, 0);
    if (pid == 0) {
      ResultCache cache(dir.path());
      int bad = 0;
      for (int r = 0; r < 200; ++r) {
        cache.store(key, inv(0, {9}));
        if (auto got = cache.load(key); !got || *got != inv(0, {9})) ++bad;
      }
      ::_exit(bad == 0 ? 0 : 1);
    }
    kids.push_back(pid);
  }
  // A writer killed mid-write leaves only a temporary file behind.
  const pid_t victim = ::fork();
  ASSERT_GE(victim, 0);
  if (victim == 0) {
    ResultCache cache(dir.path());
    for (;;) cache.store(key, inv(0, {9}));
  }
  std::this_thread::sleep_for(std::chrono::milliseconds(50));
  ::kill(victim, SIGKILL);
  ::waitpid(victim, nullptr, 0);
  for (pid_t pid : kids) {
    int status = 0;
    ::waitpid(pid, &status, 0);
    EXPECT_TRUE(WIFEXITED(status) && WEXITSTATUS(status) == 0);
  }
  ResultCache cache(dir.path());
  EXPECT_EQ(cache.load(key), inv(0, {9}));
  EXPECT_EQ(cache.stats().rejected, 0u);
}

TEST(Report, CyclicMatchesClosedForm) {
  JobSpec job;
  job.descriptor = "cyclic:4";
  job.degrees = {0, 6};
  const auto r = run_job(job);
  ASSERT_EQ(r.degrees.size(), 7u);
  for (const auto& d : r.degrees) EXPECT_EQ(d.invariants, cyclic_expected(4, d.degree));
  EXPECT_EQ(r.order, 4u);
}

TEST(Report, FamilyLowDegrees) {
  JobSpec job;
  job.descriptor = "family:p=2,a=1,b=1,g=1,d=0";
  job.degrees = {0, 2};
  const auto r = run_job(job);
  EXPECT_EQ(r.degrees[0].invariants, inv(1, {}));
  EXPECT_EQ(r.degrees[1].invariants, inv(0, {}));
  // H^2 is the character group of the abelianization (Z/2)^2.
  EXPECT_EQ(r.degrees[2].invariants, inv(0, {2, 2}));
}

TEST(Report, WarmAndColdRunsAgree) {
  TempDir dir;
  ResultCache cache(dir.path());
  JobSpec job;
  job.descriptor = "product:(cyclic:2)x(cyclic:4)";
  job.degrees = {0, 4};
  const auto cold = run_job(job, &cache);
  const auto warm = run_job(job, &cache);
  for (const auto& d : cold.degrees) EXPECT_FALSE(d.from_cache);
  for (const auto& d : warm.degrees) EXPECT_TRUE(d.from_cache);
  for (auto f : {OutputFormat::json, OutputFormat::md, OutputFormat::csv}) {
    EXPECT_EQ(render_report(cold, f, false), render_report(warm, f, false));
  }
  EXPECT_EQ(render_report(cold, OutputFormat::json, false),
            render_report(run_job(job), OutputFormat::json, false));
}

TEST(Report, JsonFollowsSchema) {
  JobSpec job;
  job.descriptor = "cyclic:4";
  job.degrees = {0, 2};
  job.checks = {"cor4"};
  const auto j = nlohmann::json::parse(render_report(run_job(job), OutputFormat::json));
  EXPECT_EQ(j["schema"], "cohomex.cohomology");
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["algorithm_version"], kAlgorithmVersion);
  EXPECT_EQ(j["group"]["order"], 4);
  EXPECT_TRUE(j["degrees"][0]["exponent"].is_null());
  EXPECT_EQ(j["degrees"][2]["torsion"], nlohmann::json::array({"4"}));
  EXPECT_EQ(j["degrees"][2]["exponent"], "4");
  EXPECT_TRUE(j.contains("timing"));
  const auto canon = nlohmann::json::parse(render_report(run_job(job), OutputFormat::json, false));
  EXPECT_FALSE(canon.contains("timing"));
  ASSERT_EQ(j["verdicts"].size(), 1u);
  EXPECT_EQ(j["verdicts"][0]["claim"], "cor4");
}

TEST(Report, CsvQuotesDescriptors) {
  JobSpec job;
  job.descriptor = "family:p=2,a=1,b=1,g=1,d=0";
  job.degrees = {1, 1};
  const auto csv = render_report(run_job(job), OutputFormat::csv);
  EXPECT_NE(csv.find("\"family:p=2,a=1,b=1,g=1,d=0\",int,1,0,1"), std::string::npos);
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(csv_field("plain"), "plain");
}

TEST(Report, GroupFacts) {
  const auto f = group_facts(build_from_descriptor("cyclic:6"));
  EXPECT_EQ(f.order, 6u);
  EXPECT_TRUE(f.abelian);
  EXPECT_EQ(f.invariants, inv(0, {6}));
  EXPECT_FALSE(f.prime);
  const auto d8 = group_facts(build_from_descriptor("family:p=2,a=1,b=1,g=1,d=0"));
  EXPECT_EQ(d8.order, 8u);
  EXPECT_EQ(d8.center_order, 2u);
  EXPECT_FALSE(d8.abelian);
  EXPECT_EQ(group_facts(build_from_descriptor("wreath:p=2,n=2")).order, 8u);
}

TEST(Report, ClaimsAndBudgets) {
  JobSpec job;
  job.descriptor = "product:(cyclic:3)x(cyclic:3)";
  job.degrees = {0, 4};
  job.checks = {"cor4"};
  const auto r = run_job(job);
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].status, VerdictStatus::pass);
  EXPECT_FALSE(any_failed(r.verdicts));

  job.checks = {"prop2"};
  EXPECT_THROW(run_job(job), UnsupportedError);
  job.checks = {"transfer"};
  EXPECT_THROW(run_job(job), UnsupportedError);

  JobSpec big;
  big.descriptor = "cyclic:8";
  big.degrees = {0, 6};
  big.budgets.max_generators = 1000;
  EXPECT_THROW(run_job(big), ResourceLimitError);
}

TEST(Census, GridRowsAndDeterminism) {
  CensusOptions o;
  o.max_degree = 2;
  o.workers = 1;
  const auto cells = o.grid.cells();
  for (const auto& c : cells) EXPECT_TRUE(c.is_normalized());
  EXPECT_EQ(std::set<FamilyParams>(cells.begin(), cells.end()).size(), cells.size());
  const auto one = run_census(o);
  auto row = [&](unsigned a, unsigned b, unsigned g, unsigned d) -> const CensusRow& {
    for (const auto& r : one.rows) {
      if (r.params == FamilyParams{2, a, b, g, d}) return r;
    }
    throw std::runtime_error("row missing");
  };
  EXPECT_EQ(row(1, 1, 1, 0).summary.epsilon, 2u);
  EXPECT_EQ(row(1, 1, 2, 1).summary.epsilon, 3u);
  EXPECT_EQ(row(1, 1, 2, 1).summary.lemma1_n, 3u);
  EXPECT_EQ(row(1, 1, 1, 1).summary.epsilon, 1u);
  for (const auto& r : one.rows) {
    EXPECT_FALSE(r.skipped) << r.descriptor << ": " << r.reason;
    ASSERT_EQ(r.summary.exponents.size(), 3u);
    EXPECT_EQ(r.summary.exponents[1], 1);
  }
  o.workers = 3;
  TempDir dir;
  ResultCache cache(dir.path());
  const auto many = run_census(o, &cache);
  const auto warm = run_census(o, &cache);
  EXPECT_EQ(render_census(one, OutputFormat::json, false),
            render_census(many, OutputFormat::json, false));
  EXPECT_EQ(render_census(one, OutputFormat::json, false),
            render_census(warm, OutputFormat::json, false));
  EXPECT_EQ(cache.stats().rejected, 0u);
}

TEST(Census, OverBudgetCellsAreSkipped) {
  CensusOptions o;
  o.grid.max_alpha = o.grid.max_beta = o.grid.max_gamma = 1;
  o.max_degree = 3;
  o.budgets.max_generators = 400;
  const auto r = run_census(o);
  ASSERT_EQ(r.rows.size(), 2u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.skipped);
    EXPECT_EQ(row.summary.exponents.size(), 3u);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("group cyclic:6"), 0);
  EXPECT_EQ(run_cli("group nonsense"), 2);
  EXPECT_EQ(run_cli("cohomology cyclic:4 --degrees 0..4 --no-cache"), 0);
  EXPECT_EQ(run_cli("cohomology cyclic:4 --degrees 4..1 --no-cache"), 2);
  EXPECT_EQ(run_cli("cohomology cyclic:4 --coeffs mod:1 --no-cache"), 2);
  EXPECT_EQ(run_cli("cohomology cyclic:8 --degrees 0..6 --budget-generators 100 --no-cache"), 3);
  EXPECT_EQ(run_cli("verify cor4 'product:(cyclic:3)x(cyclic:3)' --degrees 0..3 --no-cache"), 0);
  EXPECT_EQ(run_cli("verify prop9 cyclic:2"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
}

// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <sys/types.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cohomex/app/cache.hpp"
#include "cohomex/app/census.hpp"
#include "cohomex/app/report.hpp"
#include "cohomex/cohomology/engine.hpp"
#include "cohomex/cohomology/oracles.hpp"
#include "cohomex/errors.hpp"
#include "cohomex/exponent/analysis.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/descriptor.hpp"
#include "cohomex/group/subgroups.hpp"
#include "cohomex/linalg/local_elimination.hpp"
#include "cohomex/linalg/smith.hpp"
#include "cohomex/util/number_theory.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace cohomex;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;
const CoefficientSpec kInt = CoefficientSpec::integral();

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

FiniteGroup elementary(std::uint64_t p, unsigned k) {
  FiniteGroup g = cyclic_group(p);
  for (unsigned i = 1; i < k; ++i) g = direct_product(g, cyclic_group(p));
  return g;
}

FiniteGroup dihedral8() { return build_family_group(FamilyParams{2, 1, 1, 1, 0}); }

std::vector<FamilyParams> grid(std::uint64_t p) {
  std::set<FamilyParams> out;
  for (unsigned a = 1; a <= 2; ++a) {
    for (unsigned b = 1; b <= 2; ++b) {
      for (unsigned g = 1; g <= 2; ++g) {
        for (unsigned d = 0; d <= g; ++d) out.insert(normalize_params(p, a, b, g, d));
      }
    }
  }
  return {out.begin(), out.end()};
}

AbelianGroupInvariants cyclic_closed_form(std::uint64_t n, unsigned degree, bool modular) {
  if (modular) return AbelianGroupInvariants::from_cyclic_orders(0, std::vector<std::uint64_t>{n});
  if (degree == 0) return AbelianGroupInvariants::free(1);
  if (degree % 2 == 1) return AbelianGroupInvariants::trivial();
  return AbelianGroupInvariants::from_cyclic_orders(0, std::vector<std::uint64_t>{n});
}

BigInt pow_u(std::uint64_t p, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

BigInt exponent_value(const AbelianGroupInvariants& inv) { return exponent_of(inv).value; }

// Engines shared between criteria.
struct Shared {
  std::map<std::string, std::unique_ptr<CohomologyEngine>> engines;

  CohomologyEngine& get(const std::string& key, const std::function<FiniteGroup()>& make) {
    auto& slot = engines[key];
    if (!slot) slot = std::make_unique<CohomologyEngine>(make());
    return *slot;
  }
  CohomologyEngine& d8() { return get("d8", dihedral8); }
};

Shared shared;

// Criteria 1 and 11 share these reports.
std::map<std::string, std::string> criterion1_reports;

fs::path scratch_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() /
               ("cohomex-acceptance-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  const fs::path dir = scratch_dir("c1");
  ResultCache cache(dir);
  for (std::uint64_t n : {2, 3, 4, 5, 6, 8}) {
    const std::string desc = "cyclic:" + std::to_string(n);
    CohomologyEngine engine(cyclic_group(n));
    for (bool modular : {false, true}) {
      JobSpec job;
      job.descriptor = desc;
      job.coeffs = modular ? CoefficientSpec::modular(n) : kInt;
      job.degrees = {0, 6};
      const auto report = run_job(job, &cache, engine);
      for (const auto& d : report.degrees) {
        out.require(d.invariants == cyclic_closed_form(n, d.degree, modular),
                    desc + " " + job.coeffs.to_string() + " H^" + std::to_string(d.degree) +
                        " = " + d.invariants.to_string());
      }
      criterion1_reports[desc + "|" + job.coeffs.to_string()] =
          render_report(report, OutputFormat::json, false);
    }
  }
  // Kept for criterion 11's warm run.
  criterion1_reports["#dir"] = dir.string();
  return out;
}

Outcome criterion2() {
  Outcome out;
  struct Case {
    std::string name;
    std::vector<std::uint64_t> orders;
    unsigned max_degree;
  };
  const std::vector<Case> cases{{"z2^2", {2, 2}, 5},
                                {"z2^3", {2, 2, 2}, 5},
                                {"z2xz4", {2, 4}, 5},
                                {"z3^2", {3, 3}, 5}};
  for (const auto& c : cases) {
    auto& e = shared.get(c.name, [&] {
      FiniteGroup g = cyclic_group(c.orders[0]);
      for (std::size_t i = 1; i < c.orders.size(); ++i) g = direct_product(g, cyclic_group(c.orders[i]));
      return g;
    });
    for (unsigned d = 0; d <= c.max_degree; ++d) {
      const auto got = e.cohomology(d, kInt);
      const auto want = kunneth_oracle(c.orders, d);
      out.require(got == want, c.name + " H^" + std::to_string(d) + " = " + got.to_string() +
                                   ", oracle " + want.to_string());
    }
  }
  return out;
}

// Order of the subgroup of a finite abelian group (summand orders) killed by m.
BigInt m_torsion_order(const std::vector<BigInt>& orders, std::uint64_t m) {
  BigInt total = 1;
  for (const auto& o : orders) {
    BigInt g;
    mpz_gcd_ui(g.get_mpz_t(), o.get_mpz_t(), m);
    total *= g;
  }
  return total;
}

// Image of a homomorphism by enumerating its whole (small) source.
std::size_t brute_image_size(const HomMatrix& h) {
  std::set<std::vector<BigInt>> image;
  std::vector<BigInt> x(h.cols(), 0);
  for (;;) {
    auto y = h.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), h.target_orders[i].get_mpz_t());
      y[i] = r;
    }
    image.insert(y);
    std::size_t j = 0;
    while (j < x.size()) {
      x[j] += 1;
      if (x[j] < h.source_orders[j]) break;
      x[j] = 0;
      ++j;
    }
    if (j == x.size()) break;
  }
  return image.size();
}

bool killed_by(const HomMatrix& h, std::uint64_t m) {
  for (std::size_t j = 0; j < h.cols(); ++j) {
    const auto col = h.column(j);
    for (std::size_t i = 0; i < col.size(); ++i) {
      BigInt v = col[i] * static_cast<unsigned long>(m);
      if (!mpz_divisible_p(v.get_mpz_t(), h.target_orders[i].get_mpz_t())) return false;
    }
  }
  return true;
}

Outcome criterion3() {
  Outcome out;
  for (std::uint64_t n : {2, 3, 4}) {
    CohomologyEngine e(cyclic_group(n));
    for (unsigned i = 0; i <= 2; ++i) {
      const unsigned deg = 2 * i + 1;
      const auto b = e.bockstein(deg, n);
      const std::string tag = "Z/" + std::to_string(n) + " beta on H^" + std::to_string(deg);
      out.require(b.cols() == 1 && b.source_orders[0] == n, tag + ": source is not Z/n");
      out.require(b.rows() == 1 && b.target_orders[0] == n, tag + ": target is not Z/n");
      if (b.cols() == 1 && b.rows() == 1) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), b.entries[0][0].get_mpz_t(), b.target_orders[0].get_mpz_t());
        out.require(g == 1, tag + ": image of the generator is not a generator");
      }
    }
  }
  struct Case {
    std::string name;
    CohomologyEngine* engine;
    std::uint64_t m;
    unsigned max_degree;
  };
  CohomologyEngine z4(cyclic_group(4));
  const std::vector<Case> cases{{"Z/4", &z4, 4, 5}, {"D8", &shared.d8(), 2, 5}};
  for (const auto& c : cases) {
    for (unsigned n = 0; n <= c.max_degree; ++n) {
      const auto b = c.engine->bockstein(n, c.m);
      const auto target = c.engine->presentation(n + 1, kInt).orders();
      const std::string tag = c.name + " m=" + std::to_string(c.m) + " H^" + std::to_string(n);
      out.require(killed_by(b, c.m), tag + ": image not inside the m-torsion");
      out.require(BigInt(static_cast<unsigned long>(brute_image_size(b))) ==
                      m_torsion_order(target, c.m),
                  tag + ": image is not all of the m-torsion");
    }
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  struct Case {
    std::string name;
    FamilyParams params;
    unsigned max_degree;
    std::uint64_t mn;
  };
  const std::vector<Case> cases{{"family(2,1,1,1,0)", {2, 1, 1, 1, 0}, 6, 4},
                                {"family(2,1,1,2,1)", {2, 1, 1, 2, 1}, 4, 8}};
  for (const auto& c : cases) {
    CohomologyEngine& g = c.params == FamilyParams{2, 1, 1, 1, 0}
                              ? shared.d8()
                              : shared.get("f21121", [&] { return build_family_group(c.params); });
    const Subgroup cs = generate_subgroup(g.group(), std::vector<ElementId>{g.group().generator("c")});
    CohomologyEngine ce(subgroup_as_group(g.group(), cs));
    std::uint64_t m = extension_class_order(c.params, g.group());
    out.require(m * cs.order() == c.mn, c.name + ": m n = " + std::to_string(m * cs.order()));
    std::vector<std::string> per_degree;
    for (unsigned d = 2; d <= c.max_degree; d += 2) {
      const auto r = generator_restricting_classes(g, ce, cs, d);
      out.require(!r.partial, c.name + " degree " + std::to_string(d) + " was only sampled");
      if (r.classes.empty()) {
        per_degree.push_back(std::to_string(d) + ":vacuous");
        continue;
      }
      bool all = true;
      for (const auto& k : r.classes) {
        all = all && mpz_divisible_ui_p(k.order.get_mpz_t(), c.mn);
      }
      out.require(all, c.name + " degree " + std::to_string(d) +
                           ": a generator-restricting class has order not divisible by " +
                           std::to_string(c.mn));
      per_degree.push_back(std::to_string(d) + ":" + std::to_string(r.classes.size()) + " classes");
    }
    const Verdict v = check_prop1(g, cs, c.max_degree);
    out.require(v.status != VerdictStatus::fail, c.name + ": check_prop1 failed: " + v.reason);
    std::string joined;
    for (const auto& s : per_degree) joined += (joined.empty() ? "" : ", ") + s;
    out.notes.push_back(c.name + " [" + joined + "] verdict " + to_string(v.status));
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  CohomologyEngine& g = shared.d8();
  bool saw_four = false;
  std::string exps;
  for (unsigned d = 1; d <= 6; ++d) {
    const BigInt e = exponent_value(g.cohomology(d, kInt));
    exps += (exps.empty() ? "" : " ") + to_string(e);
    saw_four = saw_four || e == 4;
    out.require(e == 1 || e == 2 || e == 4,
                "H^" + std::to_string(d) + " has exponent " + to_string(e) + " > 4");
  }
  out.require(saw_four, "no class of order 4 in degrees <= 6");
  const auto l = lemma1_bound(g.group(), 4);
  out.require(l.n && *l.n == 2, "lemma1_bound(D8) is not 2");
  out.notes.push_back("exponents deg 1..6: " + exps);
  return out;
}

Outcome criterion6() {
  Outcome out;
  auto expect_bound = [&](const std::string& name, const FiniteGroup& g, unsigned want) {
    const auto l = lemma1_bound(g, 5);
    out.require(l.n && *l.n == want, "lemma1_bound(" + name + ") = " +
                                         (l.n ? std::to_string(*l.n) : "none") + ", want " +
                                         std::to_string(want));
  };
  expect_bound("(Z/2)^2", elementary(2, 2), 1);
  expect_bound("(Z/2)^3", elementary(2, 3), 1);
  expect_bound("(Z/3)^2", elementary(3, 2), 1);
  for (unsigned k = 1; k <= 3; ++k) {
    expect_bound("Z/2^" + std::to_string(k), cyclic_group(std::size_t{1} << k), k);
    expect_bound("Z/3^" + std::to_string(k), cyclic_group(util::checked_pow(3, k)), k);
  }
  expect_bound("D8", dihedral8(), 2);
  const FamilyParams f{2, 1, 1, 2, 1};
  expect_bound("family(2,1,1,2,1)", build_family_group(f), 3);
  out.require(epsilon(f) == 3, "epsilon(2,1,1,2,1) != 3");
  std::size_t cells = 0;
  for (std::uint64_t p : {2, 3}) {
    for (const auto& params : grid(p)) {
      ++cells;
      const FiniteGroup g = build_family_group(params);
      const auto w = prop2_witness_subgroups(params, g);
      std::vector<std::uint64_t> want{util::checked_pow(p, params.alpha),
                                      util::checked_pow(p, params.beta),
                                      util::checked_pow(p, 2 * params.gamma - params.delta)};
      auto got = w.indices;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      out.require(got == want, g.descriptor() + ": witness indices differ");
      // Independent recomputation of the core intersection.
      Subgroup meet = whole_group(g);
      for (const Subgroup* h : {&w.ac, &w.bc, &w.third}) meet = intersect(meet, normal_core(g, *h));
      out.require(meet.is_trivial() && w.intersection.is_trivial(),
                  g.descriptor() + ": cores meet nontrivially");
    }
  }
  out.notes.push_back(std::to_string(cells) + " grid cells");
  return out;
}

Outcome criterion7() {
  Outcome out;
  for (std::uint64_t p : {2, 3}) {
    for (const auto& params : grid(p)) {
      const FiniteGroup g = build_family_group(params);
      const Subgroup c = generate_subgroup(g, std::vector<ElementId>{g.generator("c")});
      const auto d = minimal_splitting_subgroup(g, c);
      const std::uint64_t formula = util::checked_pow(p, params.gamma - params.delta);
      out.require(d.m == formula, g.descriptor() + ": |D| = " + std::to_string(d.m) +
                                      ", formula " + std::to_string(formula));
    }
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  struct Case {
    std::string name;
    std::uint64_t p;
    unsigned max_degree;
  };
  for (const auto& c : std::vector<Case>{{"z2^2", 2, 5}, {"z2^3", 2, 5}, {"z3^2", 3, 4}}) {
    auto& e = shared.engines.at(c.name);
    for (unsigned d = 1; d <= c.max_degree; ++d) {
      const BigInt x = exponent_value(e->cohomology(d, kInt));
      // H^1 = Hom(G, Z) vanishes; from degree 2 on the exponent is exactly p.
      const bool ok = d == 1 ? x == 1 : x == c.p;
      out.require(ok, c.name + " H^" + std::to_string(d) + " exponent " + to_string(x));
    }
    const Verdict v = check_cor4(*e, c.max_degree);
    out.require(v.status == VerdictStatus::pass, c.name + ": check_cor4 " + to_string(v.status));
  }
  return out;
}

Outcome criterion9() {
  Outcome out;
  CohomologyEngine e(wreath_sylow(2, 2));
  out.require(e.group().order() == 8, "G_2 does not have order 8");
  std::string exps;
  for (unsigned d = 1; d <= 6; ++d) {
    const BigInt x = exponent_value(e.cohomology(d, kInt));
    exps += (exps.empty() ? "" : " ") + to_string(x);
    out.require(mpz_divisible_p(BigInt(4).get_mpz_t(), x.get_mpz_t()),
                "H^" + std::to_string(d) + " exponent " + to_string(x) + " does not divide 4");
  }
  const Verdict v = check_transfer_bound(e, 2, 2, 6);
  out.require(v.status == VerdictStatus::pass, "check_transfer_bound " + to_string(v.status));
  out.notes.push_back("exponents deg 1..6: " + exps);
  return out;
}

BigInt p_part(BigInt x, unsigned long p) {
  BigInt out = 1;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    x /= p;
    out *= p;
  }
  return out;
}

unsigned top_precision(std::uint64_t p) {
  unsigned k = 0;
  unsigned __int128 x = p;
  while (x < (static_cast<unsigned __int128>(1) << 63)) {
    x *= p;
    ++k;
  }
  return k;
}

bool unimodular(const SparseIntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const auto f = oracle::dense_snf(m.to_dense());
  return f.size() == m.rows() &&
         std::all_of(f.begin(), f.end(), [](const BigInt& x) { return x == 1; });
}

Outcome criterion10() {
  Outcome out;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 50);
  std::uniform_real_distribution<double> dens(0.03, 0.3);
  int failures = 0;
  for (int trial = 0; trial < 1000 && failures < 10; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const auto dense = oracle::random_dense(rng, rows, cols, 5, dens(rng));
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (dense[i][j] != 0) t.push_back({static_cast<Index>(i), static_cast<Index>(j), dense[i][j]});
      }
    }
    const auto a = SparseIntMatrix::from_triplets(static_cast<Index>(rows), static_cast<Index>(cols), t);
    SnfOptions o;
    o.want_v_inverse = true;
    const auto r = smith_normal_form(a, o);
    const std::string tag = "trial " + std::to_string(trial) + " (" + std::to_string(rows) + "x" +
                            std::to_string(cols) + ")";
    bool ok = true;
    auto check = [&](bool cond, const std::string& what) {
      if (!cond) {
        ok = false;
        out.require(false, tag + ": " + what);
      }
    };
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      check(r.factors[i] > 0, "nonpositive factor");
      if (i > 0) {
        check(mpz_divisible_p(r.factors[i].get_mpz_t(), r.factors[i - 1].get_mpz_t()),
              "divisibility chain broken");
      }
    }
    std::vector<Triplet> diag;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      diag.push_back({static_cast<Index>(i), static_cast<Index>(i), r.factors[i]});
    }
    const auto d = SparseIntMatrix::from_triplets(static_cast<Index>(rows), static_cast<Index>(cols), diag);
    check(*r.u * a * *r.v == d, "U A V != D");
    check(*r.v * *r.v_inverse == SparseIntMatrix::identity(static_cast<Index>(cols)),
          "V is not invertible over Z");
    check(unimodular(*r.u), "U is not unimodular");
    check(r.factors == oracle::dense_snf(dense), "differs from the dense oracle");
    std::vector<Index> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    check(smith_normal_form(a.permuted(rp, cp)).factors == r.factors,
          "not invariant under permutation");
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      const auto local = snf_local(a, p, top_precision(p), r.factors.size());
      std::vector<BigInt> want;
      for (const auto& f : r.factors) want.push_back(p_part(f, p));
      std::sort(want.begin(), want.end());
      check(local.factors == want, "snf_local p-parts differ at p=" + std::to_string(p));
    }
    if (!ok) ++failures;
  }
  return out;
}

// Every file in the cache directory is a complete, valid entry.
bool cache_is_clean(const fs::path& dir, std::size_t& entries, std::string& problem) {
  entries = 0;
  for (const auto& f : fs::recursive_directory_iterator(dir)) {
    if (!f.is_regular_file()) continue;
    const std::string name = f.path().filename().string();
    if (name.find(".tmp.") != std::string::npos) {
      problem = "stray temporary " + name;
      return false;
    }
    std::ifstream in(f.path());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      const auto j = nlohmann::json::parse(ss.str());
      const auto payload = j.at("payload").get<std::string>();
      if (j.at("checksum").get<std::string>() != sha256_hex(payload)) {
        problem = "checksum mismatch in " + name;
        return false;
      }
      if (sha256_hex(j.at("key").get<std::string>()) + ".json" != name) {
        problem = "entry stored under the wrong name " + name;
        return false;
      }
      deserialize_invariants(payload);
    } catch (const std::exception& e) {
      problem = "unreadable entry " + name + ": " + e.what();
      return false;
    }
    ++entries;
  }
  return true;
}

Outcome criterion11() {
  Outcome out;
  if (criterion1_reports.empty()) criterion1();
  {
    const fs::path dir = criterion1_reports.at("#dir");
    ResultCache cache(dir);
    for (std::uint64_t n : {2, 3, 4, 5, 6, 8}) {
      for (bool modular : {false, true}) {
        JobSpec job;
        job.descriptor = "cyclic:" + std::to_string(n);
        job.coeffs = modular ? CoefficientSpec::modular(n) : kInt;
        job.degrees = {0, 6};
        const auto warm = run_job(job, &cache);
        bool all_cached = true;
        for (const auto& d : warm.degrees) all_cached = all_cached && d.from_cache;
        out.require(all_cached, job.descriptor + ": warm run recomputed");
        out.require(render_report(warm, OutputFormat::json, false) ==
                        criterion1_reports.at(job.descriptor + "|" + job.coeffs.to_string()),
                    job.descriptor + " " + job.coeffs.to_string() + ": warm and cold reports differ");
      }
    }
    out.require(cache.stats().rejected == 0, "criterion 1 cache rejected entries");
    fs::remove_all(dir);
  }
  const fs::path dir = scratch_dir("c11");
  CensusOptions o;
  o.grid.primes = {2, 3};
  o.max_degree = 2;
  o.budgets.max_generators = 600000;
  o.workers = 4;
  CensusReport first, second;
  {
    // Two census runs racing on one cache directory.
    ResultCache a(dir), b(dir);
    std::thread other([&] { second = run_census(o, &b); });
    first = run_census(o, &a);
    other.join();
  }
  std::size_t entries = 0;
  std::string problem;
  out.require(cache_is_clean(dir, entries, problem), "cache corrupted: " + problem);
  ResultCache cache(dir);
  const auto warm = run_census(o, &cache);
  const auto canon = render_census(first, OutputFormat::json, false);
  out.require(canon == render_census(second, OutputFormat::json, false),
              "concurrent census runs disagree");
  out.require(canon == render_census(warm, OutputFormat::json, false),
              "warm census differs from cold");
  out.require(cache.stats().rejected == 0, "warm census rejected cache entries");
  std::size_t skipped = 0;
  for (const auto& r : warm.rows) skipped += r.skipped;
  out.notes.push_back(std::to_string(warm.rows.size()) + " cells (" + std::to_string(skipped) +
                      " over budget), " + std::to_string(entries) + " cache entries");
  fs::remove_all(dir);
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "cyclic closed form, integral and mod n, degrees 0..6", 60, criterion1},
      {2, "Kunneth oracle for (Z/2)^2, (Z/2)^3, Z/2 x Z/4, (Z/3)^2, degrees 0..5", 900, criterion2},
      {3, "Bockstein generators on Z/n and image = m-torsion for Z/4 and D8", 600, criterion3},
      {4, "generator-restricting classes have order divisible by mn", 3600, criterion4},
      {5, "D8 has exponent 4 in some degree <= 6 and never more", 3600, criterion5},
      {6, "lemma1 bounds and witness subgroups over the grid", 300, criterion6},
      {7, "extension class order equals |D| over the grid", 300, criterion7},
      {8, "elementary abelian groups have exponent p", 900, criterion8},
      {9, "Sylow 2-subgroup of S4 has exponents dividing 4", 3600, criterion9},
      {10, "Smith normal form property suite, 1000 random matrices", 300, criterion10},
      {11, "warm and cold runs agree, parallel census keeps the cache intact", 300, criterion11},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.notes.push_back("took " + std::to_string(secs) + " s, budget " +
                        std::to_string(c.budget_seconds) + " s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << " - " << c.title << " ("
         << secs << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& n : o.notes) std::cout << "    " << n << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}

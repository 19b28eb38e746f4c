#include "cohomex/app/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "cohomex/errors.hpp"
#include "cohomex/group/constructions.hpp"
#include "cohomex/group/descriptor.hpp"
#include "cohomex/group/subgroups.hpp"
#include "json.hpp"

namespace cohomex {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

std::optional<FamilyParams> family_of(const std::string& descriptor) {
  if (!starts_with(descriptor, "family:")) return std::nullopt;
  return normalize_params(parse_family_descriptor(descriptor));
}

std::optional<std::pair<std::uint64_t, unsigned>> wreath_of(const std::string& descriptor) {
  if (!starts_with(descriptor, "wreath:")) return std::nullopt;
  unsigned long long p = 0;
  unsigned n = 0;
  if (std::sscanf(descriptor.c_str(), "wreath:p=%llu,n=%u", &p, &n) != 2) {
    throw ParseError("bad wreath descriptor '" + descriptor + "'");
  }
  return std::make_pair(static_cast<std::uint64_t>(p), n);
}

ordered_json invariants_json(const AbelianGroupInvariants& inv) {
  ordered_json t = ordered_json::array();
  for (const auto& x : inv.torsion()) t.push_back(to_string(x));
  const Exponent e = exponent_of(inv);
  ordered_json out;
  out["invariants"] = inv.to_string();
  out["free_rank"] = inv.free_rank();
  out["torsion"] = t;
  out["exponent"] = e.has_free_part ? ordered_json(nullptr) : ordered_json(to_string(e.value));
  return out;
}

std::string exponent_text(const AbelianGroupInvariants& inv) {
  const Exponent e = exponent_of(inv);
  return e.has_free_part ? "inf" : to_string(e.value);
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json out;
  out["claim"] = v.claim;
  out["status"] = to_string(v.status);
  out["reason"] = v.reason;
  ordered_json ev = ordered_json::array();
  for (const auto& e : v.evidence) {
    ordered_json x;
    x["degree"] = e.degree ? ordered_json(*e.degree) : ordered_json(nullptr);
    x["status"] = to_string(e.status);
    x["note"] = e.note;
    ordered_json orders = ordered_json::array();
    for (const auto& o : e.orders) orders.push_back(to_string(o));
    x["orders"] = orders;
    ev.push_back(std::move(x));
  }
  out["evidence"] = ev;
  out["counter_witness"] =
      v.counter_witness ? ordered_json(*v.counter_witness) : ordered_json(nullptr);
  return out;
}

}  // namespace

GroupFacts group_facts(const FiniteGroup& g) {
  GroupFacts f;
  f.descriptor = g.descriptor();
  f.order = g.order();
  if (g.prime() != 0) f.prime = g.prime();
  f.center_order = center(g).order();
  f.abelian = g.is_abelian();
  if (f.abelian) f.invariants = abelian_invariants(g);
  for (const auto& gen : g.generators()) {
    f.generators.emplace_back(gen.name, g.element_order(gen.element));
  }
  return f;
}

std::string render_group_facts(const GroupFacts& f, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      j["schema_version"] = kReportSchemaVersion;
      j["descriptor"] = f.descriptor;
      j["order"] = f.order;
      j["prime"] = f.prime ? ordered_json(*f.prime) : ordered_json(nullptr);
      j["center_order"] = f.center_order;
      j["abelian"] = f.abelian;
      if (f.invariants) {
        ordered_json t = ordered_json::array();
        for (const auto& x : f.invariants->torsion()) t.push_back(to_string(x));
        j["abelian_invariants"] = t;
      } else {
        j["abelian_invariants"] = nullptr;
      }
      ordered_json gens = ordered_json::array();
      for (const auto& [name, order] : f.generators) {
        gens.push_back(ordered_json{{"name", name}, {"order", order}});
      }
      j["generators"] = gens;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::md: {
      out << "| property | value |\n|---|---|\n";
      out << "| descriptor | " << f.descriptor << " |\n";
      out << "| order | " << f.order << " |\n";
      out << "| center order | " << f.center_order << " |\n";
      out << "| abelian | " << (f.abelian ? "yes" : "no") << " |\n";
      if (f.invariants) out << "| invariants | " << f.invariants->to_string() << " |\n";
      for (const auto& [name, order] : f.generators) {
        out << "| generator " << name << " | order " << order << " |\n";
      }
      break;
    }
    case OutputFormat::csv: {
      out << "descriptor,order,center_order,abelian,invariants\n";
      out << csv_field(f.descriptor) << ',' << f.order << ',' << f.center_order << ','
          << (f.abelian ? "true" : "false") << ','
          << (f.invariants ? f.invariants->to_string() : "") << '\n';
      break;
    }
  }
  return out.str();
}

Subgroup claim_subgroup(const FiniteGroup& g) {
  if (family_of(g.descriptor())) {
    return generate_subgroup(g, std::vector<ElementId>{g.generator("c")});
  }
  const Subgroup z = center(g);
  if (!z.is_trivial()) {
    for (ElementId x : z.members) {
      if (g.element_order(x) == z.order()) return z;
    }
  }
  throw UnsupportedError("no cyclic central subgroup to restrict to in " + g.descriptor());
}

Verdict run_claim(const std::string& claim, CohomologyEngine& engine, unsigned max_degree,
                  unsigned depth) {
  const FiniteGroup& g = engine.group();
  CheckOptions options;
  options.lemma1_depth = depth;
  if (claim == "prop1") return check_prop1(engine, claim_subgroup(g), max_degree, options);
  if (claim == "cor1") return check_cor1(engine, claim_subgroup(g), max_degree, options);
  if (claim == "cor4") return check_cor4(engine, max_degree);
  if (claim == "prop2") {
    const auto params = family_of(g.descriptor());
    if (!params) throw UnsupportedError("prop2 applies to family groups only");
    return check_prop2(*params, engine, max_degree, options).verdict;
  }
  if (claim == "lemma1") {
    std::optional<unsigned> expected;
    unsigned n = depth;
    if (const auto params = family_of(g.descriptor())) n = std::max(n, epsilon(*params));
    return check_lemma1(g, n, expected);
  }
  if (claim == "transfer") {
    const auto w = wreath_of(g.descriptor());
    if (!w) throw UnsupportedError("transfer applies to wreath groups only");
    return check_transfer_bound(engine, w->first, w->second, max_degree);
  }
  throw PreconditionError("unknown claim '" + claim + "'");
}

namespace {

CohomologyReport run_job_with(const JobSpec& job, const ResultCache* cache,
                              CohomologyEngine* shared) {
  job.validate();
  const auto start = Clock::now();
  CohomologyReport report;
  const std::string descriptor = canonical_descriptor(job.descriptor);
  if (shared && shared->group().descriptor() != descriptor) {
    throw PreconditionError("engine of " + shared->group().descriptor() +
                            " cannot run a job on " + descriptor);
  }
  report.descriptor = descriptor;
  report.coeffs = job.coeffs;
  std::optional<CohomologyEngine> engine;
  auto get_engine = [&]() -> CohomologyEngine& {
    if (shared) return *shared;
    if (!engine) engine.emplace(build_from_descriptor(descriptor), job.engine_options());
    return *engine;
  };
  // The order is needed even on a fully warm cache.
  report.order = shared ? shared->group().order() : build_from_descriptor(descriptor).order();
  for (unsigned d = job.degrees.lo; d <= job.degrees.hi; ++d) {
    const auto t = Clock::now();
    DegreeReport r;
    r.degree = d;
    const CacheKey key{descriptor, job.coeffs, d};
    std::optional<AbelianGroupInvariants> hit;
    if (cache) hit = cache->load(key);
    if (hit) {
      r.invariants = *hit;
      r.from_cache = true;
    } else {
      r.invariants = get_engine().cohomology(d, job.coeffs);
      if (cache) cache->store(key, r.invariants);
    }
    r.seconds = since(t);
    report.degrees.push_back(std::move(r));
  }
  for (const auto& claim : job.checks) {
    report.verdicts.push_back(run_claim(claim, get_engine(), job.degrees.hi, job.depth));
  }
  report.seconds = since(start);
  return report;
}

}  // namespace

CohomologyReport run_job(const JobSpec& job, const ResultCache* cache) {
  return run_job_with(job, cache, nullptr);
}

CohomologyReport run_job(const JobSpec& job, const ResultCache* cache, CohomologyEngine& engine) {
  return run_job_with(job, cache, &engine);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

bool any_failed(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::fail) return true;
  }
  return false;
}

std::string render_verdicts(const std::vector<Verdict>& verdicts, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      ordered_json a = ordered_json::array();
      for (const auto& v : verdicts) a.push_back(verdict_json(v));
      out << a.dump(2) << '\n';
      break;
    }
    case OutputFormat::md: {
      for (const auto& v : verdicts) {
        out << "### " << v.claim << ": " << to_string(v.status) << "\n\n" << v.reason << "\n\n";
        out << "| degree | status | note |\n|---|---|---|\n";
        for (const auto& e : v.evidence) {
          out << "| " << (e.degree ? std::to_string(*e.degree) : "-") << " | "
              << to_string(e.status) << " | " << e.note << " |\n";
        }
        if (v.counter_witness) out << "\ncounter-witness: " << *v.counter_witness << '\n';
        out << '\n';
      }
      break;
    }
    case OutputFormat::csv: {
      out << "claim,degree,status,note\n";
      for (const auto& v : verdicts) {
        out << v.claim << ",," << to_string(v.status) << ',' << csv_field(v.reason) << '\n';
        for (const auto& e : v.evidence) {
          out << v.claim << ',' << (e.degree ? std::to_string(*e.degree) : "") << ','
              << to_string(e.status) << ',' << csv_field(e.note) << '\n';
        }
      }
      break;
    }
  }
  return out.str();
}

std::string render_report(const CohomologyReport& report, OutputFormat format, bool timing) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      ordered_json j;
      j["schema"] = "cohomex.cohomology";
      j["schema_version"] = kReportSchemaVersion;
      j["algorithm_version"] = kAlgorithmVersion;
      j["group"] = ordered_json{{"descriptor", report.descriptor}, {"order", report.order}};
      j["coefficients"] = report.coeffs.to_string();
      ordered_json degrees = ordered_json::array();
      for (const auto& d : report.degrees) {
        ordered_json x;
        x["degree"] = d.degree;
        x.update(invariants_json(d.invariants));
        degrees.push_back(std::move(x));
      }
      j["degrees"] = degrees;
      ordered_json verdicts = ordered_json::array();
      for (const auto& v : report.verdicts) verdicts.push_back(verdict_json(v));
      j["verdicts"] = verdicts;
      if (timing) {
        ordered_json per = ordered_json::array();
        for (const auto& d : report.degrees) {
          per.push_back(ordered_json{
              {"degree", d.degree}, {"seconds", d.seconds}, {"cached", d.from_cache}});
        }
        j["timing"] = ordered_json{{"seconds", report.seconds}, {"degrees", per}};
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::md: {
      out << "## H^n(" << report.descriptor << "; " << report.coeffs.to_string() << ")\n\n";
      out << "| n | H^n | exponent |" << (timing ? " seconds | cached |" : "") << '\n';
      out << "|---|---|---|" << (timing ? "---|---|" : "") << '\n';
      for (const auto& d : report.degrees) {
        out << "| " << d.degree << " | " << d.invariants.to_string() << " | "
            << exponent_text(d.invariants) << " |";
        if (timing) {
          out << ' ' << d.seconds << " | " << (d.from_cache ? "yes" : "no") << " |";
        }
        out << '\n';
      }
      if (!report.verdicts.empty()) out << '\n' << render_verdicts(report.verdicts, format);
      break;
    }
    case OutputFormat::csv: {
      out << "descriptor,coefficients,degree,invariants,exponent\n";
      for (const auto& d : report.degrees) {
        out << csv_field(report.descriptor) << ',' << report.coeffs.to_string() << ',' << d.degree << ','
            << d.invariants.to_string() << ',' << exponent_text(d.invariants) << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace cohomex

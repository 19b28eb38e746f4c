#include "cohomex/group/descriptor.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "cohomex/errors.hpp"

namespace cohomex {

namespace {

long long parse_number(std::string_view text, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" +
                     std::string(text) + "'");
  }
  return value;
}

std::map<std::string, long long> parse_key_values(std::string_view body,
                                                  std::string_view kind) {
  std::map<std::string, long long> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("malformed " + std::string(kind) + " field '" +
                       std::string(item) + "'");
    }
    std::string key(item.substr(0, eq));
    if (out.count(key)) throw ParseError("duplicate key '" + key + "'");
    out[key] = parse_number(item.substr(eq + 1), key);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("trailing comma in descriptor");
  }
  return out;
}

long long require(const std::map<std::string, long long>& kv, const char* key,
                  std::string_view kind) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw ParseError(std::string(kind) + " descriptor is missing '" + key + "'");
  }
  return it->second;
}

void reject_unknown(const std::map<std::string, long long>& kv,
                    std::initializer_list<const char*> known, std::string_view kind) {
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) {
      throw ParseError("unknown key '" + key + "' in " + std::string(kind) +
                       " descriptor");
    }
  }
}

/// Splits "(A)x(B)x(C)" into its parenthesized factors.
std::vector<std::string_view> split_product(std::string_view body) {
  std::vector<std::string_view> factors;
  std::size_t i = 0;
  while (true) {
    if (i >= body.size() || body[i] != '(') {
      throw ParseError("product factors must be parenthesized");
    }
    int depth = 0;
    std::size_t j = i;
    for (; j < body.size(); ++j) {
      if (body[j] == '(') ++depth;
      if (body[j] == ')' && --depth == 0) break;
    }
    if (j >= body.size()) throw ParseError("unbalanced parentheses in product");
    factors.push_back(body.substr(i + 1, j - i - 1));
    i = j + 1;
    if (i == body.size()) break;
    if (body[i] != 'x') throw ParseError("expected 'x' between product factors");
    ++i;
  }
  if (factors.size() < 2) throw ParseError("a product needs at least two factors");
  return factors;
}

std::pair<std::uint64_t, unsigned> parse_wreath(std::string_view body) {
  auto kv = parse_key_values(body, "wreath");
  reject_unknown(kv, {"p", "n"}, "wreath");
  const long long p = require(kv, "p", "wreath");
  const long long n = require(kv, "n", "wreath");
  if (p < 2 || n < 1) throw PreconditionError("wreath needs p >= 2 and n >= 1");
  return {static_cast<std::uint64_t>(p), static_cast<unsigned>(n)};
}

}  // namespace

std::string format_family_descriptor(const FamilyParams& params) {
  return "family:p=" + std::to_string(params.p) + ",a=" + std::to_string(params.alpha) +
         ",b=" + std::to_string(params.beta) + ",g=" + std::to_string(params.gamma) +
         ",d=" + std::to_string(params.delta);
}

std::string format_wreath_descriptor(std::uint64_t p, unsigned n) {
  return "wreath:p=" + std::to_string(p) + ",n=" + std::to_string(n);
}

std::string format_product_descriptor(std::string_view left, std::string_view right) {
  return "product:(" + std::string(left) + ")x(" + std::string(right) + ")";
}

FamilyParams parse_family_descriptor(std::string_view text) {
  constexpr std::string_view prefix = "family:";
  if (!text.starts_with(prefix)) throw ParseError("not a family descriptor");
  auto kv = parse_key_values(text.substr(prefix.size()), "family");
  reject_unknown(kv, {"p", "a", "b", "g", "d"}, "family");
  FamilyParams raw;
  const long long p = require(kv, "p", "family");
  const long long a = require(kv, "a", "family");
  const long long b = require(kv, "b", "family");
  const long long g = require(kv, "g", "family");
  const long long d = require(kv, "d", "family");
  if (p < 0 || a < 0 || b < 0 || g < 0 || d < 0) {
    throw PreconditionError("family parameters must be non-negative");
  }
  raw.p = static_cast<std::uint64_t>(p);
  raw.alpha = static_cast<unsigned>(a);
  raw.beta = static_cast<unsigned>(b);
  raw.gamma = static_cast<unsigned>(g);
  raw.delta = static_cast<unsigned>(d);
  return raw;
}

FiniteGroup build_from_descriptor(std::string_view text) {
  if (text.starts_with("cyclic:")) {
    const long long n = parse_number(text.substr(7), "cyclic order");
    if (n < 1) throw PreconditionError("cyclic order must be positive");
    if (n > static_cast<long long>(kMaxGroupOrder)) {
      throw ResourceLimitError("cyclic order exceeds the supported maximum");
    }
    return cyclic_group(static_cast<std::size_t>(n));
  }
  if (text.starts_with("family:")) {
    return build_family_group(normalize_params(parse_family_descriptor(text)));
  }
  if (text.starts_with("wreath:")) {
    auto [p, n] = parse_wreath(text.substr(7));
    return wreath_sylow(p, n);
  }
  if (text.starts_with("product:")) {
    auto factors = split_product(text.substr(8));
    FiniteGroup acc = build_from_descriptor(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = direct_product(acc, build_from_descriptor(factors[i]));
    }
    return acc;
  }
  throw ParseError("unknown group descriptor '" + std::string(text) + "'");
}

std::string canonical_descriptor(std::string_view text) {
  if (text.starts_with("cyclic:")) {
    return "cyclic:" + std::to_string(parse_number(text.substr(7), "cyclic order"));
  }
  if (text.starts_with("family:")) {
    return format_family_descriptor(normalize_params(parse_family_descriptor(text)));
  }
  if (text.starts_with("wreath:")) {
    auto [p, n] = parse_wreath(text.substr(7));
    return format_wreath_descriptor(p, n);
  }
  if (text.starts_with("product:")) {
    auto factors = split_product(text.substr(8));
    std::string acc = canonical_descriptor(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = format_product_descriptor(acc, canonical_descriptor(factors[i]));
    }
    return acc;
  }
  throw ParseError("unknown group descriptor '" + std::string(text) + "'");
}

}  // namespace cohomex

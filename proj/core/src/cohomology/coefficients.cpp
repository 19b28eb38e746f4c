#include "cohomex/cohomology/coefficients.hpp"

#include <charconv>

#include "cohomex/errors.hpp"

namespace cohomex {

CoefficientSpec CoefficientSpec::modular(std::uint64_t m) {
  if (m < 2) throw PreconditionError("modular coefficients need m >= 2");
  return CoefficientSpec(m);
}

CoefficientSpec CoefficientSpec::parse(std::string_view text) {
  if (text == "int" || text == "Z") return integral();
  constexpr std::string_view prefix = "mod:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      if (m < 2) throw ParseError("modulus must be at least 2: '" + std::string(text) + "'");
      return CoefficientSpec(m);
    }
  }
  throw ParseError("coefficients must be 'int' or 'mod:<m>', got '" + std::string(text) + "'");
}

std::string CoefficientSpec::to_string() const {
  return is_integral() ? "int" : "mod:" + std::to_string(m_);
}

}  // namespace cohomex

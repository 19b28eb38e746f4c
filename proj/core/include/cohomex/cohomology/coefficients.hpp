#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cohomex {

/// Coefficient ring of a cohomology computation: Z or Z/m with m >= 2.
class CoefficientSpec {
 public:
  static CoefficientSpec integral() { return CoefficientSpec(0); }
  /// Throws PreconditionError when m < 2.
  static CoefficientSpec modular(std::uint64_t m);
  /// "int" or "mod:<m>"; throws ParseError.
  static CoefficientSpec parse(std::string_view text);

  bool is_integral() const { return m_ == 0; }
  /// The modulus m; 0 for integral coefficients.
  std::uint64_t modulus() const { return m_; }
  std::string to_string() const;

  friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;
  friend auto operator<=>(const CoefficientSpec&, const CoefficientSpec&) = default;

 private:
  explicit CoefficientSpec(std::uint64_t m) : m_(m) {}
  std::uint64_t m_ = 0;
};

}  // namespace cohomex

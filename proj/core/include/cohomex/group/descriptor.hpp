#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cohomex/group/constructions.hpp"
#include "cohomex/group/finite_group.hpp"

namespace cohomex {

// Group descriptor grammar (whitespace is not allowed):
//
//   descriptor := "cyclic:" N
//              |  "family:" "p=" N ",a=" N ",b=" N ",g=" N ",d=" N
//              |  "wreath:" "p=" N ",n=" N
//              |  "product:" "(" descriptor ")" ( "x" "(" descriptor ")" )+
//
// Family keys may appear in any order; raw family parameters are normalized
// before building, so the canonical descriptor of the built group always
// carries normalized values. An n-ary product folds to the left.

std::string format_family_descriptor(const FamilyParams& params);
std::string format_wreath_descriptor(std::uint64_t p, unsigned n);
std::string format_product_descriptor(std::string_view left, std::string_view right);

/// Raw (un-normalized) family parameters from "family:..."; throws ParseError.
FamilyParams parse_family_descriptor(std::string_view text);

/// Builds the group a descriptor names. Throws ParseError on malformed text
/// and the constructors' errors on out-of-range parameters.
FiniteGroup build_from_descriptor(std::string_view text);

/// Canonical form of a descriptor (what build_from_descriptor(text)
/// .descriptor() returns) without building the group.
std::string canonical_descriptor(std::string_view text);

}  // namespace cohomex

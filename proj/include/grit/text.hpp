#pragma once

#include "grit/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grit::text {

/// One parsed summand: coefficient times a product of variable powers.
/// Exponents may be negative; callers decide whether that is allowed.
struct RawTerm {
    Rational coeff;
    std::vector<std::pair<std::string, int>> factors;
    std::vector<std::size_t> factor_positions;
};

/// Parses `[+-] term (+|- term)*` where a term is `factor (* factor)*` and a
/// factor is an integer, `num/den`, or `name[^[-]k]`. Whitespace is ignored.
/// Throws ParseError with the offending offset.
std::vector<RawTerm> parse_terms(std::string_view input);

}  // namespace grit::text

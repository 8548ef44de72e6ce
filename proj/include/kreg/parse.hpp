#pragma once

#include <string>

#include "kreg/polynomial.hpp"

namespace kreg {

/// Parses expressions like "y1^2+y2^2", "x1*x2", "2/3*x^4 - y", "x1x2".
/// Numbered variables (x1, y2, ...) address 1-based indices regardless of
/// letter; bare letters are assigned indices in order of first appearance.
/// Mixing the two styles is rejected. The variable count is the largest
/// index seen, or `nvars` when given (must cover every index used).
Polynomial parse_polynomial(const std::string& text, std::size_t nvars = 0);

/// Single monomial, e.g. "x1^2" or "x1x2"; coefficient must be 1.
Monomial parse_monomial(const std::string& text, std::size_t nvars);

}  // namespace kreg

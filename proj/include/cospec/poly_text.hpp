#pragma once

#include <string>
#include <string_view>

#include "cospec/polynomial.hpp"

namespace cospec {

/// Descending terms, e.g. "x^4 - 2x^2 + 1"; the zero polynomial prints as "0".
std::string to_expanded_string(const IntPolynomial& p);
/// e.g. "x^3(x + 1)^2(x^3 - 2x^2 - 7x + 8)"; an empty product prints as "1".
std::string to_factored_string(const FactoredPoly& f);

/// Parses integer polynomials in x written with + - * ^, parentheses and
/// implicit multiplication. Accepts both printed forms.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace cospec

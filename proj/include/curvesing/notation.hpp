#pragma once

#include "curvesing/germ.hpp"

#include <string>

namespace curvesing {

/// Parses germ notation: branches "(e1,e2,...)" joined by "+", where a
/// component is a positive exponent e (meaning t^e), "-" (zero), or a
/// polynomial in t with rational coefficients such as "t^3+1/2t^4".
MultiGerm parse_germ(const std::string& text);

/// Canonical text: exponent form when every component is a bare monomial,
/// otherwise polynomial form.
std::string format_germ(const MultiGerm& g);

/// Polynomial in t with rational coefficients.
QPoly parse_tpoly(const std::string& text);

}  // namespace curvesing

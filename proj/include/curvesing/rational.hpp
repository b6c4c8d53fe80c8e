#pragma once

#include <gmpxx.h>

#include <string>

namespace curvesing {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; result is canonicalized.
Rational parse_rational(const std::string& text);

}  // namespace curvesing

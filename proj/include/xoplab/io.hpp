#pragma once

#include <string>

#include "xoplab/poly.hpp"

namespace xoplab {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Human-readable polynomial, highest degree first: "128 x^3 + 192 x".
std::string format_poly_text(const PolyQ& p);
std::string format_poly_text(const PolyC& p);

// Exact coefficient list "c0,c1,..." with rationals as p/q.
std::string format_poly_csv(const PolyQ& p);

// Parses "p", "p/q", or a decimal like "1.5" (exactly, as 15/10).
Rational parse_rational(const std::string& s);

// Parses "a", "a,b", or "a+bi" into a complex point.
Complex parse_complex(const std::string& s);

}  // namespace xoplab

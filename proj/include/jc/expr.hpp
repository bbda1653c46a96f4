#pragma once
// Polynomial expressions over Q(zeta_n): "y^2 - x^3", "3x(y - 2x)", "z3^2 + 1/2".
// Grammar: sums of products of powers of atoms; atoms are rational
// literals, x, y, z<n> (a primitive n-th root of unity) and parentheses.
// Juxtaposition multiplies; '/' divides by a nonzero constant.

#include <string>

#include "jc/bipoly.hpp"

namespace jc {

// InputError with the column on malformed input.
BiPoly parse_poly(const std::string& text);
// Expression without x and y.
Scalar parse_scalar(const std::string& text);

}  // namespace jc

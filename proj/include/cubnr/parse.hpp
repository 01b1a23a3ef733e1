#ifndef CUBNR_PARSE_HPP
#define CUBNR_PARSE_HPP

#include <cubnr/hpoly.hpp>

#include <string>

namespace cubnr {

// Parses the polynomial expression grammar:
//   integer and rational literals (3, -2/5), declared variable names,
//   binary + - *, ^ with nonnegative integer exponent, parentheses,
//   a leading unary minus. Implicit multiplication is a parse error.
// Verifies homogeneity; throws Failure(Input, "PARSE_ERROR") with a
// character position, or "NOT_HOMOGENEOUS".
HPoly parse_poly(const std::string& expr, const VarSet& vars);

}  // namespace cubnr

#endif

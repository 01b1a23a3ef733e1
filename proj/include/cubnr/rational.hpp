#ifndef CUBNR_RATIONAL_HPP
#define CUBNR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cubnr {

// Arbitrary-precision exact arithmetic. cpp_rational keeps values reduced
// with positive denominator, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

// "3", "-2/5"
std::string rat_to_string(const Rational& r);

// Strict parse of an integer or integer/integer literal; throws Failure(Input).
Rational rat_from_string(const std::string& s);

}  // namespace cubnr

#endif

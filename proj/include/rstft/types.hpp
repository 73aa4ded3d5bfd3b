#ifndef RSTFT_TYPES_HPP
#define RSTFT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rstft {

// All group/matrix arithmetic is exact. cpp_int never overflows;
// cpp_rational keeps TFT values exact (they are powers of rationals).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// g = gcd(a,b) >= 0 together with Bezout coefficients g = x*a + y*b.
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y);

// base^e for integer e of either sign; base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, long long e);

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

}  // namespace rstft

#endif

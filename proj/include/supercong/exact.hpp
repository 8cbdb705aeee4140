#pragma once

// Exact integer and rational arithmetic: the trusted oracle substrate.
//
// Integer is an arbitrary-precision signed integer, Rational an exact
// fraction kept in lowest terms with a positive denominator after every
// operation. Everything downstream that claims to be "exact" bottoms out
// here; there is no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supercong {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// n! by plain iterative product.
inline Integer factorial(std::uint64_t n) {
    Integer acc = 1;
    for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// Binomial coefficient, total on all integer pairs:
//   b < 0  -> 0
//   b >= 0 -> a(a-1)...(a-b+1) / b!   (falling factorial)
// For 0 <= b <= a this is the ordinary binomial, for 0 <= a < b it is 0,
// and for a < 0 it follows the generalized definition. Every prefix of the
// product divided by the matching prefix factorial is itself a binomial,
// so the running division below is always exact.
inline Integer binomial(const Integer& a, const Integer& b) {
    if (b < 0) return 0;
    Integer acc = 1;
    Integer top = a;
    for (Integer i = 1; i <= b; ++i, --top) {
        acc *= top;
        acc /= i;
    }
    return acc;
}

inline Integer binomial(std::int64_t a, std::int64_t b) {
    return binomial(Integer(a), Integer(b));
}

/// (4k)! / k!^4, the weight appearing in the 20k+3 and 7k+1 series.
/// Equals binomial(4k,2k) * binomial(2k,k)^2.
inline Integer multinomial4(std::uint64_t k) {
    Integer f  = factorial(k);
    Integer f2 = f * f;
    return factorial(4 * k) / (f2 * f2);
}

/// num/den as an exact rational; accepts a negative denominator.
inline Rational make_rational(Integer num, Integer den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Integer pow_integer(Integer base, std::uint64_t exp) {
    Integer acc = 1;
    while (exp != 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

/// Exact rational power; negative exponents invert the base.
inline Rational pow_rational(const Rational& base, std::int64_t exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("pow_rational: zero base with negative exponent");
        return Rational(0);
    }
    const std::uint64_t mag = exp < 0 ? -static_cast<std::uint64_t>(exp) : static_cast<std::uint64_t>(exp);
    Integer n = pow_integer(numerator(base), mag);
    Integer d = pow_integer(denominator(base), mag);
    if (exp < 0) std::swap(n, d);
    return make_rational(std::move(n), std::move(d));
}

/// "num/den" in lowest terms; integers print without the "/1".
inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace supercong

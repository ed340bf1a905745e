#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kernelforge {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend. Equality is structural on (num, den).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

double to_double(const Rational& q);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p/q", "p", and terminating decimals such as "0.5" (read exactly).
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

/// Exact binomial coefficient; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Rising factorial (s)_k = s(s+1)...(s+k-1); 1 for k = 0.
Rational rising_factorial(const Rational& s, unsigned k);
double rising_factorial(double s, unsigned k);

Rational pow_rational(const Rational& base, unsigned exp);

}  // namespace kernelforge

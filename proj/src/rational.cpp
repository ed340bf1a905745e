#include "kernelforge/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace kernelforge {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

namespace {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt n = parse_bigint(text.substr(0, slash));
    BigInt d = parse_bigint(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(parse_bigint(whole));
    bool negative = !whole.empty() && whole[0] == '-';
    BigInt w = whole.empty() || whole == "-" || whole == "+" ? BigInt(0) : parse_bigint(whole);
    BigInt f = parse_bigint(frac);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = boost::multiprecision::abs(w) * scale + f;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_bigint(text));
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact at every step
  }
  return r;
}

Rational rising_factorial(const Rational& s, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= s + i;
  return r;
}

double rising_factorial(double s, unsigned k) {
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= s + i;
  return r;
}

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational r = 1;
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace kernelforge

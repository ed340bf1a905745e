#include "kernelforge/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace kernelforge {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

RationalPolynomial RationalPolynomial::constant(Rational c) {
  return RationalPolynomial({std::move(c)});
}

RationalPolynomial RationalPolynomial::variable() {
  return RationalPolynomial({Rational(0), Rational(1)});
}

void RationalPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::eval_real(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::scale_argument(const Rational& mu) const {
  std::vector<Rational> out(coeffs_.size());
  Rational p = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * p;
    p *= mu;
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  strip();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
  a += b;
  return a;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, RationalPolynomial p) {
  p *= c;
  return p;
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Rational& c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational a = boost::multiprecision::abs(c);
    bool show_coeff = (a != 1) || d == 0;
    if (show_coeff) out += kernelforge::to_string(a);
    if (d > 0) {
      if (show_coeff) out += " ";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

FactorizedPoly::FactorizedPoly(std::vector<RisingFactor> factors) : factors_(std::move(factors)) {}

unsigned FactorizedPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.length;
  return d;
}

RationalPolynomial FactorizedPoly::expand() const {
  RationalPolynomial p = RationalPolynomial::constant(1);
  const RationalPolynomial s = RationalPolynomial::variable();
  for (const auto& f : factors_)
    for (unsigned i = 0; i < f.length; ++i) p = p * (s + RationalPolynomial::constant(f.shift + i));
  return p;
}

Rational FactorizedPoly::eval(const Rational& x) const {
  Rational r = 1;
  for (const auto& f : factors_) r *= rising_factorial(x + f.shift, f.length);
  return r;
}

double FactorizedPoly::eval_real(double x) const {
  double r = 1.0;
  for (const auto& f : factors_) r *= rising_factorial(x + to_double(f.shift), f.length);
  return r;
}

std::string FactorizedPoly::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " ";
    out += "(s+" + kernelforge::to_string(f.shift) + ")_" + std::to_string(f.length);
  }
  return out;
}

std::string FactorizedPoly::to_latex() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    std::string shift = denominator(f.shift) == 1
                            ? numerator(f.shift).str()
                            : "\\frac{" + numerator(f.shift).str() + "}{" + denominator(f.shift).str() + "}";
    out += "(s+" + shift + ")_{" + std::to_string(f.length) + "}";
  }
  return out;
}

namespace {

// Basis element B_j(k) = (k+1)_j / j! as an exact polynomial value.
Rational basis_value(unsigned j, const Rational& k) {
  return rising_factorial(k + 1, j) / Rational(factorial(j));
}

}  // namespace

std::vector<Rational> binomial_basis_decompose(const RationalPolynomial& q) {
  const int deg = q.degree() < 0 ? 0 : q.degree();
  const std::size_t n = static_cast<std::size_t>(deg);

  // Values v_i = q(i), then in-place forward differences: w_k = Delta^k q(0).
  std::vector<Rational> w(n + 1);
  for (std::size_t i = 0; i <= n; ++i) w[i] = q.eval(Rational(i));
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) w[i] -= w[i - 1];

  // The evaluation matrix B_j(i) = C(i+j, j) factors as LU with
  // L[i][k] = C(i,k) and U[k][j] = C(j,k); differencing applied L^-1,
  // back-substitution on the unitriangular U finishes the solve.
  std::vector<Rational> c(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) {
    Rational acc = w[k];
    for (std::size_t j = k + 1; j <= n; ++j) acc -= Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(k))) * c[j];
    c[k] = acc;
  }

  // Postcondition check beyond the interpolation nodes.
  for (unsigned k = static_cast<unsigned>(n) + 1; k <= static_cast<unsigned>(n) + 2; ++k) {
    Rational lhs = 0;
    for (std::size_t j = 0; j <= n; ++j) lhs += c[j] * basis_value(static_cast<unsigned>(j), Rational(k));
    if (lhs != q.eval(Rational(k)))
      throw std::logic_error("binomial_basis_decompose: verification failed at k=" + std::to_string(k));
  }
  return c;
}

RationalPolynomial binomial_basis_synthesize(std::span<const Rational> c) {
  RationalPolynomial out;
  RationalPolynomial basis = RationalPolynomial::constant(1);  // B_0
  const RationalPolynomial k = RationalPolynomial::variable();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) {
      // B_j = B_{j-1} * (k+j) / j
      basis = basis * (k + RationalPolynomial::constant(Rational(j)));
      basis *= Rational(1, j);
    }
    out += c[j] * basis;
  }
  return out;
}

}  // namespace kernelforge

#pragma once

#include "kernelforge/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace kernelforge {

/// Univariate polynomial over Rational. Coefficients are stored by degree
/// with trailing zeros stripped; the zero polynomial has no coefficients
/// and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(Rational c);
  static RationalPolynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;

  /// Horner evaluation, exact.
  Rational eval(const Rational& x) const;
  double eval_real(double x) const;

  /// p(mu * k) as a polynomial in k.
  RationalPolynomial scale_argument(const Rational& mu) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial p);

  bool operator==(const RationalPolynomial&) const = default;

  std::string to_string(std::string_view var = "s") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

/// One rising-factorial factor (s + shift)_length.
struct RisingFactor {
  Rational shift;
  unsigned length = 0;
  bool operator==(const RisingFactor&) const = default;
};

/// Product of rising factorials prod_i (s + shift_i)_{length_i}.
class FactorizedPoly {
 public:
  FactorizedPoly() = default;
  explicit FactorizedPoly(std::vector<RisingFactor> factors);

  const std::vector<RisingFactor>& factors() const { return factors_; }
  unsigned total_degree() const;

  /// Exact coefficient expansion of the product. Empty product expands to 1.
  RationalPolynomial expand() const;

  Rational eval(const Rational& x) const;
  double eval_real(double x) const;

  /// "(s+1)_2 (s+3/2)_1"
  std::string to_string() const;
  /// "(s+1)_{2}(s+\frac{3}{2})_{1}"
  std::string to_latex() const;

  bool operator==(const FactorizedPoly&) const = default;

 private:
  std::vector<RisingFactor> factors_;
};

/// Coefficients c_j with q(k) = sum_j c_j (k+1)_j / j!, j = 0..deg q.
/// Solved exactly from the values q(0..deg q): the finite differences of the
/// value sequence reduce the system to a unitriangular back-substitution.
/// The result is re-verified at k = deg q + 1 and deg q + 2.
std::vector<Rational> binomial_basis_decompose(const RationalPolynomial& q);

/// Inverse of the decomposition: sum_j c_j (k+1)_j / j! as a polynomial in k.
RationalPolynomial binomial_basis_synthesize(std::span<const Rational> c);

}  // namespace kernelforge

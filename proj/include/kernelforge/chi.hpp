#pragma once

#include "kernelforge/domains.hpp"
#include "kernelforge/polynomial.hpp"

namespace kernelforge {

/// The degree-n polynomial controlling weighted Bergman normalizations,
/// kept both as a product of rising factorials and fully expanded. The two
/// constructions (invariant-based product and per-type table) are compared
/// coefficient by coefficient at build time.
struct ChiPolynomial {
  DomainType domain;
  FactorizedPoly factored;
  RationalPolynomial expanded;
};

ChiPolynomial chi_polynomial(const DomainType& d);

/// chi(0)/chi(s): the normalized moment integral of the generic norm,
/// exact for rational s. Requires s > -1.
Rational hua_ratio(const DomainType& d, const Rational& s);
double hua_ratio(const DomainType& d, double s);

}  // namespace kernelforge

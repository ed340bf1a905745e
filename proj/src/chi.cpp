#include "kernelforge/chi.hpp"

#include <stdexcept>

namespace kernelforge {

namespace {

// Product over j = 1..r of (s + 1 + (j-1) a/2)_{1 + b + (r-j) a}.
FactorizedPoly chi_from_invariants(const Invariants& v) {
  std::vector<RisingFactor> factors;
  factors.reserve(v.rank);
  for (int j = 1; j <= v.rank; ++j) {
    Rational shift = 1 + Rational(v.a) * (j - 1) / 2;
    unsigned length = static_cast<unsigned>(1 + v.b + (v.rank - j) * v.a);
    factors.push_back({shift, length});
  }
  return FactorizedPoly(std::move(factors));
}

// Per-type closed tables.
FactorizedPoly chi_table(const DomainType& d) {
  std::vector<RisingFactor> factors;
  switch (d.kind()) {
    case DomainKind::type_i:
      for (int j = 1; j <= d.m(); ++j) factors.push_back({Rational(j), static_cast<unsigned>(d.n())});
      break;
    case DomainKind::type_ii: {
      int p = d.n() / 2;
      unsigned len = static_cast<unsigned>(d.n() % 2 == 0 ? 2 * p - 1 : 2 * p + 1);
      for (int j = 1; j <= p; ++j) factors.push_back({Rational(2 * j - 1), len});
      break;
    }
    case DomainKind::type_iii:
      for (int j = 1; j <= d.n(); ++j)
        factors.push_back({Rational(j + 1, 2), static_cast<unsigned>(1 + d.n() - j)});
      break;
    case DomainKind::type_iv:
      factors.push_back({Rational(1), static_cast<unsigned>(d.n() - 1)});
      factors.push_back({Rational(d.n(), 2), 1});
      break;
    case DomainKind::type_v:
      factors.push_back({Rational(1), 8});
      factors.push_back({Rational(4), 8});
      break;
    case DomainKind::type_vi:
      factors.push_back({Rational(1), 9});
      factors.push_back({Rational(5), 9});
      factors.push_back({Rational(9), 9});
      break;
  }
  return FactorizedPoly(std::move(factors));
}

}  // namespace

ChiPolynomial chi_polynomial(const DomainType& d) {
  const Invariants v = invariants(d);
  FactorizedPoly table = chi_table(d);
  RationalPolynomial expanded = table.expand();

  // The invariant-based product must expand to the same polynomial.
  if (chi_from_invariants(v).expand() != expanded)
    throw std::logic_error("chi constructions disagree for " + d.label());
  if (expanded.degree() != v.dim)
    throw std::logic_error("deg chi != dim for " + d.label());

  return ChiPolynomial{d, std::move(table), std::move(expanded)};
}

Rational hua_ratio(const DomainType& d, const Rational& s) {
  if (s <= -1) throw std::domain_error("hua_ratio requires s > -1");
  const ChiPolynomial chi = chi_polynomial(d);
  return chi.factored.eval(Rational(0)) / chi.factored.eval(s);
}

double hua_ratio(const DomainType& d, double s) {
  if (s <= -1.0) throw std::domain_error("hua_ratio requires s > -1");
  const ChiPolynomial chi = chi_polynomial(d);
  return chi.factored.eval_real(0.0) / chi.factored.eval_real(s);
}

}  // namespace kernelforge

#pragma once

#include "kernelforge/kernels.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kernelforge {

/// Batched Monte Carlo estimate; reproducible from the seed.
struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double acceptance_rate = 0.0;
  /// Set for s in (-1, 0): the integrand is unbounded at the boundary and
  /// the batch stderr may understate the true error.
  bool boundary_sensitive = false;
};

/// Estimates the normalized moment integral of N(z,z)^s over the domain
/// (the Lebesgue/omega Jacobian constants cancel in the ratio). Requires
/// s > -1 and a classical type I-IV.
McEstimate mc_hua(const DomainType& d, double s, std::size_t samples, std::uint64_t seed);

struct SelbergParams {
  double x = 1.0;
  double y = 1.0;
  double z = 1.0;
  int n = 1;
};

/// Closed product formula for the Selberg integral, via log-gamma.
/// Conservatively requires x, y, z > 0.
double selberg_value(const SelbergParams& p);

/// Result of one verification check. Serializes to JSON with fields
/// name/params/expected/observed/tolerance/pass.
struct Report {
  std::string name;
  nlohmann::json params;
  nlohmann::json expected;
  nlohmann::json observed;
  double tolerance = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

/// Checks the reproducing property of the weighted disk kernel on monomials
/// w^d, d = 0..degree_max, by polar quadrature at three base points.
Report check_reproducing_disk(const Rational& mu, int degree_max);

/// Checks that the inflated kernel of (I_{1,n}, mu = 1) with an m-fiber
/// matches the closed ball-kernel form C(n+m, m) (1-|z|^2-|Z|^2)^{-(n+m+1)}
/// at 100 random interior points.
Report check_inflation_ball(int n, int m, std::uint64_t seed = 20240817);

/// Truncated-series versus closed-form comparison for the generating
/// function and its scaled derivatives. With FExponent::paper_literal the
/// check is expected to fail; that failure is the regression guard for the
/// exponent convention.
Report check_series_vs_closed(const DomainType& d, const Rational& mu,
                              const std::vector<double>& t_list, const std::vector<int>& m_list,
                              FExponent exponent = FExponent::corrected, double tol = 1e-9);

/// Circle-average projection versus exact expectations and versus the
/// ball-kernel pairing form evaluated through closed monomial moments.
Report check_homogeneous_projection(int m, double rho);

}  // namespace kernelforge

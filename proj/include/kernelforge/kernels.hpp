#pragma once

#include "kernelforge/chi.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace kernelforge {

/// Exponent convention for the closed form of the generating function
/// F(t) = sum_k (chi(k mu)/chi(0)) t^k written over the basis (1-t)^{-j}.
/// `corrected` uses (1-t)^{-(j+1)}, which is what the series forces;
/// `paper_literal` keeps the exponent -j and exists so the discrepancy can
/// be demonstrated by the verification suite.
enum class FExponent { corrected, paper_literal };

enum class Normalization { ratio_to_unweighted, absolute_exact_volume, absolute_mc_volume };

struct KernelValue {
  std::complex<double> value;
  Normalization normalization;
};

/// Exact coefficients c_j of chi(k mu)/chi(0) = sum_j c_j (k+1)_j / j!.
struct VirtualKernel {
  DomainType domain;
  Rational mu;
  std::vector<Rational> coeffs;  // j = 0..n
};

/// Requires mu >= 0 (negative powers of the generic norm stop being
/// integrable for large k).
VirtualKernel virtual_decomposition(const DomainType& d, const Rational& mu);

/// (1/m!) d^m/dt^m of F at t, |t| < 1.
std::complex<double> f_eval(const VirtualKernel& vk, std::complex<double> t, unsigned m,
                            FExponent exponent = FExponent::corrected);

/// k-th Taylor coefficient of F at 0: sum_j c_j C(k+j, j). Equals
/// chi(k mu)/chi(0) exactly.
Rational recover_weighted_ratio(const VirtualKernel& vk, unsigned k);

/// (chi(mu)/chi(0)) N(z,w)^{-mu}: the weighted kernel relative to the
/// unweighted one. Requires mu > -1 and interior points.
KernelValue weighted_kernel_ratio(const DomainType& d, const Rational& mu,
                                  const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w);

/// N(z,w)^{-g}, absolutely normalized when the omega-volume is known
/// exactly (I_{1,n}), divided by a Monte Carlo volume when one is supplied,
/// and volume-free ("ratio") otherwise.
KernelValue bergman_kernel(const DomainType& d, const Eigen::MatrixXcd& z,
                           const Eigen::MatrixXcd& w, const VolumeEstimate* volume = nullptr);

/// K(z) F(r / N(z,z)^mu) for 0 <= r < N(z,z)^mu.
KernelValue virtual_kernel_value(const DomainType& d, const Rational& mu,
                                 const Eigen::MatrixXcd& z, double r,
                                 const VolumeEstimate* volume = nullptr);

/// Kernel of the m-fiber inflated domain at ((z,Z),(w,W)):
/// K(z,w) f_eval(t, m) N(z,w)^{-mu m} with t = <Z,W> / N(z,w)^mu.
/// m = 0 recovers the virtual kernel itself.
KernelValue inflated_kernel(const DomainType& d, const Rational& mu, unsigned m,
                            const Eigen::MatrixXcd& z, const Eigen::VectorXcd& zfiber,
                            const Eigen::MatrixXcd& w, const Eigen::VectorXcd& wfiber,
                            const VolumeEstimate* volume = nullptr);

/// Hermitian-ball kernel rho^{-2m} (1 - <Z,T>/rho^2)^{-(m+1)} for the
/// radius-rho ball, with the volume form inherited from the unit ball.
std::complex<double> ball_kernel(unsigned m, const Eigen::VectorXcd& z,
                                 const Eigen::VectorXcd& t, double rho = 1.0);

/// Reproducing kernel of the degree-k homogeneous component:
/// rho^{-2m-2k} C(k+m, m) ||Z||^{2k}.
double ball_harmonic(unsigned m, unsigned k, const Eigen::VectorXcd& z, double rho = 1.0);

/// Degree-k component of f at Z via the circle average, using
/// 4 (k + degree_guard) trapezoid nodes; exact for polynomials of degree
/// up to half the node count.
std::complex<double> homogeneous_projection(
    const std::function<std::complex<double>(const Eigen::VectorXcd&)>& f, unsigned k,
    const Eigen::VectorXcd& z, unsigned degree_guard = 16);

}  // namespace kernelforge

#include "kernelforge/kernels.hpp"

#include "kernelforge/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kernelforge {

namespace {

bool same_point(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w) {
  return z.rows() == w.rows() && z.cols() == w.cols() && (z - w).squaredNorm() == 0.0;
}

// N(z,w) with the diagonal shortcut; rejects exterior points and pairs
// where the principal power of N is unavailable.
std::complex<double> checked_norm(const DomainType& d, const Eigen::MatrixXcd& z,
                                  const Eigen::MatrixXcd& w) {
  if (!contains(d, z) || !contains(d, w))
    throw OutsideDomainError("kernel evaluation requires interior points of " + d.label());
  if (same_point(z, w)) return generic_norm_diag(d, z);
  std::complex<double> norm = generic_norm(d, z, w);
  if (norm == 0.0)
    throw SingularKernelError("generic norm vanishes at this point pair");
  if (norm.real() <= 0.0)
    throw BranchAmbiguityError("principal branch of N^{-mu} is undefined: Re N(z,w) <= 0");
  return norm;
}

std::complex<double> complex_int_pow(std::complex<double> base, unsigned e) {
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace

VirtualKernel virtual_decomposition(const DomainType& d, const Rational& mu) {
  if (mu < 0)
    throw std::domain_error("virtual_decomposition requires mu >= 0: the weight N^{k mu} "
                            "is not integrable for large k when mu < 0");
  const ChiPolynomial chi = chi_polynomial(d);
  const Rational chi0 = chi.expanded.coefficient(0);
  RationalPolynomial q = Rational(1) / chi0 * chi.expanded.scale_argument(mu);
  std::vector<Rational> coeffs = binomial_basis_decompose(q);
  coeffs.resize(static_cast<std::size_t>(invariants(d).dim) + 1, Rational(0));
  return VirtualKernel{d, mu, std::move(coeffs)};
}

std::complex<double> f_eval(const VirtualKernel& vk, std::complex<double> t, unsigned m,
                            FExponent exponent) {
  if (std::abs(t) >= 1.0)
    throw DivergenceError("f_eval requires |t| < 1");
  const std::complex<double> u = 1.0 / (1.0 - t);

  std::complex<double> acc = 0.0;
  if (exponent == FExponent::corrected) {
    // (1/m!) d^m/dt^m sum_j c_j (1-t)^{-(j+1)}
    //   = sum_j c_j C(j+m, m) (1-t)^{-(j+1+m)}.
    std::complex<double> upow = complex_int_pow(u, m + 1);
    for (std::size_t j = 0; j < vk.coeffs.size(); ++j) {
      double coeff = to_double(vk.coeffs[j]) *
                     binomial(static_cast<unsigned>(j) + m, m).convert_to<double>();
      acc += coeff * upow;
      upow *= u;
    }
  } else {
    // The uncorrected closed form, exponent -j instead of -(j+1).
    std::complex<double> upow = complex_int_pow(u, m);
    for (std::size_t j = 0; j < vk.coeffs.size(); ++j) {
      double coeff = to_double(vk.coeffs[j]);
      if (m >= 1) coeff *= binomial(static_cast<unsigned>(j) + m - 1, m).convert_to<double>();
      acc += coeff * upow;
      upow *= u;
    }
  }
  return acc;
}

Rational recover_weighted_ratio(const VirtualKernel& vk, unsigned k) {
  Rational acc = 0;
  for (std::size_t j = 0; j < vk.coeffs.size(); ++j)
    acc += vk.coeffs[j] * Rational(binomial(k + static_cast<unsigned>(j), static_cast<unsigned>(j)));
  return acc;
}

KernelValue weighted_kernel_ratio(const DomainType& d, const Rational& mu,
                                  const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w) {
  if (mu <= -1)
    throw std::domain_error("weighted_kernel_ratio requires mu > -1");
  const std::complex<double> norm = checked_norm(d, z, w);
  const ChiPolynomial chi = chi_polynomial(d);
  const double ratio = to_double(chi.factored.eval(mu) / chi.factored.eval(Rational(0)));
  return KernelValue{ratio * std::pow(norm, -to_double(mu)), Normalization::ratio_to_unweighted};
}

KernelValue bergman_kernel(const DomainType& d, const Eigen::MatrixXcd& z,
                           const Eigen::MatrixXcd& w, const VolumeEstimate* volume) {
  const std::complex<double> norm = checked_norm(d, z, w);
  const int genus = invariants(d).genus;
  std::complex<double> value = complex_int_pow(1.0 / norm, static_cast<unsigned>(genus));
  if (volume != nullptr)
    return KernelValue{value / volume->value, Normalization::absolute_mc_volume};
  if (auto vol = exact_volume_omega(d))
    return KernelValue{value / *vol, Normalization::absolute_exact_volume};
  return KernelValue{value, Normalization::ratio_to_unweighted};
}

KernelValue virtual_kernel_value(const DomainType& d, const Rational& mu,
                                 const Eigen::MatrixXcd& z, double r,
                                 const VolumeEstimate* volume) {
  if (r < 0.0) throw std::invalid_argument("virtual_kernel_value requires r >= 0");
  const KernelValue base = bergman_kernel(d, z, z, volume);
  const double norm = generic_norm_diag(d, z);
  const double weight = std::pow(norm, to_double(mu));
  if (r >= weight)
    throw OutsideDomainError("(z, r) lies outside the inflated domain: r >= N(z,z)^mu");
  const VirtualKernel vk = virtual_decomposition(d, mu);
  return KernelValue{base.value * f_eval(vk, r / weight, 0), base.normalization};
}

KernelValue inflated_kernel(const DomainType& d, const Rational& mu, unsigned m,
                            const Eigen::MatrixXcd& z, const Eigen::VectorXcd& zfiber,
                            const Eigen::MatrixXcd& w, const Eigen::VectorXcd& wfiber,
                            const VolumeEstimate* volume) {
  if (zfiber.size() != static_cast<Eigen::Index>(m) || wfiber.size() != static_cast<Eigen::Index>(m))
    throw std::invalid_argument("inflated_kernel: fiber vectors must have length m");

  const double mu_d = to_double(mu);
  if (zfiber.squaredNorm() >= std::pow(generic_norm_diag(d, z), mu_d) ||
      wfiber.squaredNorm() >= std::pow(generic_norm_diag(d, w), mu_d))
    throw OutsideDomainError("fiber point lies outside the inflated domain");

  const KernelValue base = bergman_kernel(d, z, w, volume);
  const std::complex<double> norm = checked_norm(d, z, w);
  const std::complex<double> norm_mu = std::pow(norm, mu_d);

  // <Z,W> linear in the first slot, conjugate in the second.
  std::complex<double> inner = 0.0;
  for (Eigen::Index i = 0; i < zfiber.size(); ++i) inner += zfiber(i) * std::conj(wfiber(i));

  const VirtualKernel vk = virtual_decomposition(d, mu);
  const std::complex<double> t = inner / norm_mu;
  const std::complex<double> deriv = f_eval(vk, t, m);
  return KernelValue{base.value * deriv / complex_int_pow(norm_mu, m), base.normalization};
}

std::complex<double> ball_kernel(unsigned m, const Eigen::VectorXcd& z,
                                 const Eigen::VectorXcd& t, double rho) {
  if (z.size() != static_cast<Eigen::Index>(m) || t.size() != static_cast<Eigen::Index>(m))
    throw std::invalid_argument("ball_kernel: vectors must have length m");
  if (z.norm() >= rho || t.norm() >= rho)
    throw OutsideDomainError("ball_kernel requires interior points");
  std::complex<double> inner = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) inner += z(i) * std::conj(t(i));
  return std::pow(rho, -2.0 * m) * complex_int_pow(1.0 / (1.0 - inner / (rho * rho)), m + 1);
}

double ball_harmonic(unsigned m, unsigned k, const Eigen::VectorXcd& z, double rho) {
  return std::pow(rho, -2.0 * (m + k)) * binomial(k + m, m).convert_to<double>() *
         std::pow(z.squaredNorm(), static_cast<double>(k));
}

std::complex<double> homogeneous_projection(
    const std::function<std::complex<double>(const Eigen::VectorXcd&)>& f, unsigned k,
    const Eigen::VectorXcd& z, unsigned degree_guard) {
  const unsigned nodes = 4 * (k + degree_guard);
  std::complex<double> acc = 0.0;
  for (unsigned j = 0; j < nodes; ++j) {
    double theta = 2.0 * std::numbers::pi * j / nodes;
    std::complex<double> rot(std::cos(theta), std::sin(theta));
    std::complex<double> phase(std::cos(theta * k), -std::sin(theta * k));
    acc += f(rot * z) * phase;
  }
  return acc / static_cast<double>(nodes);
}

}  // namespace kernelforge

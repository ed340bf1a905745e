#include "kernelforge/verify.hpp"

#include "kernelforge/rng.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kernelforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Gauss-Legendre nodes/weights on [a, b]; zeros from boost, weights from
// the derivative formula w = 2 / ((1-x^2) P_n'(x)^2).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(unsigned order, double a, double b) {
  std::vector<double> half = boost::math::legendre_p_zeros<double>(static_cast<int>(order));
  GaussRule rule;
  rule.nodes.reserve(order);
  rule.weights.reserve(order);
  auto push = [&](double x) {
    double dp = boost::math::legendre_p_prime(static_cast<int>(order), x);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes.push_back(0.5 * (b - a) * x + 0.5 * (a + b));
    rule.weights.push_back(0.5 * (b - a) * w);
  };
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    if (*it > 0.0) push(-*it);
  for (double x : half) push(x);
  return rule;
}

}  // namespace

McEstimate mc_hua(const DomainType& d, double s, std::size_t samples, std::uint64_t seed) {
  if (s <= -1.0) throw std::domain_error("mc_hua requires s > -1");
  if (samples == 0) throw std::invalid_argument("mc_hua requires samples > 0");

  const std::size_t batches = std::min<std::size_t>(100, samples);
  std::vector<double> batch_means;
  batch_means.reserve(batches);

  std::size_t assigned = 0;
  std::size_t total_proposals = 0;
  for (std::size_t b = 0; b < batches; ++b) {
    std::size_t batch_size = samples / batches + (b < samples % batches ? 1 : 0);
    if (batch_size == 0) continue;
    assigned += batch_size;

    double sum = 0.0;
    double rate = sample_visit(d, splitmix64(seed + 0x9e37 * b + b), batch_size,
                               [&](const Eigen::MatrixXcd& x) {
                                 sum += std::pow(generic_norm_diag(d, x), s);
                               });
    batch_means.push_back(sum / static_cast<double>(batch_size));
    total_proposals += static_cast<std::size_t>(std::llround(batch_size / rate));
  }

  McEstimate est;
  est.samples = assigned;
  est.seed = seed;
  est.boundary_sensitive = s < 0.0;
  est.acceptance_rate = static_cast<double>(assigned) / static_cast<double>(total_proposals);

  const std::size_t nb = batch_means.size();
  for (double m : batch_means) est.mean += m;
  est.mean /= static_cast<double>(nb);
  if (nb > 1) {
    double var = 0.0;
    for (double m : batch_means) var += (m - est.mean) * (m - est.mean);
    est.stderr_ = std::sqrt(var / (static_cast<double>(nb) * (static_cast<double>(nb) - 1.0)));
  }
  return est;
}

double selberg_value(const SelbergParams& p) {
  if (p.n < 1) throw std::domain_error("selberg_value requires n >= 1");
  if (!(p.x > 0.0) || !(p.y > 0.0) || !(p.z > 0.0))
    throw std::domain_error("selberg_value requires x, y, z > 0");
  double log_acc = 0.0;
  for (int j = 1; j <= p.n; ++j) {
    log_acc += std::lgamma(p.x + (j - 1) * p.z);
    log_acc += std::lgamma(p.y + (j - 1) * p.z);
    log_acc += std::lgamma(j * p.z + 1.0);
    log_acc -= std::lgamma(p.x + p.y + (p.n + j - 2) * p.z);
    log_acc -= std::lgamma(p.z + 1.0);
  }
  return std::exp(log_acc);
}

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"name", name},     {"params", params},       {"expected", expected},
                        {"observed", observed}, {"tolerance", tolerance}, {"pass", pass}};
}

Report check_reproducing_disk(const Rational& mu, int degree_max) {
  if (mu <= -1) throw std::domain_error("check_reproducing_disk requires mu > -1");
  const DomainType disk = DomainType::type_i(1, 1);
  const double mu_d = to_double(mu);
  const std::vector<std::complex<double>> base_points = {
      {0.0, 0.0}, {0.3, 0.0}, {0.5, 0.2}};

  auto run = [&](unsigned radial_order, unsigned angular_nodes) {
    GaussRule radial = gauss_legendre(radial_order, 0.0, 1.0);
    double max_err = 0.0;
    for (const auto& z0 : base_points) {
      Eigen::MatrixXcd zm(1, 1);
      zm(0, 0) = z0;
      for (int deg = 0; deg <= degree_max; ++deg) {
        std::complex<double> integral = 0.0;
        for (std::size_t ri = 0; ri < radial.nodes.size(); ++ri) {
          const double rho = radial.nodes[ri];
          const double wr = radial.weights[ri] * rho;
          std::complex<double> angular = 0.0;
          for (unsigned ai = 0; ai < angular_nodes; ++ai) {
            double theta = kTwoPi * ai / angular_nodes;
            std::complex<double> w(rho * std::cos(theta), rho * std::sin(theta));
            Eigen::MatrixXcd wm(1, 1);
            wm(0, 0) = w;
            std::complex<double> kernel = weighted_kernel_ratio(disk, mu, zm, wm).value *
                                          bergman_kernel(disk, zm, wm).value;
            angular += kernel * std::pow(w, deg) * std::pow(1.0 - rho * rho, mu_d);
          }
          integral += wr * angular * (kTwoPi / angular_nodes);
        }
        integral /= std::numbers::pi;  // omega = dA / pi on the disk
        max_err = std::max(max_err, std::abs(integral - std::pow(z0, deg)));
      }
    }
    return max_err;
  };

  double err = run(64, 128);
  const double tol = 1e-8;
  if (err > tol) err = run(128, 256);

  Report rep;
  rep.name = "reproducing-disk";
  rep.params = {{"mu", to_string(mu)}, {"degree_max", degree_max}};
  rep.expected = "max |quadrature - f(z0)| <= tolerance";
  rep.observed = err;
  rep.tolerance = tol;
  rep.pass = err <= tol;
  return rep;
}

Report check_inflation_ball(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("check_inflation_ball requires n, m >= 1");
  const DomainType ball = DomainType::type_i(1, n);
  const Rational mu = 1;
  const int total = n + m;
  UniformSource rng(seed);

  double max_rel = 0.0;
  for (int pt = 0; pt < 100; ++pt) {
    // Uniform direction in C^{n+m}, radius capped away from the boundary.
    Eigen::VectorXcd v(total);
    for (int i = 0; i < total; ++i) v(i) = std::complex<double>(rng.normal(), rng.normal());
    double radius = 0.9 * std::pow(rng.unit(), 1.0 / (2.0 * total));
    v *= radius / v.norm();

    Eigen::MatrixXcd z = v.head(n).transpose();
    Eigen::VectorXcd fiber = v.tail(m);

    double lhs = inflated_kernel(ball, mu, static_cast<unsigned>(m), z, fiber, z, fiber)
                     .value.real();
    double rhs = binomial(static_cast<unsigned>(total), static_cast<unsigned>(m)).convert_to<double>() *
                 std::pow(1.0 - v.squaredNorm(), -(total + 1.0));
    max_rel = std::max(max_rel, std::abs(lhs - rhs) / rhs);
  }

  Report rep;
  rep.name = "inflation-ball";
  rep.params = {{"n", n}, {"m", m}, {"seed", seed}, {"points", 100}};
  rep.expected = "inflated kernel = C(n+m,m) (1-|z|^2-|Z|^2)^{-(n+m+1)}";
  rep.observed = max_rel;
  rep.tolerance = 1e-12;
  rep.pass = max_rel <= rep.tolerance;
  return rep;
}

Report check_series_vs_closed(const DomainType& d, const Rational& mu,
                              const std::vector<double>& t_list, const std::vector<int>& m_list,
                              FExponent exponent, double tol) {
  const ChiPolynomial chi = chi_polynomial(d);
  const Rational chi0 = chi.expanded.coefficient(0);
  const RationalPolynomial q = Rational(1) / chi0 * chi.expanded.scale_argument(mu);
  const int n = std::max(q.degree(), 0);

  double coeff_sum = 0.0;
  for (const auto& c : q.coefficients()) coeff_sum += std::abs(to_double(c));
  coeff_sum = std::max(coeff_sum, 1.0);

  const VirtualKernel vk = virtual_decomposition(d, mu);

  double max_diff = 0.0;
  for (double t : t_list) {
    if (!(std::abs(t) < 1.0)) throw DivergenceError("check_series_vs_closed requires |t| < 1");
    for (int m : m_list) {
      // Truncated series sum_k C(k+m, m) q(k+m) t^k with a geometric tail
      // bound |term| <= coeff_sum (k+m)^{n+m} t^k / m!.
      double series = 0.0;
      double tpow = 1.0;
      const double ratio_cap = 0.5 * (1.0 + std::abs(t));
      for (int k = 0;; ++k) {
        double term = binomial(static_cast<unsigned>(k + m), static_cast<unsigned>(m)).convert_to<double>() *
                      q.eval_real(static_cast<double>(k + m)) * tpow;
        series += term;
        double bound = coeff_sum * std::pow(k + m + 1.0, n + m) * tpow;
        double growth = std::pow((k + m + 2.0) / (k + m + 1.0), n + m) * std::abs(t);
        if (k > n + m && growth < ratio_cap && bound * growth / (1.0 - ratio_cap) < 1e-12) break;
        if (k > 200000) throw std::logic_error("series truncation failed to converge");
        tpow *= t;
      }
      double closed = f_eval(vk, t, static_cast<unsigned>(m), exponent).real();
      max_diff = std::max(max_diff, std::abs(series - closed));
    }
  }

  Report rep;
  rep.name = "series-vs-closed";
  rep.params = {{"type", d.label()},
                {"mu", to_string(mu)},
                {"t", t_list},
                {"m", m_list},
                {"exponent", exponent == FExponent::corrected ? "corrected" : "paper-literal"}};
  rep.expected = "max |series - closed| <= tolerance";
  rep.observed = max_diff;
  rep.tolerance = tol;
  rep.pass = max_diff <= tol;
  return rep;
}

namespace {

// Multi-indices of total degree k in m variables.
void enumerate_multi_indices(int m, int k, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (m == 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= k; ++i) {
    cur.push_back(i);
    enumerate_multi_indices(m - 1, k - i, cur, out);
    cur.pop_back();
  }
}

double multi_factorial(const std::vector<int>& alpha) {
  double r = 1.0;
  for (int a : alpha) r *= factorial(static_cast<unsigned>(a)).convert_to<double>();
  return r;
}

std::complex<double> monomial(const Eigen::VectorXcd& z, const std::vector<int>& alpha) {
  std::complex<double> r = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int p = 0; p < alpha[i]; ++p) r *= z(static_cast<Eigen::Index>(i));
  return r;
}

// Exact moment over the radius-rho ball w.r.t. the unit-ball volume form:
// integral of W^beta conj(W)^alpha is 0 unless alpha = beta, where it is
// rho^{2m+2|beta|} m! beta! / (m+|beta|)!.
double ball_moment(int m, const std::vector<int>& beta, double rho) {
  int k = 0;
  for (int b : beta) k += b;
  return std::pow(rho, 2.0 * (m + k)) * factorial(static_cast<unsigned>(m)).convert_to<double>() *
         multi_factorial(beta) / factorial(static_cast<unsigned>(m + k)).convert_to<double>();
}

// The pairing form of the degree-k projection applied to the monomial
// W^beta, evaluated through the exact moments: the rho powers and binomial
// prefactor must cancel to reproduce Z^beta (or 0 when k != |beta|).
std::complex<double> pairing_projection_monomial(int m, int k, const std::vector<int>& beta,
                                                 const Eigen::VectorXcd& z, double rho) {
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur;
  enumerate_multi_indices(m, k, cur, alphas);

  int beta_total = 0;
  for (int b : beta) beta_total += b;

  const double prefactor = std::pow(rho, -2.0 * (m + k)) *
                           binomial(static_cast<unsigned>(k + m), static_cast<unsigned>(m)).convert_to<double>();
  const double k_fact = factorial(static_cast<unsigned>(k)).convert_to<double>();

  std::complex<double> acc = 0.0;
  for (const auto& alpha : alphas) {
    if (alpha != beta || k != beta_total) continue;  // moment vanishes
    acc += (k_fact / multi_factorial(alpha)) * monomial(z, alpha) * ball_moment(m, beta, rho);
  }
  return prefactor * acc;
}

}  // namespace

Report check_homogeneous_projection(int m, double rho) {
  if (m < 1 || !(rho > 0.0)) throw std::invalid_argument("check_homogeneous_projection needs m >= 1, rho > 0");

  Eigen::VectorXcd z(m);
  for (int i = 0; i < m; ++i)
    z(i) = std::complex<double>(0.3 + 0.05 * i, -0.2 + 0.04 * i);

  double max_err = 0.0;
  auto record = [&](std::complex<double> got, std::complex<double> want) {
    max_err = std::max(max_err, std::abs(got - want));
  };

  // Fourier orthogonality on constants.
  auto one = [](const Eigen::VectorXcd&) { return std::complex<double>(1.0); };
  record(homogeneous_projection(one, 0, z), 1.0);
  record(homogeneous_projection(one, 1, z), 0.0);

  // Degree selection on small polynomials.
  if (m == 1) {
    auto f = [](const Eigen::VectorXcd& w) { return w(0) + w(0) * w(0); };
    record(homogeneous_projection(f, 2, z), z(0) * z(0));
    record(homogeneous_projection(f, 1, z), z(0));
  } else {
    auto f = [](const Eigen::VectorXcd& w) { return w(0) * w(1); };
    record(homogeneous_projection(f, 2, z), z(0) * z(1));
    record(homogeneous_projection(f, 1, z), 0.0);
  }

  // Analytic non-polynomial: geometric series coefficients.
  auto geom = [](const Eigen::VectorXcd& w) { return 1.0 / (1.0 - w(0)); };
  record(homogeneous_projection(geom, 4, z), std::pow(z(0), 4));

  // Pairing form with exact ball moments versus the circle average,
  // exercising the rho^{-2m-2k} prefactor.
  std::vector<int> beta(m, 0);
  beta[0] = 1;
  if (m >= 2) beta[1] = 1;
  int k = 0;
  for (int b : beta) k += b;
  auto fmono = [&](const Eigen::VectorXcd& w) { return monomial(w, beta); };
  std::complex<double> via_pairing = pairing_projection_monomial(m, k, beta, z, rho);
  std::complex<double> via_circle = homogeneous_projection(fmono, static_cast<unsigned>(k), z);
  record(via_pairing, monomial(z, beta));
  record(via_circle, monomial(z, beta));
  record(pairing_projection_monomial(m, k + 1, beta, z, rho), 0.0);

  Report rep;
  rep.name = "homogeneous-projection";
  rep.params = {{"m", m}, {"rho", rho}};
  rep.expected = "projection matches exact components and moment pairing";
  rep.observed = max_err;
  rep.tolerance = 1e-9;
  rep.pass = max_err <= rep.tolerance;
  return rep;
}

}  // namespace kernelforge

#include "kernelforge/domains.hpp"

#include "kernelforge/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kernelforge {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

[[noreturn]] void bad_spec(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

DomainType DomainType::type_i(int m, int n) {
  if (m < 1 || m > n) bad_spec("TypeI requires 1<=m<=n");
  return DomainType(DomainKind::type_i, m, n);
}

DomainType DomainType::type_ii(int n) {
  if (n < 2) bad_spec("TypeII requires n>=2");
  return DomainType(DomainKind::type_ii, 0, n);
}

DomainType DomainType::type_iii(int n) {
  if (n < 1) bad_spec("TypeIII requires n>=1");
  return DomainType(DomainKind::type_iii, 0, n);
}

DomainType DomainType::type_iv(int n) {
  if (n < 3)
    bad_spec("TypeIV requires n>=3 (IV:1 is I:1,1 and IV:2 is a reducible product)");
  return DomainType(DomainKind::type_iv, 0, n);
}

DomainType DomainType::type_v() { return DomainType(DomainKind::type_v, 0, 0); }
DomainType DomainType::type_vi() { return DomainType(DomainKind::type_vi, 0, 0); }

DomainType DomainType::parse(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  auto parse_int = [&](std::string_view t) {
    if (t.empty()) bad_spec("expected integer in type spec: " + std::string(spec));
    for (char ch : t)
      if (ch < '0' || ch > '9') bad_spec("expected integer in type spec: " + std::string(spec));
    return std::stoi(std::string(t));
  };

  if (head == "V" || head == "VI") {
    if (colon != std::string_view::npos) bad_spec("types V/VI take no parameters");
    return head == "V" ? type_v() : type_vi();
  }
  if (head == "I") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) bad_spec("TypeI spec is I:m,n");
    return type_i(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
  }
  if (head == "II") return type_ii(parse_int(args));
  if (head == "III") return type_iii(parse_int(args));
  if (head == "IV") return type_iv(parse_int(args));
  bad_spec("unknown domain type: " + std::string(spec) + " (grammar: I:m,n | II:n | III:n | IV:n | V | VI)");
}

std::string DomainType::label() const {
  switch (kind_) {
    case DomainKind::type_i: return "I:" + std::to_string(m_) + "," + std::to_string(n_);
    case DomainKind::type_ii: return "II:" + std::to_string(n_);
    case DomainKind::type_iii: return "III:" + std::to_string(n_);
    case DomainKind::type_iv: return "IV:" + std::to_string(n_);
    case DomainKind::type_v: return "V";
    case DomainKind::type_vi: return "VI";
  }
  return "?";
}

Invariants invariants(const DomainType& d) {
  Invariants v{};
  int table_dim = 0;
  switch (d.kind()) {
    case DomainKind::type_i:
      v = {d.m(), 2, d.n() - d.m(), d.m() + d.n(), 0};
      table_dim = d.m() * d.n();
      break;
    case DomainKind::type_ii:
      v = {d.n() / 2, 4, d.n() % 2 == 0 ? 0 : 2, 2 * (d.n() - 1), 0};
      table_dim = d.n() * (d.n() - 1) / 2;
      break;
    case DomainKind::type_iii:
      v = {d.n(), 1, 0, d.n() + 1, 0};
      table_dim = d.n() * (d.n() + 1) / 2;
      break;
    case DomainKind::type_iv:
      v = {2, d.n() - 2, 0, d.n(), 0};
      table_dim = d.n();
      break;
    case DomainKind::type_v:
      v = {2, 6, 4, 12, 0};
      table_dim = 16;
      break;
    case DomainKind::type_vi:
      v = {3, 8, 0, 18, 0};
      table_dim = 27;
      break;
  }
  v.dim = v.rank * (1 + v.b) + v.a * v.rank * (v.rank - 1) / 2;
  if (v.dim != table_dim) throw std::logic_error("invariants: dimension cross-check failed for " + d.label());
  if (v.genus != 2 + v.a * (v.rank - 1) + v.b)
    throw std::logic_error("invariants: genus cross-check failed for " + d.label());
  return v;
}

DomainPoint DomainPoint::make(const DomainType& d, Eigen::MatrixXcd data) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("DomainPoint: ") + what + " for " + d.label());
  };
  switch (d.kind()) {
    case DomainKind::type_i:
      require(data.rows() == d.m() && data.cols() == d.n(), "expected m x n matrix");
      break;
    case DomainKind::type_ii:
      require(data.rows() == d.n() && data.cols() == d.n(), "expected n x n matrix");
      for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j <= i; ++j)
          require(data(i, j) == -data(j, i), "matrix must be exactly antisymmetric");
      break;
    case DomainKind::type_iii:
      require(data.rows() == d.n() && data.cols() == d.n(), "expected n x n matrix");
      for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < i; ++j)
          require(data(i, j) == data(j, i), "matrix must be exactly symmetric");
      break;
    case DomainKind::type_iv:
      require(data.rows() == d.n() && data.cols() == 1, "expected n x 1 vector");
      break;
    case DomainKind::type_v:
    case DomainKind::type_vi:
      throw UnsupportedDomainError("points of exceptional types V/VI are not supported");
  }
  return DomainPoint{d, std::move(data)};
}

double spectral_norm(const Eigen::MatrixXcd& x) {
  // Hermitian eigenproblem on the smaller Gram matrix.
  Eigen::MatrixXcd gram = x.rows() <= x.cols() ? Eigen::MatrixXcd(x * x.adjoint())
                                               : Eigen::MatrixXcd(x.adjoint() * x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

namespace {

// Type IV building blocks: q(x) = sum x_i^2 and q(x, conj(x)) = 2 sum |x_i|^2.
std::complex<double> q_form(const Eigen::MatrixXcd& x) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < x.rows(); ++i) s += x(i, 0) * x(i, 0);
  return s;
}

double q_mixed_diag(const Eigen::MatrixXcd& x) { return 2.0 * x.squaredNorm(); }

bool contains_iv(const Eigen::MatrixXcd& x) {
  double qm = q_mixed_diag(x);
  return 1.0 - qm + std::norm(q_form(x)) > 0.0 && 2.0 - qm > 0.0;
}

// Sorted descending sigma^2 of an antisymmetric matrix; they occur in pairs
// (plus a structural zero when n is odd).
std::vector<double> antisym_sigma_sq(const Eigen::MatrixXcd& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x * x.adjoint(), Eigen::EigenvaluesOnly);
  std::vector<double> s2(es.eigenvalues().data(), es.eigenvalues().data() + x.rows());
  std::sort(s2.begin(), s2.end(), std::greater<>());
  return s2;
}

double type_ii_norm_diag(const Eigen::MatrixXcd& x) {
  auto s2 = antisym_sigma_sq(x);
  const double tol = 1e-9 * std::max(1.0, s2.empty() ? 0.0 : s2.front());
  double prod = 1.0;
  std::size_t i = 0;
  for (; i + 1 < s2.size(); i += 2) {
    if (std::abs(s2[i] - s2[i + 1]) > tol)
      throw BranchAmbiguityError("type II singular values failed to pair");
    prod *= 1.0 - 0.5 * (s2[i] + s2[i + 1]);
  }
  if (i < s2.size() && std::abs(s2[i]) > tol)
    throw BranchAmbiguityError("type II odd-dimension leftover singular value is not zero");
  return prod;
}

std::complex<double> type_ii_norm(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(x * y.conjugate(), false);
  std::vector<std::complex<double>> lam(es.eigenvalues().data(), es.eigenvalues().data() + x.rows());

  double scale = 1.0;
  for (auto l : lam) scale = std::max(scale, std::abs(l));
  const double tol = 1e-9 * scale;

  // Pair greedily, largest modulus first; each eigenvalue of x conj(y) has
  // even multiplicity except for one structural zero in odd dimension.
  std::sort(lam.begin(), lam.end(),
            [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  std::vector<bool> used(lam.size(), false);
  std::complex<double> prod = 1.0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (used[i]) continue;
    std::size_t best = lam.size();
    double best_dist = 0.0;
    for (std::size_t j = i + 1; j < lam.size(); ++j) {
      if (used[j]) continue;
      double dist = std::abs(lam[i] - lam[j]);
      if (best == lam.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == lam.size()) {
      // Leftover is only admissible as the odd-dimension zero.
      if (std::abs(lam[i]) > tol)
        throw BranchAmbiguityError("type II eigenvalue left unpaired beyond tolerance");
      continue;
    }
    if (best_dist > tol)
      throw BranchAmbiguityError("type II eigenvalue pairing exceeded tolerance");
    used[i] = used[best] = true;
    prod *= 1.0 + 0.5 * (lam[i] + lam[best]);
  }
  return prod;
}

}  // namespace

bool contains(const DomainType& d, const Eigen::MatrixXcd& x) {
  switch (d.kind()) {
    case DomainKind::type_i:
    case DomainKind::type_ii:
    case DomainKind::type_iii:
      return spectral_norm(x) < 1.0;
    case DomainKind::type_iv:
      return contains_iv(x);
    default:
      throw UnsupportedDomainError("membership test is not available for types V/VI");
  }
}

bool contains(const DomainPoint& p) { return contains(p.domain, p.data); }

std::complex<double> generic_norm(const DomainType& d, const Eigen::MatrixXcd& x,
                                  const Eigen::MatrixXcd& y) {
  switch (d.kind()) {
    case DomainKind::type_i: {
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(d.m(), d.m()) - x * y.adjoint();
      return h.determinant();
    }
    case DomainKind::type_ii:
      return type_ii_norm(x, y);
    case DomainKind::type_iii: {
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(d.n(), d.n()) - x * y.conjugate();
      return h.determinant();
    }
    case DomainKind::type_iv: {
      std::complex<double> q_xy = 0.0;
      for (int i = 0; i < d.n(); ++i) q_xy += x(i, 0) * std::conj(y(i, 0));
      return 1.0 - 2.0 * q_xy + q_form(x) * std::conj(q_form(y));
    }
    default:
      throw UnsupportedDomainError("generic norm is not available for types V/VI");
  }
}

double generic_norm_diag(const DomainType& d, const Eigen::MatrixXcd& x) {
  switch (d.kind()) {
    case DomainKind::type_i:
    case DomainKind::type_iii: {
      // N(x,x) = det(I - x x^H) for both: for symmetric x, x conj(x) = x x^H.
      Eigen::Index k = x.rows();
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(k, k) - x * x.adjoint();
      return h.determinant().real();
    }
    case DomainKind::type_ii:
      return type_ii_norm_diag(x);
    case DomainKind::type_iv:
      return 1.0 - q_mixed_diag(x) + std::norm(q_form(x));
    default:
      throw UnsupportedDomainError("generic norm is not available for types V/VI");
  }
}

namespace {

void propose(const DomainType& d, UniformSource& rng, Eigen::MatrixXcd& x) {
  switch (d.kind()) {
    case DomainKind::type_i:
      for (int i = 0; i < d.m(); ++i)
        for (int j = 0; j < d.n(); ++j) x(i, j) = rng.box();
      break;
    case DomainKind::type_ii:
      for (int i = 0; i < d.n(); ++i) {
        x(i, i) = 0.0;
        for (int j = i + 1; j < d.n(); ++j) {
          auto c = rng.box();
          x(i, j) = c;
          x(j, i) = -c;
        }
      }
      break;
    case DomainKind::type_iii:
      for (int i = 0; i < d.n(); ++i) {
        x(i, i) = rng.box();
        for (int j = i + 1; j < d.n(); ++j) {
          auto c = rng.box();
          x(i, j) = c;
          x(j, i) = c;
        }
      }
      break;
    case DomainKind::type_iv:
      for (int i = 0; i < d.n(); ++i) x(i, 0) = rng.box(kSqrt2);
      break;
    default:
      throw UnsupportedDomainError("sampling is not available for types V/VI");
  }
}

// Fast interior test used in the rejection loop: LLT success on I - x x^H
// is exactly the spectral-norm condition for the matrix types.
struct AcceptTester {
  explicit AcceptTester(const DomainType& d) : d_(d) {
    if (d.kind() == DomainKind::type_i) side_ = d.m();
    else if (d.kind() == DomainKind::type_ii || d.kind() == DomainKind::type_iii) side_ = d.n();
    if (side_ > 0) {
      h_.resize(side_, side_);
      llt_ = Eigen::LLT<Eigen::MatrixXcd>(side_);
    }
  }

  bool operator()(const Eigen::MatrixXcd& x) {
    if (d_.kind() == DomainKind::type_iv) return contains_iv(x);
    h_.noalias() = -x * x.adjoint();
    h_.diagonal().array() += 1.0;
    llt_.compute(h_);
    return llt_.info() == Eigen::Success;
  }

 private:
  DomainType d_;
  int side_ = 0;
  Eigen::MatrixXcd h_;
  Eigen::LLT<Eigen::MatrixXcd> llt_;
};

std::pair<int, int> point_shape(const DomainType& d) {
  switch (d.kind()) {
    case DomainKind::type_i: return {d.m(), d.n()};
    case DomainKind::type_ii:
    case DomainKind::type_iii: return {d.n(), d.n()};
    case DomainKind::type_iv: return {d.n(), 1};
    default:
      throw UnsupportedDomainError("sampling is not available for types V/VI");
  }
}

}  // namespace

double sample_visit(const DomainType& d, std::uint64_t seed, std::size_t count,
                    const std::function<void(const Eigen::MatrixXcd&)>& fn) {
  auto [rows, cols] = point_shape(d);
  Eigen::MatrixXcd x(rows, cols);
  UniformSource rng(seed);
  AcceptTester accept(d);

  std::size_t accepted = 0;
  std::size_t proposals = 0;
  while (accepted < count) {
    propose(d, rng, x);
    ++proposals;
    if (!accept(x)) continue;
    ++accepted;
    fn(x);
  }
  return proposals == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
}

SampleResult sample_uniform(const DomainType& d, std::uint64_t seed, std::size_t count) {
  SampleResult out;
  out.points.reserve(count);
  out.acceptance_rate = sample_visit(d, seed, count, [&](const Eigen::MatrixXcd& x) {
    out.points.push_back(DomainPoint{d, x});
  });
  return out;
}

VolumeConvention volume_convention(const DomainType& d) {
  const Invariants v = invariants(d);
  double log_det_h = 0.0;
  switch (d.kind()) {
    case DomainKind::type_i:
    case DomainKind::type_ii:
      log_det_h = 0.0;
      break;
    case DomainKind::type_iii:
      log_det_h = std::log(2.0) * (d.n() * (d.n() - 1) / 2);
      break;
    case DomainKind::type_iv:
      log_det_h = std::log(2.0) * d.n();
      break;
    default:
      throw UnsupportedDomainError("volume convention needs the generic norm, unavailable for V/VI");
  }
  double log_c = std::lgamma(v.dim + 1.0) + log_det_h - v.dim * std::log(std::numbers::pi);
  return VolumeConvention{std::exp(log_c)};
}

double bounding_box_volume(const DomainType& d) {
  const Invariants v = invariants(d);
  double per_coord = d.kind() == DomainKind::type_iv ? 8.0 : 4.0;
  return std::pow(per_coord, v.dim);
}

std::optional<double> exact_volume_omega(const DomainType& d) {
  if (d.kind() == DomainKind::type_i && d.m() == 1) return 1.0;
  return std::nullopt;
}

VolumeEstimate mc_volume_omega(const DomainType& d, std::size_t proposals, std::uint64_t seed) {
  auto [rows, cols] = point_shape(d);
  Eigen::MatrixXcd x(rows, cols);
  UniformSource rng(seed);
  AcceptTester accept(d);

  std::size_t hits = 0;
  for (std::size_t i = 0; i < proposals; ++i) {
    propose(d, rng, x);
    if (accept(x)) ++hits;
  }
  double rate = static_cast<double>(hits) / static_cast<double>(proposals);
  double vol = volume_convention(d).jacobian_to_lebesgue * bounding_box_volume(d) * rate;
  return VolumeEstimate{vol, proposals, seed};
}

}  // namespace kernelforge

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kernelforge/domains.hpp"
#include "test_support.hpp"

#include <cmath>
#include <complex>

using namespace kernelforge;
using Cplx = std::complex<double>;

namespace {

Eigen::MatrixXcd scalar_point(Cplx z) {
  Eigen::MatrixXcd x(1, 1);
  x(0, 0) = z;
  return x;
}

Eigen::MatrixXcd iv_point(std::initializer_list<Cplx> entries) {
  Eigen::MatrixXcd x(static_cast<Eigen::Index>(entries.size()), 1);
  Eigen::Index i = 0;
  for (auto e : entries) x(i++, 0) = e;
  return x;
}

// Deterministic pseudo-random interior point, scaled into the domain.
Eigen::MatrixXcd interior_point(const DomainType& d, std::uint64_t seed) {
  return sample_uniform(d, seed, 1).points.front().data;
}

}  // namespace

TEST_CASE("invariants of the table") {
  auto check = [](const DomainType& d, int r, int a, int b, int g, int n) {
    Invariants v = invariants(d);
    CHECK(v.rank == r);
    CHECK(v.a == a);
    CHECK(v.b == b);
    CHECK(v.genus == g);
    CHECK(v.dim == n);
  };
  check(DomainType::type_i(2, 3), 2, 2, 1, 5, 6);
  check(DomainType::type_i(1, 1), 1, 2, 0, 2, 1);
  check(DomainType::type_ii(4), 2, 4, 0, 6, 6);
  check(DomainType::type_ii(5), 2, 4, 2, 8, 10);
  check(DomainType::type_iii(2), 2, 1, 0, 3, 3);
  check(DomainType::type_iv(5), 2, 3, 0, 5, 5);
  check(DomainType::type_v(), 2, 6, 4, 12, 16);
  check(DomainType::type_vi(), 3, 8, 0, 18, 27);
}

TEST_CASE("genus identity over the grid") {
  for (const auto& d : kftest::acceptance_grid()) {
    Invariants v = invariants(d);
    CHECK(v.genus == 2 + v.a * (v.rank - 1) + v.b);
    CHECK(v.dim == v.rank * (1 + v.b) + v.a * v.rank * (v.rank - 1) / 2);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DomainType::type_i(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(DomainType::type_i(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(DomainType::type_ii(1), std::invalid_argument);
  CHECK_THROWS_AS(DomainType::type_iii(0), std::invalid_argument);
  CHECK_THROWS_AS(DomainType::type_iv(2), std::invalid_argument);
  CHECK_THROWS_AS(DomainType::type_iv(1), std::invalid_argument);
  CHECK_THROWS_WITH_AS(DomainType::parse("IV:2"),
                       "TypeIV requires n>=3 (IV:1 is I:1,1 and IV:2 is a reducible product)",
                       std::invalid_argument);
  CHECK(DomainType::parse("I:2,3") == DomainType::type_i(2, 3));
  CHECK(DomainType::parse("VI") == DomainType::type_vi());
  CHECK_THROWS_AS(DomainType::parse("VII"), std::invalid_argument);
}

TEST_CASE("point shape and symmetry validation") {
  DomainType ii = DomainType::type_ii(2);
  Eigen::MatrixXcd bad(2, 2);
  bad << 0.0, 0.3, 0.3, 0.0;  // symmetric, not antisymmetric
  CHECK_THROWS_AS(DomainPoint::make(ii, bad), std::invalid_argument);
  Eigen::MatrixXcd good(2, 2);
  good << 0.0, 0.3, -0.3, 0.0;
  CHECK(DomainPoint::make(ii, good).data(1, 0) == Cplx(-0.3, 0.0));

  DomainType iii = DomainType::type_iii(2);
  CHECK_THROWS_AS(DomainPoint::make(iii, good), std::invalid_argument);
  CHECK_THROWS_AS(DomainPoint::make(DomainType::type_i(1, 2), Eigen::MatrixXcd::Zero(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DomainPoint::make(DomainType::type_v(), Eigen::MatrixXcd::Zero(4, 4)),
                  UnsupportedDomainError);
}

TEST_CASE("membership") {
  DomainType disk = DomainType::type_i(1, 1);
  CHECK(contains(disk, scalar_point(0.0)));
  CHECK_FALSE(contains(disk, scalar_point(1.0)));
  CHECK(contains(disk, scalar_point(Cplx(0.6, 0.7))));  // |z| < 1

  // Type IV hand check: x = (0.9, 0, 0):
  // q(x,conj x) = 1.62, |q(x)|^2 = 0.6561, 1 - 1.62 + 0.6561 = 0.0361 > 0.
  DomainType iv = DomainType::type_iv(3);
  CHECK(contains(iv, iv_point({0.9, 0.0, 0.0})));
  CHECK_FALSE(contains(iv, iv_point({1.0, 0.0, 0.0})));
  // mixed real/imaginary coordinates tighten the quartic constraint
  CHECK_FALSE(contains(iv, iv_point({0.6, Cplx(0.0, 0.6), 0.0})));
  CHECK(contains(iv, iv_point({0.4, Cplx(0.0, 0.4), 0.0})));

  CHECK_THROWS_AS(contains(DomainType::type_v(), Eigen::MatrixXcd::Zero(1, 1)),
                  UnsupportedDomainError);
}

TEST_CASE("generic norm closed forms") {
  DomainType disk = DomainType::type_i(1, 1);
  Cplx z(0.3, 0.4);
  CHECK(std::abs(generic_norm(disk, scalar_point(z), scalar_point(z)) - Cplx(1.0 - std::norm(z))) <
        1e-15);
  CHECK(generic_norm_diag(disk, scalar_point(z)) == doctest::Approx(1.0 - std::norm(z)));

  // N(0,0) = 1 for every supported type
  CHECK(generic_norm_diag(disk, scalar_point(0.0)) == doctest::Approx(1.0));
  CHECK(generic_norm_diag(DomainType::type_ii(4), Eigen::MatrixXcd::Zero(4, 4)) ==
        doctest::Approx(1.0));
  CHECK(generic_norm_diag(DomainType::type_iii(3), Eigen::MatrixXcd::Zero(3, 3)) ==
        doctest::Approx(1.0));
  CHECK(generic_norm_diag(DomainType::type_iv(3), Eigen::MatrixXcd::Zero(3, 1)) ==
        doctest::Approx(1.0));

  // Type IV along a real ray: N = (1 - t^2)^2
  DomainType iv = DomainType::type_iv(3);
  for (double t : {0.1, 0.5, 0.9}) {
    CHECK(generic_norm_diag(iv, iv_point({t, 0.0, 0.0})) ==
          doctest::Approx((1.0 - t * t) * (1.0 - t * t)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(generic_norm(DomainType::type_vi(), Eigen::MatrixXcd::Zero(1, 1),
                               Eigen::MatrixXcd::Zero(1, 1)),
                  UnsupportedDomainError);
}

TEST_CASE("hermitian symmetry of the generic norm") {
  for (const auto& d : {DomainType::type_i(2, 3), DomainType::type_iii(2), DomainType::type_iv(4)}) {
    for (std::uint64_t s = 1; s <= 5; ++s) {
      auto x = interior_point(d, 100 + s);
      auto y = interior_point(d, 200 + s);
      Cplx nxy = generic_norm(d, x, y);
      Cplx nyx = generic_norm(d, y, x);
      CHECK(std::abs(nxy - std::conj(nyx)) < 1e-12);
    }
  }
}

TEST_CASE("type II norm squares to the determinant") {
  for (int n : {2, 3, 4, 5}) {
    DomainType d = DomainType::type_ii(n);
    for (std::uint64_t s = 1; s <= 4; ++s) {
      auto x = interior_point(d, 300 + s);
      double norm = generic_norm_diag(d, x);
      Eigen::MatrixXcd h =
          Eigen::MatrixXcd::Identity(n, n) + x * x.conjugate();
      CHECK(std::abs(norm * norm - h.determinant().real()) < 1e-10);
      CHECK(norm > 0.0);

      // off-diagonal pairing agrees with the determinant too
      auto y = interior_point(d, 400 + s);
      Cplx offdiag = generic_norm(d, x, y);
      Eigen::MatrixXcd hxy = Eigen::MatrixXcd::Identity(n, n) + x * y.conjugate();
      CHECK(std::abs(offdiag * offdiag - hxy.determinant()) < 1e-9);
    }
  }

  // II_2 is the unit disk in the single free entry
  DomainType ii2 = DomainType::type_ii(2);
  Eigen::MatrixXcd x(2, 2);
  Cplx zeta(0.3, -0.5);
  x << 0.0, zeta, -zeta, 0.0;
  CHECK(generic_norm_diag(ii2, x) == doctest::Approx(1.0 - std::norm(zeta)).epsilon(1e-12));
}

TEST_CASE("generic norm decays monotonically along rays") {
  const std::vector<DomainType> domains = {DomainType::type_i(2, 2), DomainType::type_ii(3),
                                           DomainType::type_iii(2), DomainType::type_iv(3)};
  int rays_per_domain = 25;  // 100 rays over the four types
  for (const auto& d : domains) {
    for (int ray = 0; ray < rays_per_domain; ++ray) {
      auto dir = interior_point(d, 1000 + static_cast<std::uint64_t>(ray));
      double prev = generic_norm_diag(d, 0.0 * dir);
      CHECK(prev == doctest::Approx(1.0));
      for (double t = 0.1; t < 1.0; t += 0.1) {
        double cur = generic_norm_diag(d, t * dir);
        CHECK(cur < prev);
        CHECK(cur > 0.0);
        prev = cur;
      }
    }
  }
}

TEST_CASE("sampling: membership, determinism, acceptance") {
  DomainType disk = DomainType::type_i(1, 1);
  auto r = sample_uniform(disk, 42, 3);
  REQUIRE(r.points.size() == 3);
  for (const auto& p : r.points) CHECK(std::abs(p.data(0, 0)) < 1.0);

  auto r2 = sample_uniform(disk, 42, 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.points[i].data == r2.points[i].data);

  // acceptance rate for the disk approaches area(disk)/area(square) = pi/4
  auto big = sample_uniform(disk, 7, 40000);
  CHECK(big.acceptance_rate == doctest::Approx(3.14159265 / 4.0).epsilon(0.02));

  auto sym = sample_uniform(DomainType::type_iii(2), 11, 1000);
  for (const auto& p : sym.points) {
    CHECK(p.data(0, 1) == p.data(1, 0));
    CHECK(spectral_norm(p.data) < 1.0);
  }

  auto iv = sample_uniform(DomainType::type_iv(3), 13, 500);
  for (const auto& p : iv.points) CHECK(contains(p));

  CHECK_THROWS_AS(sample_uniform(DomainType::type_v(), 1, 1), UnsupportedDomainError);
}

TEST_CASE("low-dimensional isomorphism invariants") {
  // II_3 ~ I_{1,3}: same genus and dimension (rank/multiplicities differ)
  Invariants ii3 = invariants(DomainType::type_ii(3));
  Invariants i13 = invariants(DomainType::type_i(1, 3));
  CHECK(ii3.genus == i13.genus);
  CHECK(ii3.dim == i13.dim);

  // IV_3 ~ III_2
  Invariants iv3 = invariants(DomainType::type_iv(3));
  Invariants iii2 = invariants(DomainType::type_iii(2));
  CHECK(iv3.genus == iii2.genus);
  CHECK(iv3.dim == iii2.dim);
}

TEST_CASE("volume conventions") {
  // Disk: omega = dA/pi, so c = 1/pi and vol = (pi/4 acceptance) * 4 * c = 1.
  VolumeConvention disk = volume_convention(DomainType::type_i(1, 1));
  CHECK(disk.jacobian_to_lebesgue == doctest::Approx(1.0 / 3.14159265358979).epsilon(1e-12));
  CHECK(bounding_box_volume(DomainType::type_i(1, 1)) == doctest::Approx(4.0));
  CHECK(bounding_box_volume(DomainType::type_iv(3)) == doctest::Approx(512.0));

  CHECK(exact_volume_omega(DomainType::type_i(1, 2)).value() == doctest::Approx(1.0));
  CHECK_FALSE(exact_volume_omega(DomainType::type_iii(2)).has_value());

  auto vol = mc_volume_omega(DomainType::type_i(1, 1), 200000, 3);
  CHECK(vol.value == doctest::Approx(1.0).epsilon(0.02));
  auto vol2 = mc_volume_omega(DomainType::type_i(1, 2), 200000, 3);
  CHECK(vol2.value == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("spectral norm") {
  Eigen::MatrixXcd x(2, 2);
  x << 3.0, 0.0, 0.0, Cplx(0.0, 4.0);
  CHECK(spectral_norm(x) == doctest::Approx(4.0));
  CHECK(spectral_norm(Eigen::MatrixXcd::Zero(2, 3)) == doctest::Approx(0.0));
}

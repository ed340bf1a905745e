#pragma once

#include "kernelforge/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kernelforge {

enum class DomainKind { type_i, type_ii, type_iii, type_iv, type_v, type_vi };

/// One of the six irreducible bounded circled symmetric domains.
/// Construction validates parameter ranges:
///   I_{m,n} needs 1 <= m <= n; II_n needs n >= 2; III_n needs n >= 1;
///   IV_n needs n >= 3 (IV_1 coincides with I_{1,1} and IV_2 is reducible).
class DomainType {
 public:
  static DomainType type_i(int m, int n);
  static DomainType type_ii(int n);
  static DomainType type_iii(int n);
  static DomainType type_iv(int n);
  static DomainType type_v();
  static DomainType type_vi();

  /// Grammar: "I:m,n | II:n | III:n | IV:n | V | VI".
  static DomainType parse(std::string_view spec);

  DomainKind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }

  std::string label() const;

  bool operator==(const DomainType&) const = default;

 private:
  DomainType(DomainKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}
  DomainKind kind_;
  int m_;
  int n_;
};

/// Numerical invariants: rank, multiplicities, genus, complex dimension.
struct Invariants {
  int rank;
  int a;
  int b;
  int genus;
  int dim;
};

/// Table invariants for every type; genus and dimension are cross-checked
/// against g = 2 + a(r-1) + b and n = r(1+b) + a r(r-1)/2.
Invariants invariants(const DomainType& d);

/// A point of the ambient space: m x n matrix (type I), n x n antisymmetric
/// (II), n x n symmetric (III), or an n-vector stored as n x 1 (IV).
struct DomainPoint {
  DomainType domain;
  Eigen::MatrixXcd data;

  /// Validates shape; II/III symmetry must hold exactly.
  static DomainPoint make(const DomainType& d, Eigen::MatrixXcd data);
};

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& x);

/// Interior membership. Types I-III: spectral norm < 1; type IV: the two
/// defining inequalities. Types V/VI are unsupported.
bool contains(const DomainPoint& p);
bool contains(const DomainType& d, const Eigen::MatrixXcd& x);

/// Generic norm N(x, y). Types I, III, IV are closed forms; type II takes
/// the square root of det(I + x conj(y)) by pairing eigenvalues (each occurs
/// with even multiplicity), continuous in (x, y) and positive on the
/// diagonal of the domain.
std::complex<double> generic_norm(const DomainType& d, const Eigen::MatrixXcd& x,
                                  const Eigen::MatrixXcd& y);

/// N(x, x); always real.
double generic_norm_diag(const DomainType& d, const Eigen::MatrixXcd& x);

struct SampleResult {
  std::vector<DomainPoint> points;
  double acceptance_rate;
};

/// i.i.d. Lebesgue-uniform interior points by rejection from the bounding
/// box (unit-disk entries for matrix types, [-sqrt2, sqrt2]^{2n} for type
/// IV). Deterministic for a fixed seed.
SampleResult sample_uniform(const DomainType& d, std::uint64_t seed, std::size_t count);

/// Streaming variant of sample_uniform: visits `count` accepted points
/// without storing them; returns the acceptance rate.
double sample_visit(const DomainType& d, std::uint64_t seed, std::size_t count,
                    const std::function<void(const Eigen::MatrixXcd&)>& fn);

/// The constant c with omega = c * dV_Lebesgue for the Kaehler volume form
/// built from the (1,1) part of the generic norm.
struct VolumeConvention {
  double jacobian_to_lebesgue;
};

VolumeConvention volume_convention(const DomainType& d);

/// Lebesgue volume of the rejection-sampling box.
double bounding_box_volume(const DomainType& d);

/// Known exact normalized volumes: integral of omega over I_{1,n} is 1.
std::optional<double> exact_volume_omega(const DomainType& d);

struct VolumeEstimate {
  double value;
  std::size_t proposals;
  std::uint64_t seed;
};

/// Monte Carlo estimate of the omega-volume of the domain.
VolumeEstimate mc_volume_omega(const DomainType& d, std::size_t proposals, std::uint64_t seed);

}  // namespace kernelforge

#pragma once

#include <stdexcept>
#include <string>

namespace kernelforge {

/// Requested operation is not available for this domain type (exceptional
/// types V/VI have no implemented generic-norm evaluation).
struct UnsupportedDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The square root / principal power of the generic norm could not be
/// assigned a branch unambiguously.
struct BranchAmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The generic norm vanishes at an off-diagonal point pair, so N^{-mu} has
/// a genuine singularity there.
struct SingularKernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A series argument lies outside the open disk of convergence.
struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A point lies outside the domain (or inflated domain) needed for the
/// requested evaluation.
struct OutsideDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace kernelforge

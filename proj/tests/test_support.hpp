#pragma once

#include "kernelforge/domains.hpp"
#include "kernelforge/rational.hpp"

#include <random>
#include <vector>

namespace kftest {

inline kernelforge::Rational random_rational(std::mt19937& gen, int num_range = 100,
                                             int den_range = 50) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return kernelforge::Rational(num(gen), den(gen));
}

/// The domain grid used by the chi-table acceptance criterion:
/// I_{m,n} (m <= n <= 4), II_{2..7}, III_{1..5}, IV_{3..8}, V, VI.
inline std::vector<kernelforge::DomainType> acceptance_grid() {
  using kernelforge::DomainType;
  std::vector<DomainType> grid;
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) grid.push_back(DomainType::type_i(m, n));
  for (int n = 2; n <= 7; ++n) grid.push_back(DomainType::type_ii(n));
  for (int n = 1; n <= 5; ++n) grid.push_back(DomainType::type_iii(n));
  for (int n = 3; n <= 8; ++n) grid.push_back(DomainType::type_iv(n));
  grid.push_back(DomainType::type_v());
  grid.push_back(DomainType::type_vi());
  return grid;
}

}  // namespace kftest

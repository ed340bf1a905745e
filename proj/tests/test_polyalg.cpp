#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kernelforge/polynomial.hpp"
#include "test_support.hpp"

#include <random>
#include <vector>

using namespace kernelforge;

namespace {

// Test-local convolution multiply, independent of RationalPolynomial's
// operator*.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Test-local dense solve of sum_j c_j (k+1)_j / j! = q(k), k = 0..deg, by
// Gauss-Jordan elimination with exact pivoting.
std::vector<Rational> decompose_oracle(const RationalPolynomial& q) {
  const std::size_t n = static_cast<std::size_t>(std::max(q.degree(), 0));
  std::vector<std::vector<Rational>> aug(n + 1, std::vector<Rational>(n + 2, Rational(0)));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j)
      aug[i][j] = rising_factorial(Rational(i + 1), static_cast<unsigned>(j)) / Rational(factorial(static_cast<unsigned>(j)));
    aug[i][n + 1] = q.eval(Rational(i));
  }
  for (std::size_t col = 0; col <= n; ++col) {
    std::size_t pivot = col;
    while (pivot <= n && aug[pivot][col] == 0) ++pivot;
    REQUIRE(pivot <= n);
    std::swap(aug[col], aug[pivot]);
    Rational inv = Rational(1) / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t row = 0; row <= n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      Rational f = aug[row][col];
      for (std::size_t j = 0; j <= n + 1; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = aug[i][n + 1];
  return c;
}

}  // namespace

TEST_CASE("rational parse/format round trip") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rising factorial values") {
  CHECK(rising_factorial(Rational(1), 3) == Rational(6));  // 3!
  CHECK(rising_factorial(Rational(7, 3), 0) == Rational(1));
  CHECK(rising_factorial(Rational(-5), 0) == Rational(1));
  // (1/2)(3/2) = 3/4
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("rising factorial recurrence (s)_{k+1} = (s)_k (s+k)") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    Rational s = kftest::random_rational(gen);
    for (unsigned k = 0; k <= 12; ++k)
      CHECK(rising_factorial(s, k + 1) == rising_factorial(s, k) * (s + k));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 7) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("expand examples") {
  // (s+1)_1 = s + 1
  FactorizedPoly single({{Rational(1), 1}});
  CHECK(single.expand() == RationalPolynomial({Rational(1), Rational(1)}));

  // empty product = 1
  CHECK(FactorizedPoly{}.expand() == RationalPolynomial::constant(1));

  // (s+1)_2 (s+3/2)_1 = (s+1)(s+2)(s+3/2) = s^3 + 9/2 s^2 + 13/2 s + 3
  FactorizedPoly triple({{Rational(1), 2}, {Rational(3, 2), 1}});
  RationalPolynomial expanded = triple.expand();
  CHECK(expanded ==
        RationalPolynomial({Rational(3), Rational(13, 2), Rational(9, 2), Rational(1)}));

  // Cross-check against the convolution oracle.
  auto oracle = convolve(convolve({Rational(1), Rational(1)}, {Rational(2), Rational(1)}),
                         {Rational(3, 2), Rational(1)});
  CHECK(expanded.coefficients() == oracle);
}

TEST_CASE("expand degree equals the sum of factor lengths") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> nf(0, 3), len(0, 3);
    std::vector<RisingFactor> factors;
    unsigned total = 0;
    for (int i = 0, m = nf(gen); i < m; ++i) {
      unsigned l = static_cast<unsigned>(len(gen));
      // zero-length factors would make the leading coefficient check moot
      if (l == 0) continue;
      factors.push_back({kftest::random_rational(gen, 10, 8), l});
      total += l;
    }
    FactorizedPoly f(std::move(factors));
    CHECK(f.total_degree() == total);
    CHECK(f.expand().degree() == static_cast<int>(total));
  }
}

TEST_CASE("polynomial eval") {
  RationalPolynomial p({Rational(1), Rational(1)});  // s + 1
  CHECK(p.eval(Rational(0)) == Rational(1));
  CHECK(p.eval(Rational(-1)) == Rational(0));

  // (s+1)(s+2) at 1/2 -> (3/2)(5/2) = 15/4
  FactorizedPoly f({{Rational(1), 2}});
  CHECK(f.expand().eval(Rational(1, 2)) == Rational(15, 4));
  CHECK(f.eval(Rational(1, 2)) == Rational(15, 4));

  CHECK(p.eval_real(0.25) == doctest::Approx(1.25));
}

TEST_CASE("eval of expansion equals product of rising factorials") {
  std::mt19937 gen(13);
  FactorizedPoly f({{Rational(1, 2), 2}, {Rational(-3, 4), 1}, {Rational(2), 3}});
  RationalPolynomial expanded = f.expand();
  for (int trial = 0; trial < 20; ++trial) {
    Rational x = kftest::random_rational(gen);
    Rational direct = rising_factorial(x + Rational(1, 2), 2) *
                      rising_factorial(x + Rational(-3, 4), 1) * rising_factorial(x + 2, 3);
    CHECK(expanded.eval(x) == direct);
  }
}

TEST_CASE("binomial basis decomposition examples") {
  // q = 1 -> [1]
  CHECK(binomial_basis_decompose(RationalPolynomial::constant(1)) ==
        std::vector<Rational>{Rational(1)});

  // q = k + 1 = (k+1)_1 / 1! -> [0, 1]
  RationalPolynomial linear({Rational(1), Rational(1)});
  CHECK(binomial_basis_decompose(linear) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(decompose_oracle(linear) == std::vector<Rational>{Rational(0), Rational(1)});

  // q = k/2 + 1 -> [1/2, 1/2], checked at k = 0, 1, 2
  RationalPolynomial half({Rational(1), Rational(1, 2)});
  auto c = binomial_basis_decompose(half);
  CHECK(c == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  for (unsigned k = 0; k <= 2; ++k) {
    Rational lhs = c[0] + c[1] * rising_factorial(Rational(k + 1), 1);
    CHECK(lhs == half.eval(Rational(k)));
  }
}

TEST_CASE("decomposition matches the dense-solve oracle on random polynomials") {
  std::mt19937 gen(17);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> coeffs;
    int d = deg(gen);
    for (int i = 0; i <= d; ++i) coeffs.push_back(kftest::random_rational(gen, 20, 10));
    RationalPolynomial q(std::move(coeffs));
    CHECK(binomial_basis_decompose(q) == decompose_oracle(q));
  }
}

TEST_CASE("decompose/synthesize is a bijection") {
  std::mt19937 gen(19);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> coeffs;
    int d = deg(gen);
    for (int i = 0; i <= d; ++i) coeffs.push_back(kftest::random_rational(gen, 30, 12));
    RationalPolynomial q(std::move(coeffs));
    CHECK(binomial_basis_synthesize(binomial_basis_decompose(q)) == q);
  }
  // and the other direction on coefficient vectors
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c;
    int d = deg(gen);
    for (int i = 0; i <= d; ++i) c.push_back(kftest::random_rational(gen, 30, 12));
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) continue;
    CHECK(binomial_basis_decompose(binomial_basis_synthesize(c)) == c);
  }
}

TEST_CASE("scale_argument substitutes mu*k exactly") {
  // (s+1)(s+2) with s = k/3
  FactorizedPoly f({{Rational(1), 2}});
  RationalPolynomial scaled = f.expand().scale_argument(Rational(1, 3));
  std::mt19937 gen(23);
  for (int trial = 0; trial < 10; ++trial) {
    Rational k = kftest::random_rational(gen);
    CHECK(scaled.eval(k) == f.expand().eval(k / 3));
  }
}

TEST_CASE("factored string forms") {
  FactorizedPoly f({{Rational(1), 2}, {Rational(3, 2), 1}});
  CHECK(f.to_string() == "(s+1)_2 (s+3/2)_1");
  CHECK(f.to_latex() == "(s+1)_{2}(s+\\frac{3}{2})_{1}");
  CHECK(f.expand().to_string() == "s^3 + 9/2 s^2 + 13/2 s + 3");
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hlcbs/polyfam.hpp"
#include "support.hpp"

using namespace hlcbs;
using namespace hlcbs::polyfam;
using exact::UniPoly;
using testing::Gen;

namespace {

// E_n(x, y) as the excedance/cycle counting polynomial over S_n,
// enumerated by brute force.
EulerianPoly eulerian_by_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<UniPoly> by_exc(static_cast<std::size_t>(n) + 1);
  do {
    int exc = 0;
    for (int i = 0; i < n; ++i)
      if (perm[i] > i) ++exc;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    by_exc[exc] += UniPoly::monomial(1, cycles);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return EulerianPoly(exact::BiPoly(by_exc));
}

// B_n^(-k) = sum_m (m!)^2 S(n+1, m+1) S(k+1, m+1).
Rational poly_bernoulli_negative(int n, int k) {
  mpz_class sum = 0;
  for (int m = 0; m <= std::min(n, k); ++m) {
    const mpz_class f = exact::factorial(m);
    sum += f * f * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1);
  }
  return Rational(sum);
}

}  // namespace

TEST_CASE("binomial and Stirling numbers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling2(7, 3) == 301);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 0) == 0);
}

TEST_CASE("Lehmer polynomials, first rows") {
  CHECK(q_poly(-1) == UniPoly{1});
  CHECK(p_poly(-1).is_zero());
  CHECK(q_poly(0) == UniPoly{1});
  CHECK(q_poly(1) == UniPoly{1, 2});
  CHECK(q_poly(2) == UniPoly{1, 10, 4});
  CHECK(q_poly(3) == UniPoly{1, 36, 60, 8});
  CHECK(p_poly(0) == UniPoly{1});
  CHECK(p_poly(1) == UniPoly{3});
  CHECK(p_poly(2) == UniPoly{7, 8});
  CHECK(p_poly(3) == UniPoly{15, 70, 20});
  CHECK(q_poly(3).str() == "8*x^3 + 60*x^2 + 36*x + 1");
}

TEST_CASE("interpolating polynomial, first rows") {
  const UniPoly one_minus_a{1, -1};
  auto row = [](const exact::BiPoly& p) {
    return std::vector<UniPoly>(p.coefficients().begin(), p.coefficients().end());
  };
  CHECK(p_a_poly(-1).is_zero());
  CHECK(p_a_poly(0) == exact::BiPoly::from_param(UniPoly{1}));
  // 2(1-a)x + 2a + 1
  CHECK(row(p_a_poly(1)) == std::vector<UniPoly>{UniPoly{1, 2}, UniPoly{2, -2}});
  // 4(1-a)^2 x^2 - 2(4a^2-3a-5) x + 4a^2+2a+1
  CHECK(row(p_a_poly(2)) ==
        std::vector<UniPoly>{UniPoly{1, 2, 4}, UniPoly{10, 6, -8}, Rational(4) * pow(one_minus_a, 2)});
  // 8(1-a)^3 x^3 + 4(6a^3-11a^2-5a+15) x^2 - 2(12a^3-8a^2-21a-18) x + (2a+1)(4a^2+1)
  CHECK(row(p_a_poly(3)) == std::vector<UniPoly>{UniPoly{1, 2} * UniPoly{1, 0, 4}, UniPoly{36, 42, 16, -24},
                                                    UniPoly{60, -20, -44, 24}, Rational(8) * pow(one_minus_a, 3)});
}

TEST_CASE("Eulerian polynomials, first rows") {
  CHECK(eulerian(0).str() == "1");
  CHECK(eulerian(1).str() == "y");
  CHECK(eulerian(2) == eulerian_by_permutations(2));
  // y^3 + 3xy^2 + x^2y + xy; the xy^2 coefficient is 3.
  const EulerianPoly e3 = eulerian(3);
  CHECK(e3.coefficient(0, 3) == 1);
  CHECK(e3.coefficient(1, 2) == 3);
  CHECK(e3.coefficient(1, 1) == 1);
  CHECK(e3.coefficient(2, 1) == 1);
  CHECK(e3.coefficient(1, 0) == 0);
}

TEST_CASE("Eulerian recursion, generating function and permutation count agree") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const EulerianPoly e = eulerian(n);
    CHECK(e == eulerian_by_permutations(n));
    CHECK(e == eulerian_gf_oracle(n));
    // E_n(1, y) = y (y+1) ... (y+n-1)
    UniPoly rising{1};
    for (int j = 0; j < n; ++j) rising = rising * UniPoly{j, 1};
    CHECK(e.at_x(1) == rising);
  }
}

TEST_CASE("poly-Bernoulli numbers") {
  // B_n^(-k) grid for 0 <= n, k <= 4.
  const long grid[5][5] = {{1, 1, 1, 1, 1}, {1, 2, 4, 8, 16}, {1, 4, 14, 46, 146}, {1, 8, 46, 230, 1066}, {1, 16, 146, 1066, 6902}};
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= 4; ++n) CHECK(poly_bernoulli(n, -k) == Rational(grid[k][n]));
  // k = 1 gives Bernoulli numbers with B_1 = +1/2.
  CHECK(poly_bernoulli(0, 1) == 1);
  CHECK(poly_bernoulli(1, 1) == Rational(1, 2));
  CHECK(poly_bernoulli(2, 1) == Rational(1, 6));
  CHECK(poly_bernoulli(3, 1) == 0);
  CHECK(poly_bernoulli(4, 1) == Rational(-1, 30));
  CHECK(poly_bernoulli(6, 1) == Rational(1, 42));
}

TEST_CASE("poly-Bernoulli numbers match the double Stirling sum and are symmetric") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= 12; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(poly_bernoulli(n, -k) == poly_bernoulli_negative(n, k));
      CHECK(poly_bernoulli(n, -k) == poly_bernoulli(k, -n));
    }
}

TEST_CASE("Eulerian convolutions reproduce p_n and q_n") {
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(bm_q_poly(n) == q_poly(n - 1));
    CHECK(bm_p_poly(n) == p_poly(n));
    // 2^n E_n(x, 1/2) straight from the permutation count.
    CHECK(eulerian_by_permutations(std::min(n, 7)).at_y(Rational(1, 2)).scaled(exact::pow(Rational(2), std::min(n, 7))) ==
          q_poly(std::min(n, 7) - 1));
  }
}

TEST_CASE("sum of antidiagonal poly-Bernoulli numbers") {
  // (2/3)^n p_n(1/4)
  for (int n = 0; n <= 10; ++n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += poly_bernoulli_negative(n - k, k);
    CHECK(exact::pow(Rational(2, 3), n) * p_poly(n).eval(Rational(1, 4)) == s);
  }
  CHECK(exact::pow(Rational(2, 3), 3) * p_poly(3).eval(Rational(1, 4)) == 10);
}

TEST_CASE("interpolation endpoints are exact for every index") {
  // p_{-1}(a,x) = 0 while q_{-1} = 1, so the match starts at n = 0.
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(p_a_poly(n).substitute_param(0) == q_poly(n));
    CHECK(p_a_poly(n).substitute_param(1) == p_poly(n));
  }
}

TEST_CASE("double Eulerian sum equals the interpolating polynomial") {
  for (int n = 0; n <= 9; ++n) CHECK(p_from_eulerian(n) == p_a_poly(n));
}

TEST_CASE("recursions hold at seeded parameters") {
  Gen g(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = g.rational(), x = g.rational();
    for (int k = 0; k < 8; ++k) {
      // p_{k+1}(a,x) = 2((k+1-a)x + a) p_k + 2x(1-x) p_k' + q_k, at a point.
      const exact::BiPoly pk = p_a_poly(k);
      const Rational lhs = p_a_poly(k + 1).eval(a, x);
      const Rational rhs = Rational(2) * ((Rational(k + 1) - a) * x + a) * pk.eval(a, x) +
                           Rational(2) * x * (Rational(1) - x) * pk.derivative_x().eval(a, x) + q_poly(k).eval(x);
      CHECK(lhs == rhs);
      CHECK(alpha(k, a) == exact::pow(Rational(2, 3), k) * pk.eval(a, Rational(1, 4)));
    }
  }
}

TEST_CASE("alpha recursion values") {
  CHECK(alpha(0, Rational(5, 7)) == 1);
  // 3 alpha_1 = 2 + 1 + 3a
  CHECK(alpha(1, Rational(2)) == 3);
  CHECK(alpha(1, 0) == 1);
  // a = 1 reproduces the antidiagonal sums 1, 2, 4, 10, ...
  CHECK(alpha(3, 1) == 10);
}

TEST_CASE("degrees and leading coefficients") {
  for (int n = 0; n <= 15; ++n) {
    CHECK(q_poly(n).degree() == n);
    CHECK(q_poly(n).coefficient(static_cast<std::size_t>(n)) == exact::pow(Rational(2), n));
    CHECK(q_poly(n).eval(0) == 1);
    CHECK(eulerian(n).y_degree() == n);
  }
}

TEST_CASE("substituting the parameter commutes with evaluation") {
  testing::Gen g(91);
  for (int k = 0; k <= 8; ++k)
    for (int i = 0; i < 10; ++i) {
      const exact::Rational a = g.rational(), x = g.rational();
      CHECK(p_a_poly(k).substitute_param(a).eval(x) == p_a_poly(k).eval(a, x));
      CHECK(p_a_poly(k).substitute_x(x).eval(a) == p_a_poly(k).eval(a, x));
    }
}

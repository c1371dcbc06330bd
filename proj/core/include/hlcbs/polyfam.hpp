#pragma once

#include <string>

#include "hlcbs/exact/bipoly.hpp"
#include "hlcbs/exact/rational.hpp"
#include "hlcbs/exact/unipoly.hpp"

// Polynomial and number families generated by their recursions, with
// independent generating-function expansions kept as oracles.
//
// Every generator memoizes into a process-wide cache guarded by a mutex,
// so concurrent callers see the same results as a sequential run.
namespace hlcbs::polyfam {

using exact::BiPoly;
using exact::Rational;
using exact::UniPoly;

// Bivariate Eulerian polynomial E_n(x, y), stored as a polynomial in x with
// coefficients in y.
class EulerianPoly {
 public:
  EulerianPoly() = default;
  explicit EulerianPoly(BiPoly xy) : xy_(std::move(xy)) {}

  const BiPoly& as_bipoly() const { return xy_; }
  const Rational& coefficient(std::size_t deg_x, std::size_t deg_y) const { return xy_.coefficient(deg_x, deg_y); }
  int y_degree() const { return xy_.param_degree(); }
  int x_degree() const { return xy_.x_degree(); }

  // E_n(x, y0) as a polynomial in x.
  UniPoly at_y(const Rational& y0) const { return xy_.substitute_param(y0); }
  // E_n(x0, y) as a polynomial in y.
  UniPoly at_x(const Rational& x0) const { return xy_.substitute_x(x0); }

  std::string str() const { return xy_.str("x", "y"); }
  friend bool operator==(const EulerianPoly&, const EulerianPoly&) = default;

 private:
  BiPoly xy_;
};

// Exact C(n, k) from a memoized Pascal triangle; 0 unless 0 <= k <= n.
mpz_class binomial(long n, long k);
// Stirling numbers of the second kind S(n, m).
mpz_class stirling2(long n, long m);

// q_{k+1} = (2(k+1)x + 1) q_k + 2x(1-x) q_k', q_{-1} = 1.
UniPoly q_poly(int k);
// p_{k+1} = 2(kx + 1) p_k + 2x(1-x) p_k' + q_k, p_{-1} = 0.
UniPoly p_poly(int k);
// p_{k+1}(a,x) = 2((k+1-a)x + a) p_k + 2x(1-x) d/dx p_k + q_k, p_{-1} = 0.
BiPoly p_a_poly(int k);

// Generated by E_{n+1} = (y + n x) E_n + x(1-x) dE_n/dx, E_0 = 1.
EulerianPoly eulerian(int n);
// n! [t^n] ((1-x)/(e^{t(x-1)} - x))^y, expanded as a formal power series in
// exact arithmetic with y kept symbolic. Independent of eulerian().
EulerianPoly eulerian_gf_oracle(int n);

// Poly-Bernoulli number B_n^(k) via
//   sum_{m=0}^{n} (-1)^{m+n} m! S(n,m) / (m+1)^k.
Rational poly_bernoulli(int n, int k);

// alpha_n(a): 3 alpha_n = 2 alpha_{n-1} + sum_{l<n} C(n,l) alpha_l + 3 a^n,
// alpha_0 = 1.
Rational alpha(int n, const Rational& a);

// p_n(a,x) through the double Eulerian sum
//   2^n sum_j sum_l C(n+1,j+1) C(j,l) (a-1)^{j-l} (1-x)^{j-l} E_{n-j}(x,1/2) E_l(x,1/2).
BiPoly p_from_eulerian(int n);
// p_n(x) = 2^n sum_k C(n+1,k) E_{n-k}(x,1/2) E_k(x,1/2).
UniPoly bm_p_poly(int n);
// 2^n E_n(x, 1/2), which equals q_{n-1}(x).
UniPoly bm_q_poly(int n);

}  // namespace hlcbs::polyfam

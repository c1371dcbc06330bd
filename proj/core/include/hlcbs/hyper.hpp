#pragma once

#include <cstddef>
#include <vector>

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/piext.hpp"
#include "hlcbs/exact/rational.hpp"

namespace hlcbs::hyper {

using exact::BigFloat;
using exact::BoundedFloat;
using exact::PiExtValue;
using exact::Rational;

// p+1 F p (upper; lower; z). Parameters and argument are exact rationals;
// every value the series layer needs (1/2, a, a+1, z^2 with rational z)
// is rational.
struct PFQParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z;
};

inline constexpr std::size_t kDefaultMaxTerms = 100000;

// (alpha)_n = alpha (alpha+1) ... (alpha+n-1), (alpha)_0 = 1.
Rational pochhammer(const Rational& alpha, int n);

// Sums the series until a rigorous geometric tail bound falls below
// 2^-(precision_bits+2) of the partial sum. The tail majorant pairs
// upper[0] with the n! denominator and upper[i] with lower[i-1]; once every
// paired factor (alpha+n)/(beta+n) is positive it is monotone, so
// |z| * prod max(1, factor) bounds every later term ratio.
//
// Terminating series (an upper parameter in Z_{<=0}) are summed exactly to
// their last term for any z. Otherwise |z| >= 1 throws NoConvergence.
BoundedFloat pfq_eval(const PFQParams& params, mpfr_prec_t precision_bits,
                      std::size_t max_terms = kDefaultMaxTerms);

// B(z; alpha, beta) = (z^alpha / alpha) 2F1(alpha, 1-beta; alpha+1; z),
// for z in [0,1), alpha > 0, beta > 0.
BoundedFloat incomplete_beta_numeric(const Rational& z, const Rational& alpha, const Rational& beta,
                                     mpfr_prec_t precision_bits);

// Exact B(1/4; alpha, 1/2) for alpha in {1/2, 1, 3/2, ...}, built from
// B(1/4;1/2,1/2) = pi/3 and B(1/4;1,1/2) = 2 - sqrt3 with
//   B(x; alpha+1, beta) = alpha/(alpha+beta) B(x; alpha, beta) - x^alpha (1-x)^beta / (alpha+beta).
PiExtValue incomplete_beta_exact(const Rational& alpha);

// C(2a, a) = Gamma(2a+1) / Gamma(a+1)^2. PoleError for a in (1/2)Z_{<=0}.
BoundedFloat real_central_binomial(const Rational& a, mpfr_prec_t precision_bits);
// Integer a >= 1 only.
Rational central_binomial_exact(const Rational& a);
// 1 / C(2a, a). Zero at negative half-integers (Gamma(2a+1) has a pole
// there), PoleError at integers a <= 0, exact for positive integers.
BoundedFloat reciprocal_central_binomial(const Rational& a, mpfr_prec_t precision_bits);

// Gamma(a+1)^2 / Gamma(2a+1) exactly, for a a positive integer (rational
// result) or a half-integer >= 1/2 (rational multiple of pi).
PiExtValue exact_gamma_ratio(const Rational& a);

// base^exponent for base >= 0 with a rigorous bound.
BoundedFloat rational_power(const Rational& base, const Rational& exponent, mpfr_prec_t precision_bits);
// Gamma(x) with a bound derived from the digamma sensitivity.
BoundedFloat gamma_at(const Rational& x, mpfr_prec_t precision_bits);

}  // namespace hlcbs::hyper

#include "hlcbs/hyper.hpp"

#include <algorithm>
#include <cmath>

#include "hlcbs/errors.hpp"

namespace hlcbs::hyper {

namespace {

constexpr mpfr_prec_t kGuardBits = 40;

const Rational kHalf(1, 2);

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

// a in (1/2) Z_{<=0}
bool on_half_integer_poles(const Rational& a) { return a.sign() <= 0 && (Rational(2) * a).is_integer(); }

// Smallest n >= 0 with n + r > 0.
long first_positive_shift(const Rational& r) {
  if (r.sign() > 0) return 0;
  // floor(-r) + 1
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), mpz_class(-r.numerator()).get_mpz_t(), r.value().get_den_mpz_t());
  return f.get_si() + 1;
}

// Multiplier m with |v| m 2^-w bounding an elementary-function error.
BigFloat error_with_factor(const BigFloat& v, double factor, mpfr_prec_t w) {
  BigFloat f = BigFloat::from_double(std::ceil(factor) + 1.0, 64);
  return exact::bound::mul(exact::bound::relative(v, w), f);
}

}  // namespace

Rational pochhammer(const Rational& alpha, int n) {
  if (n < 0) throw DomainError("pochhammer: negative n");
  Rational r(1);
  for (int l = 0; l < n; ++l) r *= alpha + Rational(l);
  return r;
}

namespace {

struct PartialSum {
  BigFloat sum;
  BigFloat abs_sum;
  BigFloat tail;
  BigFloat rounding;
};

PartialSum sum_pfq(const PFQParams& params, mpfr_prec_t precision_bits, mpfr_prec_t w, std::size_t max_terms) {
  const auto& up = params.upper;
  const auto& low = params.lower;
  const Rational abs_z = exact::abs(params.z);

  // Index from which every paired factor has positive numerator and denominator.
  long monotone_from = first_positive_shift(up[0]);
  for (std::size_t i = 1; i < up.size(); ++i)
    monotone_from = std::max({monotone_from, first_positive_shift(up[i]), first_positive_shift(low[i - 1])});

  BigFloat term(1, w);
  PartialSum out{BigFloat(1, w), BigFloat(1, w), BigFloat(64), BigFloat(64)};
  const BigFloat target_scale = BigFloat::exp2i(-(precision_bits + 2));

  std::size_t n = 0;
  for (;; ++n) {
    const Rational rn(static_cast<long>(n));
    Rational ratio = params.z / Rational(static_cast<long>(n + 1));
    for (const auto& a : up) ratio *= a + rn;
    for (const auto& b : low) ratio /= b + rn;
    if (ratio.is_zero()) {
      out.tail = BigFloat(64);
      break;
    }

    if (static_cast<long>(n) >= monotone_from) {
      Rational rho = abs_z * std::max(Rational(1), (up[0] + rn) / (rn + Rational(1)));
      for (std::size_t i = 1; i < up.size(); ++i) rho *= std::max(Rational(1), (up[i] + rn) / (low[i - 1] + rn));
      if (rho < Rational(1)) {
        // |t_n| carries at most n roundings; inflate by (1 + 2^-(w-8)).
        const Rational geometric = rho / (Rational(1) - rho);
        BigFloat bound_n = exact::bound::add(exact::abs(term).rounded(64),
                                               exact::bound::relative(term, w - 8 - static_cast<long>(std::log2(n + 2.0))));
        BigFloat g(64);
        mpfr_set_q(g.get(), geometric.value().get_mpq_t(), MPFR_RNDU);
        out.tail = exact::bound::mul(bound_n, g);
        if (out.tail <= exact::bound::mul(exact::abs(out.sum).rounded(64), target_scale)) break;
      }
    }

    if (n >= max_terms) throw NoConvergence("pFq: term budget of " + std::to_string(max_terms) + " exhausted");
    term = term.mul(ratio);
    out.sum += term;
    out.abs_sum += exact::abs(term);
  }

  // Term k carries k relative roundings of 2^-w, each addition one more.
  out.rounding = exact::bound::mul(exact::bound::relative(out.abs_sum, w), BigFloat(static_cast<long>(2 * n + 4), 64));
  return out;
}

}  // namespace

BoundedFloat pfq_eval(const PFQParams& params, mpfr_prec_t precision_bits, std::size_t max_terms) {
  const auto& up = params.upper;
  const auto& low = params.lower;
  if (up.size() != low.size() + 1)
    throw DomainError("pFq needs exactly one more upper than lower parameter");
  for (const auto& b : low)
    if (is_nonpositive_integer(b)) throw LowerParamPole("lower parameter " + b.str() + " is a nonpositive integer");

  const bool terminating = std::any_of(up.begin(), up.end(), is_nonpositive_integer);
  if (!terminating && exact::abs(params.z) >= Rational(1)) throw NoConvergence("|z| >= 1 outside the series domain");
  if (params.z.is_zero()) return BoundedFloat::exact(BigFloat(1, precision_bits));

  // Cancellation between terms costs log2(sum |t| / |sum|) bits; widen the
  // working precision by that much and resum.
  mpfr_prec_t w = precision_bits + kGuardBits;
  PartialSum ps = sum_pfq(params, precision_bits, w, max_terms);
  for (int attempt = 0; attempt < 4 && !ps.sum.is_zero(); ++attempt) {
    const BigFloat wanted = exact::bound::mul(exact::abs(ps.sum).rounded(64), BigFloat::exp2i(-(precision_bits + 1)));
    if (ps.rounding <= wanted) break;
    const long lost = mpfr_get_exp(ps.abs_sum.get()) - mpfr_get_exp(ps.sum.get()) + 1;
    w += static_cast<mpfr_prec_t>(std::max(lost, 1L)) + kGuardBits;
    ps = sum_pfq(params, precision_bits, w, max_terms);
  }
  BoundedFloat result{ps.sum, exact::bound::add(ps.tail, ps.rounding)};
  return result.rounded(precision_bits);
}

BoundedFloat rational_power(const Rational& base, const Rational& exponent, mpfr_prec_t precision_bits) {
  if (base.sign() < 0) throw DomainError("rational_power: negative base " + base.str());
  if (exponent.is_zero()) return BoundedFloat::exact(BigFloat(1, precision_bits));
  if (base.is_zero()) {
    if (exponent.sign() < 0) throw DomainError("rational_power: zero to a negative power");
    return BoundedFloat::exact(BigFloat(precision_bits));
  }
  if (exponent.is_integer() && exact::abs(exponent) <= Rational(4096))
    return BoundedFloat::from_rational(exact::pow(base, exponent.to_long()), precision_bits);

  const mpfr_prec_t w = precision_bits + kGuardBits;
  const BigFloat b(base, w);
  const BigFloat e(exponent, w);
  const BigFloat v = pow(b, e);
  const double ae = std::fabs(exponent.to_double());
  const double lb = std::fabs(std::log(base.to_double()));
  BoundedFloat out{v, error_with_factor(v, 2.0 * (1.0 + ae + ae * lb), w)};
  return out.rounded(precision_bits);
}

BoundedFloat gamma_at(const Rational& x, mpfr_prec_t precision_bits) {
  if (is_nonpositive_integer(x)) throw PoleError("Gamma pole at " + x.str());
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const BigFloat xf(x, w);
  const BigFloat v = gamma(xf);
  const BigFloat psi = digamma(xf.rounded(64));
  // |Gamma(x + dx) - Gamma(x)| ~ |Gamma(x) psi(x)| |dx| with |dx| <= |x| 2^-w.
  const double sensitivity = std::fabs(psi.to_double()) * std::fabs(x.to_double());
  BoundedFloat out{v, error_with_factor(v, 2.0 * (1.0 + sensitivity), w)};
  return out.rounded(precision_bits);
}

BoundedFloat incomplete_beta_numeric(const Rational& z, const Rational& alpha, const Rational& beta,
                                     mpfr_prec_t precision_bits) {
  if (z.sign() < 0 || z >= Rational(1)) throw DomainError("incomplete beta: z must lie in [0, 1)");
  if (alpha.sign() <= 0 || beta.sign() <= 0) throw DomainError("incomplete beta: alpha and beta must be positive");
  if (z.is_zero()) return BoundedFloat::exact(BigFloat(precision_bits));
  const mpfr_prec_t w = precision_bits + 16;
  const BoundedFloat prefactor = scale(rational_power(z, alpha, w), Rational(1) / alpha);
  const BoundedFloat f = pfq_eval({{alpha, Rational(1) - beta}, {alpha + Rational(1)}, z}, w);
  return (prefactor * f).rounded(precision_bits);
}

PiExtValue incomplete_beta_exact(const Rational& alpha) {
  if (alpha.sign() <= 0 || !alpha.is_half_integer_lattice())
    throw DomainError("incomplete_beta_exact: alpha must be a positive integer or half-integer, got " + alpha.str());
  // x^alpha (1-x)^(1/2) / (alpha + 1/2) at x = 1/4 is 2^{-2 alpha} (sqrt3/2) / (alpha + 1/2).
  const bool half = !alpha.is_integer();
  Rational current = half ? kHalf : Rational(1);
  PiExtValue value = half ? PiExtValue::of(PiExtValue::Basis::pi, Rational(1, 3))
                          : PiExtValue(2, -1, 0, 0);
  while (current < alpha) {
    const Rational denom = current + kHalf;
    const long two_alpha = (Rational(2) * current).to_long();
    const Rational x_pow = exact::pow(Rational(1, 2), two_alpha);
    value = value.scaled(current / denom) -
            PiExtValue::of(PiExtValue::Basis::sqrt3, x_pow * kHalf / denom);
    current += Rational(1);
  }
  return value;
}

Rational central_binomial_exact(const Rational& a) {
  if (!a.is_integer() || a.sign() <= 0) throw DomainError("central_binomial_exact needs an integer a >= 1");
  const long n = a.to_long();
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  return Rational(c);
}

BoundedFloat real_central_binomial(const Rational& a, mpfr_prec_t precision_bits) {
  if (on_half_integer_poles(a)) throw PoleError("C(2a, a) undefined for a = " + a.str());
  if (a.is_integer()) return BoundedFloat::from_rational(central_binomial_exact(a), precision_bits);
  const mpfr_prec_t w = precision_bits + 16;
  const BoundedFloat num = gamma_at(Rational(2) * a + Rational(1), w);
  const BoundedFloat den = gamma_at(a + Rational(1), w);
  return (num / (den * den)).rounded(precision_bits);
}

BoundedFloat reciprocal_central_binomial(const Rational& a, mpfr_prec_t precision_bits) {
  if (a.is_integer() && a.sign() <= 0) throw PoleError("1/C(2a, a) undefined for integer a = " + a.str());
  if (a.sign() < 0 && (Rational(2) * a).is_integer()) return BoundedFloat::exact(BigFloat(precision_bits));
  if (a.is_integer())
    return BoundedFloat::from_rational(Rational(1) / central_binomial_exact(a), precision_bits);
  const mpfr_prec_t w = precision_bits + 16;
  const BoundedFloat num = gamma_at(a + Rational(1), w);
  const BoundedFloat den = gamma_at(Rational(2) * a + Rational(1), w);
  return ((num * num) / den).rounded(precision_bits);
}

PiExtValue exact_gamma_ratio(const Rational& a) {
  if (a.sign() <= 0 || !a.is_half_integer_lattice())
    throw DomainError("exact_gamma_ratio: a must be a positive integer or half-integer, got " + a.str());
  if (a.is_integer()) return PiExtValue::rational(Rational(1) / central_binomial_exact(a));
  // a = m + 1/2: Gamma(m + 3/2) = (2m+1)!! / 2^{m+1} sqrt(pi), Gamma(2m+2) = (2m+1)!.
  const long m = (a - kHalf).to_long();
  mpz_class double_fact;
  mpz_2fac_ui(double_fact.get_mpz_t(), static_cast<unsigned long>(2 * m + 1));
  const Rational numerator(mpz_class(double_fact * double_fact));
  const Rational denominator =
      exact::pow(Rational(4), m + 1) * Rational(exact::factorial(2 * m + 1));
  return PiExtValue::of(PiExtValue::Basis::pi, numerator / denominator);
}

}  // namespace hlcbs::hyper

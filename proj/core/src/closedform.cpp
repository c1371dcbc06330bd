#include "hlcbs/closedform.hpp"

#include <string>

#include "hlcbs/errors.hpp"
#include "hlcbs/hyper.hpp"
#include "hlcbs/polyfam.hpp"

namespace hlcbs::closedform {

namespace {

constexpr mpfr_prec_t kGuardBits = 24;
const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

void validate(const Rational& a, const Rational& z) {
  if (a.sign() <= 0 && (Rational(2) * a).is_integer())
    throw DomainError("a must not lie in (1/2)Z_{<=0}, got " + a.str());
  if (z.sign() < 0 || z >= Rational(1)) throw DomainError("closed forms need 0 <= z < 1, got z = " + z.str());
}

void require_k(int k, int min) {
  if (k < min) throw DomainError("k must be at least " + std::to_string(min) + ", got " + std::to_string(k));
}

// (2z)^{2a} / C(2a, a)
BoundedFloat prefactor(const Rational& a, const Rational& z, mpfr_prec_t w) {
  return hyper::rational_power(Rational(2) * z, Rational(2) * a, w) * hyper::reciprocal_central_binomial(a, w);
}

BoundedFloat euler_2f1(const Rational& a, const Rational& x, mpfr_prec_t w) {
  return hyper::pfq_eval({{kHalf, a - kHalf}, {a + kHalf}, x}, w);
}

// 4^e for 2e an integer.
Rational four_pow(const Rational& e) { return exact::pow(Rational(2), (Rational(2) * e).to_long()); }

bool on_lattice(const Rational& a) { return a.sign() > 0 && a.is_half_integer_lattice(); }

}  // namespace

BoundedFloat phi_pos_hyper(int k, const Rational& a, const Rational& z, mpfr_prec_t precision_bits) {
  require_k(k, 1);
  validate(a, z);
  const mpfr_prec_t w = precision_bits + kGuardBits;
  hyper::PFQParams params{{Rational(1)}, {a + kHalf}, z * z};
  for (int i = 0; i < k; ++i) params.upper.push_back(a);
  for (int i = 1; i < k; ++i) params.lower.push_back(a + Rational(1));
  const BoundedFloat f = hyper::pfq_eval(params, w);
  return scale(prefactor(a, z, w) * f, exact::pow(a, -k)).rounded(precision_bits);
}

BoundedFloat phi_neg_hyper(int k, const Rational& a, const Rational& z, mpfr_prec_t precision_bits) {
  require_k(k, 1);
  validate(a, z);
  const mpfr_prec_t w = precision_bits + kGuardBits;
  hyper::PFQParams params{{Rational(1)}, {a + kHalf}, z * z};
  for (int i = 0; i < k; ++i) params.upper.push_back(a + Rational(1));
  for (int i = 1; i < k; ++i) params.lower.push_back(a);
  const BoundedFloat f = hyper::pfq_eval(params, w);
  return scale(prefactor(a, z, w) * f, exact::pow(a, k - 1)).rounded(precision_bits);
}

BoundedFloat phi_one_closed(const Rational& a, const Rational& z, mpfr_prec_t precision_bits) {
  validate(a, z);
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const Rational x = z * z;
  const BoundedFloat root = sqrt(BoundedFloat::from_rational(Rational(1) - x, w));
  const BoundedFloat value = scale(prefactor(a, z, w) * euler_2f1(a, x, w), Rational(1) / a) / root;
  return value.rounded(precision_bits);
}

BoundedFloat phi_neg_closed(int k, const Rational& a, const Rational& z, mpfr_prec_t precision_bits) {
  require_k(k, 0);
  validate(a, z);
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const Rational x = z * z;
  const Rational one_minus_x = Rational(1) - x;
  const Rational p_val = polyfam::p_a_poly(k - 1).eval(a, x);
  const Rational q_val = polyfam::q_poly(k - 1).eval(x);

  // Phi(1-k) = 2^{-k} (2z)^{2a} / (a C(2a,a))
  //            * ((2a-1) p (1-x)^{-k} + F q (1-x)^{-k-1/2})
  const Rational p_term = (Rational(2) * a - Rational(1)) * p_val / exact::pow(one_minus_x, k);
  const BoundedFloat root = sqrt(BoundedFloat::from_rational(one_minus_x, w));
  const BoundedFloat f_term = scale(euler_2f1(a, x, w), q_val / exact::pow(one_minus_x, k)) / root;
  const BoundedFloat bracket = BoundedFloat::from_rational(p_term, w) + f_term;
  const Rational outer = exact::pow(Rational(2), -k) / a;
  return scale(prefactor(a, z, w) * bracket, outer).rounded(precision_bits);
}

PiExtValue zeta_exact(int k, const Rational& a) {
  require_k(k, 0);
  if (!on_lattice(a))
    throw DomainError("zeta_exact needs a in {1/2, 1, 3/2, ...}, got " + a.str() + "; use zeta_structured");

  const Rational p_val = polyfam::p_a_poly(k - 1).eval(a, kQuarter);
  const Rational q_val = polyfam::q_poly(k - 1).eval(kQuarter);

  // 2F1(1/2, a-1/2; a+1/2; 1/4) = 4^{a-1} (2a-1) B(1/4; a-1/2, 1/2), and = 1 at a = 1/2.
  PiExtValue euler_value = PiExtValue::rational(1);
  if (a != kHalf)
    euler_value = hyper::incomplete_beta_exact(a - kHalf).scaled(four_pow(a - Rational(1)) * (Rational(2) * a - Rational(1)));

  // (2a-1) p + (2/sqrt3) F q with 2/sqrt3 = (2/3) sqrt3
  const PiExtValue bracket = PiExtValue::rational((Rational(2) * a - Rational(1)) * p_val) +
                             euler_value.scaled(exact::QSqrt3{0, Rational(2, 3) * q_val});
  const Rational outer = exact::pow(Rational(2, 3), k) / a;
  return hyper::exact_gamma_ratio(a) * bracket.scaled(outer);
}

BoundedFloat assemble(const ZetaStructured& form, mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const Rational& a = form.a;
  const BoundedFloat gamma_ratio = hyper::reciprocal_central_binomial(a, w);
  const BoundedFloat beta = hyper::incomplete_beta_numeric(kQuarter, a - kHalf, kHalf, w);
  const BoundedFloat sqrt3 = sqrt(BoundedFloat::from_rational(3, w));
  const BoundedFloat beta_part =
      scale(hyper::rational_power(4, a, w) * beta, form.beta_coefficient) / sqrt3;
  const BoundedFloat bracket = BoundedFloat::from_rational(form.rational_coefficient, w) + beta_part;
  return (gamma_ratio * bracket).rounded(precision_bits);
}

StructuredValue zeta_structured(int k, const Rational& a, mpfr_prec_t precision_bits) {
  require_k(k, 0);
  if (a <= kHalf) throw DomainError("zeta_structured needs a > 1/2, got " + a.str());
  ZetaStructured form;
  form.k = k;
  form.a = a;
  form.rational_part = polyfam::p_a_poly(k - 1).eval(a, kQuarter);
  form.q_part = polyfam::q_poly(k - 1).eval(kQuarter);
  const Rational common = (Rational(2) * a - Rational(1)) * exact::pow(Rational(2, 3), k);
  form.rational_coefficient = common * form.rational_part / a;
  form.beta_coefficient = common * form.q_part / (Rational(2) * a);
  BoundedFloat value = assemble(form, precision_bits);
  return {std::move(form), std::move(value)};
}

}  // namespace hlcbs::closedform

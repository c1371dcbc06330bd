#pragma once

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/piext.hpp"
#include "hlcbs/exact/rational.hpp"

// Closed forms of Phi(s, a, z) at integer s: the two k+1 F k
// representations, the Euler-transformed 2F1 form at s = 1, and the
// polynomial form at s = 1 - k. On the lattice a in {1/2, 1, 3/2, ...} the
// Hurwitz value zeta_HCB(1-k, a) is produced exactly.
//
// All numeric routines take 0 <= z < 1 and a outside (1/2)Z_{<=0}.
namespace hlcbs::closedform {

using exact::BigFloat;
using exact::BoundedFloat;
using exact::PiExtValue;
using exact::Rational;

// Phi(k, a, z) = (2z)^{2a} / (C(2a,a) a^k) * k+1Fk(1, a,...,a; a+1/2, a+1,...,a+1; z^2), k >= 1.
BoundedFloat phi_pos_hyper(int k, const Rational& a, const Rational& z, mpfr_prec_t precision_bits = 128);
// Phi(1-k, a, z) = (2z)^{2a} a^{k-1} / C(2a,a) * k+1Fk(1, a+1,...,a+1; a+1/2, a,...,a; z^2), k >= 1.
BoundedFloat phi_neg_hyper(int k, const Rational& a, const Rational& z, mpfr_prec_t precision_bits = 128);
// Phi(1, a, z) = (2z)^{2a} / (C(2a,a) a sqrt(1-z^2)) * 2F1(1/2, a-1/2; a+1/2; z^2).
BoundedFloat phi_one_closed(const Rational& a, const Rational& z, mpfr_prec_t precision_bits = 128);
// Phi(1-k, a, z) from
//   2^{k-1} Phi(1-k,a,z) = (2z)^{2a} / (2a C(2a,a) (1-z^2)^{k+1/2})
//     * ((2a-1) sqrt(1-z^2) p_{k-1}(a, z^2) + 2F1(1/2, a-1/2; a+1/2; z^2) q_{k-1}(z^2)),  k >= 0.
BoundedFloat phi_neg_closed(int k, const Rational& a, const Rational& z, mpfr_prec_t precision_bits = 128);

// Exact zeta_HCB(1-k, a) for a in {1/2, 1, 3/2, ...}. Integer a lands in
// Q + Q sqrt3 pi; half-integer a lands in Q pi + Q sqrt3 pi.
PiExtValue zeta_exact(int k, const Rational& a);

// zeta_HCB(1-k, a), a > 1/2, as
//   Gamma(a+1)^2/Gamma(2a+1) * (rational_coefficient
//       + 4^a/sqrt3 * B(1/4; a-1/2, 1/2) * beta_coefficient)
// where both coefficients are exact rationals.
struct ZetaStructured {
  int k = 0;
  Rational a;
  // p_{k-1}(a, 1/4)
  Rational rational_part;
  // q_{k-1}(1/4)
  Rational q_part;
  // (2a-1)(2/3)^k p_{k-1}(a,1/4) / a
  Rational rational_coefficient;
  // (2a-1)(2/3)^k q_{k-1}(1/4) / (2a)
  Rational beta_coefficient;
};

struct StructuredValue {
  ZetaStructured form;
  BoundedFloat value;
};

StructuredValue zeta_structured(int k, const Rational& a, mpfr_prec_t precision_bits = 128);

// Numeric assembly of a structured record.
BoundedFloat assemble(const ZetaStructured& form, mpfr_prec_t precision_bits);

}  // namespace hlcbs::closedform

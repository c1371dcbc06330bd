#include "hlcbs/series.hpp"

#include <string>

#include "hlcbs/errors.hpp"
#include "hlcbs/exact/unipoly.hpp"
#include "hlcbs/hyper.hpp"

namespace hlcbs::series {

namespace {

constexpr mpfr_prec_t kGuardBits = 40;

bool on_half_integer_poles(const Rational& a) { return a.sign() <= 0 && (Rational(2) * a).is_integer(); }

void validate(const SeriesQuery& q, bool allow_vanishing_prefix) {
  if (q.z.sign() < 0 || q.z >= Rational(1)) throw DomainError("series needs 0 <= z < 1, got z = " + q.z.str());
  if (q.precision_bits < 32) throw DomainError("precision_bits must be at least 32");
  if (q.a.is_integer() && q.a.sign() <= 0) throw DomainError("a must not be a nonpositive integer, got " + q.a.str());
  if (!allow_vanishing_prefix && on_half_integer_poles(q.a))
    throw DomainError("a must not lie in (1/2)Z_{<=0}, got " + q.a.str());
}

// m^(-s) including negative m for integer s.
BoundedFloat inverse_power(const Rational& m, const Rational& s, mpfr_prec_t w) {
  if (m.sign() >= 0) return hyper::rational_power(m, -s, w);
  if (!s.is_integer()) throw DomainError("(n+a)^s undefined for negative n+a = " + m.str() + " and non-integer s");
  BoundedFloat v = hyper::rational_power(-m, -s, w);
  return s.to_long() % 2 == 0 ? v : -v;
}

// Term n of the series at working precision w.
BoundedFloat term(const SeriesQuery& q, long n, mpfr_prec_t w) {
  const Rational m = q.a + Rational(n);
  BoundedFloat recip = hyper::reciprocal_central_binomial(m, w);
  if (recip.value.is_zero() && recip.error.is_zero()) return recip;
  const BoundedFloat geometric = hyper::rational_power(Rational(2) * q.z, Rational(2) * m, w);
  return geometric * recip * inverse_power(m, q.s, w);
}

// Upper bound on every later term ratio once m = n + a > 0:
//   t_{n+1}/t_n = 2z^2 (m+1)/(2m+1) (m/(m+1))^s
// where both factors are monotone decreasing in m (the second after
// replacing s < 0 by ceil(|s|)).
Rational ratio_majorant(const Rational& z, const Rational& m, const Rational& s) {
  Rational rho = Rational(2) * z * z * (m + Rational(1)) / (Rational(2) * m + Rational(1));
  if (s.sign() < 0) {
    const Rational abs_s = -s;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), abs_s.value().get_num_mpz_t(), abs_s.value().get_den_mpz_t());
    rho *= exact::pow((m + Rational(1)) / m, c.get_si());
  }
  return rho;
}

BoundedFloat sum_series(const SeriesQuery& q, bool allow_vanishing_prefix) {
  validate(q, allow_vanishing_prefix);
  const mpfr_prec_t w = q.precision_bits + kGuardBits;
  if (q.z.is_zero() && q.a.sign() > 0) return BoundedFloat::exact(BigFloat(q.precision_bits));

  const BigFloat target_scale = BigFloat::exp2i(-(q.precision_bits + 2));
  BoundedFloat sum = BoundedFloat::exact(BigFloat(w));
  for (long n = 0;; ++n) {
    if (static_cast<std::size_t>(n) >= q.max_terms)
      throw BudgetExceeded("series did not converge within " + std::to_string(q.max_terms) + " terms");
    const BoundedFloat t = term(q, n, w);
    sum = sum + t;

    const Rational m = q.a + Rational(n);
    if (m.sign() <= 0 || (t.value.is_zero() && t.error.is_zero())) continue;
    const Rational rho = ratio_majorant(q.z, m, q.s);
    if (rho >= Rational(1)) continue;

    BigFloat g(64);
    mpfr_set_q(g.get(), (rho / (Rational(1) - rho)).value().get_mpq_t(), MPFR_RNDU);
    const BigFloat t_abs = exact::bound::add(exact::abs(t.value).rounded(64), t.error);
    const BigFloat tail = exact::bound::mul(t_abs, g);
    if (tail <= exact::bound::mul(exact::abs(sum.value).rounded(64), target_scale)) {
      sum.error = exact::bound::add(sum.error, tail);
      return sum.rounded(q.precision_bits);
    }
  }
}

}  // namespace

BoundedFloat phi_numeric(const SeriesQuery& q) { return sum_series(q, false); }

BoundedFloat zeta_hcb_numeric(const Rational& s, const Rational& a, mpfr_prec_t precision_bits, std::size_t max_terms) {
  return phi_numeric({s, a, Rational(1, 2), precision_bits, max_terms});
}

std::vector<BigFloat> phi_partial_sums(const SeriesQuery& q, std::size_t count) {
  validate(q, false);
  const mpfr_prec_t w = q.precision_bits + kGuardBits;
  std::vector<BigFloat> out;
  out.reserve(count);
  BigFloat sum(w);
  for (std::size_t n = 0; n < count; ++n) {
    sum += term(q, static_cast<long>(n), w).value;
    out.push_back(sum.rounded(q.precision_bits));
  }
  return out;
}

CheckReport half_integer_shift_check(const Rational& s, int m, const Rational& z, mpfr_prec_t precision_bits,
                                     const std::optional<BigFloat>& tolerance) {
  if (m < 1) throw DomainError("half_integer_shift_check needs m >= 1");
  const Rational a = Rational(-m) + Rational(1, 2);
  ReportBuilder rb("half_shift", "s=" + s.str() + " m=" + std::to_string(m) + " z=" + z.str());

  // The first m terms must be exactly zero.
  for (long n = 0; n < m; ++n) {
    const BoundedFloat r = hyper::reciprocal_central_binomial(a + Rational(n), precision_bits);
    rb.exact(r.value.is_zero() && r.error.is_zero(), "term " + std::to_string(n) + " does not vanish");
  }

  const BoundedFloat shifted = sum_series({s, a, z, precision_bits, kDefaultMaxTerms}, true);
  const BoundedFloat base = phi_numeric({s, Rational(1, 2), z, precision_bits, kDefaultMaxTerms});
  const BigFloat tol = tolerance ? *tolerance : exact::bound::mul(exact::bound::add(shifted.error, base.error), BigFloat(2, 64));
  rb.numeric(shifted.deviation(base), tol, "Phi(s,-m+1/2,z) vs Phi(s,1/2,z)");
  return rb.finish();
}

CheckReport euler_operator_check(const Rational& s, const Rational& a, const Rational& z, const Rational& h,
                                 mpfr_prec_t precision_bits, const BigFloat& fd_tolerance) {
  if (h.sign() <= 0) throw DomainError("step h must be positive");
  if (z - h < Rational(0) || z + h >= Rational(1)) throw DomainError("z +- h must stay inside [0, 1)");
  ReportBuilder rb("diff_relation", "s=" + s.str() + " a=" + a.str() + " z=" + z.str() + " h=" + h.str());

  // Finite difference: (1/2) z (Phi(z+h) - Phi(z-h)) / (2h).
  const BoundedFloat up = phi_numeric({s, a, z + h, precision_bits, kDefaultMaxTerms});
  const BoundedFloat down = phi_numeric({s, a, z - h, precision_bits, kDefaultMaxTerms});
  const BoundedFloat lowered = phi_numeric({s - Rational(1), a, z, precision_bits, kDefaultMaxTerms});
  const BoundedFloat fd = scale(up - down, z / (Rational(4) * h));
  rb.numeric(fd.deviation(lowered), fd_tolerance, "central difference");

  // Term-wise: term_n(s) = c_n z^{2m} m^{-s} with m = n + a. Half theta_z
  // acts on the monomial only, while lowering s multiplies by m.
  for (long n = 0; n <= 20; ++n) {
    const Rational m = a + Rational(n);
    const Rational e = Rational(2) * m;
    bool held;
    if (e.is_integer() && e.sign() >= 0) {
      // Apply z d/dz to the explicit monomial z^e.
      const auto deg = static_cast<std::size_t>(e.to_long());
      const exact::UniPoly mono = exact::UniPoly::monomial(1, deg);
      const exact::UniPoly theta = exact::UniPoly::monomial(1, 1) * mono.derivative();
      const Rational lhs = theta.eval(z) * Rational(1, 2);
      const Rational rhs = m * mono.eval(z);
      held = lhs == rhs;
    } else {
      // Non-integer exponent: z d/dz z^e = e z^e.
      held = e * Rational(1, 2) == m;
    }
    rb.exact(held, "term " + std::to_string(n));
  }
  return rb.finish();
}

}  // namespace hlcbs::series

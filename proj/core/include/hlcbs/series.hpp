#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/rational.hpp"
#include "hlcbs/report.hpp"

// Direct summation of
//   Phi(s, a, z) = sum_{n>=0} (2z)^{2(n+a)} / (C(2(n+a), n+a) (n+a)^s)
// term by term from the definition. This is the reference every closed form
// is checked against, so it deliberately shares no code with the
// hypergeometric evaluator.
namespace hlcbs::series {

using exact::BigFloat;
using exact::BoundedFloat;
using exact::Rational;

inline constexpr std::size_t kDefaultMaxTerms = 10000;

struct SeriesQuery {
  Rational s;
  Rational a;
  // 0 <= z < 1; z = 1/2 gives zeta_HCB(s, a).
  Rational z;
  mpfr_prec_t precision_bits = 128;
  std::size_t max_terms = kDefaultMaxTerms;
};

// Throws DomainError for a in (1/2)Z_{<=0}, z outside [0,1), or a negative
// n+a with non-integer s; BudgetExceeded if the tail bound does not reach
// 2^-(precision+2) |sum| within max_terms.
BoundedFloat phi_numeric(const SeriesQuery& q);

BoundedFloat zeta_hcb_numeric(const Rational& s, const Rational& a, mpfr_prec_t precision_bits = 128,
                              std::size_t max_terms = kDefaultMaxTerms);

// Partial sums S_0, ..., S_{count-1} (value only).
std::vector<BigFloat> phi_partial_sums(const SeriesQuery& q, std::size_t count);

// Phi(s, -m + 1/2, z) == Phi(s, 1/2, z): the first m terms vanish since the
// reciprocal binomial has Gamma poles there.
// `tolerance` replaces the default of twice the summed error bounds.
CheckReport half_integer_shift_check(const Rational& s, int m, const Rational& z, mpfr_prec_t precision_bits = 128,
                                     const std::optional<BigFloat>& tolerance = std::nullopt);

// (1/2) theta_z Phi(s,a,z) == Phi(s-1,a,z), checked two ways: a central
// difference with step h against `fd_tolerance`, and term-wise in exact
// arithmetic for n <= 20.
CheckReport euler_operator_check(const Rational& s, const Rational& a, const Rational& z, const Rational& h,
                                 mpfr_prec_t precision_bits = 128, const BigFloat& fd_tolerance = BigFloat::from_double(1e-8, 64));

}  // namespace hlcbs::series

#include <doctest.h>

#include "hlcbs/errors.hpp"
#include "hlcbs/hyper.hpp"
#include "hlcbs/series.hpp"
#include "support.hpp"

using namespace hlcbs;
using namespace hlcbs::series;
using exact::BigFloat;
using testing::encloses;
using testing::Gen;

namespace {
BoundedFloat phi(const Rational& s, const Rational& a, const Rational& z, mpfr_prec_t p = 128) {
  return phi_numeric({s, a, z, p, kDefaultMaxTerms});
}
}  // namespace

TEST_CASE("reference values") {
  CHECK(encloses(phi(1, 1, Rational(1, 2)), "0.60459978807807261686469275254738524409468874936425"));
  CHECK(encloses(phi(1, 1, Rational(3, 10)), "0.19164281343893935178419033929418601769802681234505"));
  CHECK(encloses(zeta_hcb_numeric(-3, 2), "4.4903846043621249499254542106854262245558136093687"));
  CHECK(encloses(zeta_hcb_numeric(1, Rational(3, 2)), "0.24300303743932123136275656600240429018548154840519"));
  CHECK(encloses(zeta_hcb_numeric(-2, Rational(7, 2)), "0.58106059025383417309589727898298245587339931994346"));
  CHECK(encloses(zeta_hcb_numeric(0, Rational(5, 4)), "0.56143602803876795774452611249646112297446043575082"));
  CHECK(zeta_hcb_numeric(1, 1).error.to_double() < 1e-37);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(phi(1, 0, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(phi(1, -2, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(phi(1, Rational(-1, 2), Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(phi(1, 1, 1), DomainError);
  CHECK_THROWS_AS(phi(1, 1, Rational(-1, 5)), DomainError);
  // Negative n + a needs an integer s for (n+a)^s to be real.
  CHECK_THROWS_AS(phi(Rational(1, 2), Rational(-4, 3), Rational(1, 2)), DomainError);
  CHECK_NOTHROW(phi(2, Rational(-4, 3), Rational(1, 2)));
  CHECK_THROWS_AS(phi_numeric({1, 1, Rational(9, 10), 128, 5}), BudgetExceeded);
}

TEST_CASE("z = 0 and the first term") {
  const BoundedFloat zero = phi(1, Rational(3, 2), 0);
  CHECK(zero.value.is_zero());
  CHECK(zero.error.is_zero());
  // For tiny z the sum is its first term (2z)^{2a} / (C(2a,a) a^s) up to O(z^2) relative.
  const Rational z = exact::pow(Rational(10), -6);
  const Rational a(5, 4);
  const BoundedFloat first =
      hyper::rational_power(Rational(2) * z, Rational(2) * a, 128) * hyper::reciprocal_central_binomial(a, 128) *
      hyper::rational_power(a, -2, 128);
  const BoundedFloat full = phi(2, a, z);
  CHECK(full.deviation(first) <= exact::bound::mul(abs(first.value), BigFloat::from_double(1e-11)));
}

TEST_CASE("partial sums are monotone when every term is positive") {
  Gen g(41);
  for (int i = 0; i < 20; ++i) {
    const Rational s(g.integer(-4, 1));
    const Rational a = g.positive(30, 6);
    const Rational z = g.unit(12);
    const auto sums = phi_partial_sums({s, a, z, 96, kDefaultMaxTerms}, 40);
    REQUIRE(sums.size() == 40);
    for (std::size_t n = 1; n < sums.size(); ++n) CHECK(sums[n - 1] <= sums[n]);
  }
}

TEST_CASE("error bounds are honest under precision doubling") {
  Gen g(42);
  for (int i = 0; i < 30; ++i) {
    const Rational s(g.integer(-5, 3));
    const Rational a = g.positive(40, 8);
    const Rational z = g.unit(12);
    CAPTURE(s);
    CAPTURE(a);
    CAPTURE(z);
    const BoundedFloat lo = phi(s, a, z, 100);
    const BoundedFloat hi = phi(s, a, z, 200);
    CHECK(lo.deviation(hi) <= lo.error);
  }
}

TEST_CASE("unit shift in a drops the first term") {
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2)})
    for (int s = -2; s <= 1; ++s) {
      const BoundedFloat next = zeta_hcb_numeric(s, a + Rational(1), 160);
      const BoundedFloat first = hyper::reciprocal_central_binomial(a, 160) * hyper::rational_power(a, Rational(-s), 160);
      const BoundedFloat here = zeta_hcb_numeric(s, a, 160) - first;
      CHECK(next.deviation(here) <= exact::bound::add(next.error, here.error));
    }
}

TEST_CASE("half-integer shift collapses onto a = 1/2") {
  const CheckReport r1 = half_integer_shift_check(1, 1, Rational(2, 5));
  const CheckReport r2 = half_integer_shift_check(0, 2, Rational(1, 4));
  const CheckReport r3 = half_integer_shift_check(2, 3, Rational(1, 2));
  for (const CheckReport* r : {&r1, &r2, &r3}) {
    CHECK(r->passed);
    CHECK(r->comparisons > 1);
    REQUIRE(r->max_abs_deviation.has_value());
    CHECK(*r->max_abs_deviation <= *r->tolerance);
  }
  CHECK_THROWS_AS(half_integer_shift_check(1, 0, Rational(1, 2)), DomainError);
  const CheckReport strict = half_integer_shift_check(1, 1, Rational(2, 5), 128, BigFloat(64));
  CHECK(strict.tolerance->is_zero());
  CHECK(strict.passed == strict.max_abs_deviation->is_zero());
}

TEST_CASE("Euler operator lowers s") {
  const Rational h = exact::pow(Rational(2), -20);
  const CheckReport r = euler_operator_check(1, 1, Rational(1, 4), h);
  CHECK(r.passed);
  CHECK(r.comparisons == 22);
  CHECK(r.max_abs_deviation->to_double() <= 1e-8);
  CHECK(euler_operator_check(0, Rational(3, 2), Rational(3, 10), h).passed);
  CHECK(euler_operator_check(-2, Rational(7, 3), Rational(1, 2), h).passed);
  // h = 1/8 is far too coarse for a 1e-8 budget.
  CHECK(!euler_operator_check(1, 1, Rational(1, 4), Rational(1, 8)).passed);
  CHECK_THROWS_AS(euler_operator_check(1, 1, Rational(1, 4), Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(euler_operator_check(1, 1, Rational(1, 4), 0), DomainError);
}

#include <doctest.h>

#include "hlcbs/closedform.hpp"
#include "hlcbs/errors.hpp"
#include "hlcbs/hyper.hpp"
#include "hlcbs/polyfam.hpp"
#include "hlcbs/series.hpp"
#include "support.hpp"

using namespace hlcbs;
using namespace hlcbs::closedform;
using exact::BigFloat;
using Basis = PiExtValue::Basis;
using testing::encloses;
using testing::Gen;

namespace {

BoundedFloat phi(const Rational& s, const Rational& a, const Rational& z, mpfr_prec_t p = 128) {
  return series::phi_numeric({s, a, z, p, series::kDefaultMaxTerms});
}

bool agree(const BoundedFloat& x, const BoundedFloat& y) {
  return x.deviation(y) <= exact::bound::mul(exact::bound::add(x.error, y.error), BigFloat(2, 64));
}

const BigFloat k1em20 = BigFloat::from_double(1e-20);

}  // namespace

TEST_CASE("hypergeometric forms at listed points") {
  const Rational z03(3, 10);
  CHECK(agree(phi_pos_hyper(1, 1, z03), phi(1, 1, z03)));
  CHECK(phi_pos_hyper(2, 1, 0).value.is_zero());
  CHECK(encloses(phi_pos_hyper(1, Rational(3, 2), Rational(1, 2)), "0.24300303743932123136275656600240429018548154840519"));
  CHECK(agree(phi_neg_hyper(1, 1, z03), phi(0, 1, z03)));
  CHECK(agree(phi_neg_hyper(2, 2, Rational(1, 4)), phi(-1, 2, Rational(1, 4))));
  CHECK(phi_neg_hyper(3, Rational(5, 4), 0).value.is_zero());
  CHECK_THROWS_AS(phi_pos_hyper(0, 1, z03), DomainError);
  CHECK_THROWS_AS(phi_neg_hyper(1, Rational(-3, 2), z03), DomainError);
  CHECK_THROWS_AS(phi_pos_hyper(1, 1, 1), DomainError);
}

TEST_CASE("s = 1 closed form") {
  CHECK(encloses(phi_one_closed(1, Rational(3, 10)), "0.19164281343893935178419033929418601769802681234505"));
  // a = 1/2: the 2F1 factor is 1 and C(1,1/2) = 4/pi.
  CHECK(encloses(phi_one_closed(Rational(1, 2), Rational(2, 5)), "1.3711034416945150746446365837692832205569045051144"));
  CHECK(phi_one_closed(Rational(7, 3), 0).value.is_zero());
  CHECK(agree(phi_one_closed(Rational(7, 3), Rational(4, 5)), phi(1, Rational(7, 3), Rational(4, 5))));
}

TEST_CASE("polynomial closed form") {
  for (const Rational& a : {Rational(1, 2), Rational(1), Rational(9, 7)})
    for (const Rational& z : {Rational(0), Rational(1, 5), Rational(2, 3)})
      CHECK(phi_neg_closed(0, a, z).deviation(phi_one_closed(a, z)) <=
            exact::bound::add(phi_neg_closed(0, a, z).error, phi_one_closed(a, z).error));
  CHECK(encloses(phi_neg_closed(4, 2, Rational(1, 2)), "4.4903846043621249499254542106854262245558136093687"));
  CHECK(agree(phi_neg_closed(2, Rational(3, 2), Rational(7, 20)), phi(-1, Rational(3, 2), Rational(7, 20))));
  CHECK_THROWS_AS(phi_neg_closed(-1, 1, Rational(1, 2)), DomainError);
}

TEST_CASE("ladder of representations agrees with the series") {
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2)})
    for (const Rational& z : {Rational(1, 5), Rational(1, 2)})
      for (int k = 1; k <= 3; ++k) {
        CAPTURE(a);
        CAPTURE(z);
        CAPTURE(k);
        CHECK(phi_pos_hyper(k, a, z).deviation(phi(k, a, z)) <= k1em20);
        CHECK(phi_neg_hyper(k, a, z).deviation(phi(1 - k, a, z)) <= k1em20);
        CHECK(phi_neg_closed(k, a, z).deviation(phi(1 - k, a, z)) <= k1em20);
      }
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2)})
    for (const Rational& z : {Rational(1, 5), Rational(1, 2)}) CHECK(phi_one_closed(a, z).deviation(phi(1, a, z)) <= k1em20);
}

TEST_CASE("closed forms at seeded parameters, including negative a") {
  Gen g(51);
  for (int i = 0; i < 25; ++i) {
    Rational a = g.rational(30, 7);
    if (a.sign() <= 0 && (Rational(2) * a).is_integer()) a += Rational(1, 3);
    const Rational z = Rational(1, 20) + g.unit(10) * Rational(4, 5);
    const int k = static_cast<int>(g.integer(0, 4));
    CAPTURE(a);
    CAPTURE(z);
    CAPTURE(k);
    CHECK(agree(phi_neg_closed(k, a, z), phi(1 - k, a, z)));
    if (k >= 1) {
      CHECK(agree(phi_neg_hyper(k, a, z), phi(1 - k, a, z)));
      CHECK(agree(phi_pos_hyper(k, a, z), phi(k, a, z)));
    }
  }
}

TEST_CASE("exact zeta values") {
  CHECK(zeta_exact(0, 1) == PiExtValue::of(Basis::sqrt3_pi, Rational(1, 9)));
  CHECK(zeta_exact(4, 2).str() == "17/6 + 74/243*sqrt3*pi");
  CHECK(zeta_exact(0, Rational(3, 2)) == PiExtValue(0, 0, Rational(-1, 2), Rational(1, 3)));
  CHECK(zeta_exact(3, Rational(7, 2)) == PiExtValue(0, 0, Rational(-935, 2048), Rational(10, 27)));
  CHECK(zeta_exact(0, Rational(1, 2)) == PiExtValue::of(Basis::sqrt3_pi, Rational(1, 3)));
  CHECK_THROWS_AS(zeta_exact(1, Rational(5, 4)), DomainError);
  CHECK_THROWS_AS(zeta_exact(1, 0), DomainError);
  CHECK_THROWS_AS(zeta_exact(1, Rational(-1, 2)), DomainError);
  CHECK_THROWS_AS(zeta_exact(-1, 1), DomainError);
}

TEST_CASE("exact zeta values: basis shape, numeric match and unit shift") {
  for (long t = 1; t <= 8; ++t) {
    const Rational a(t, 2);
    for (int k = 0; k <= 8; ++k) {
      CAPTURE(a);
      CAPTURE(k);
      const PiExtValue v = zeta_exact(k, a);
      if (a.is_integer()) {
        CHECK(v.c_sqrt3().is_zero());
        CHECK(v.c_pi().is_zero());
      } else {
        CHECK(v.c_one().is_zero());
        CHECK(v.c_sqrt3().is_zero());
      }
      CHECK(exact::to_float(v, 128).deviation(series::zeta_hcb_numeric(1 - k, a)).to_double() < 1e-30);
      // zeta(1-k, a+1) = zeta(1-k, a) - a^{k-1} / C(2a, a)
      CHECK(zeta_exact(k, a + Rational(1)) == v - hyper::exact_gamma_ratio(a).scaled(exact::pow(a, k - 1)));
    }
  }
}

TEST_CASE("structured zeta values") {
  const StructuredValue st = zeta_structured(0, Rational(3, 2));
  CHECK(st.form.rational_part.is_zero());
  CHECK(st.form.q_part == 1);
  CHECK(encloses(st.value, "0.24300303743932123136275656600240429018548154840519"));
  CHECK(agree(zeta_structured(1, Rational(5, 4)).value, series::zeta_hcb_numeric(0, Rational(5, 4))));
  CHECK(zeta_structured(1, Rational(5, 4)).form.rational_coefficient == Rational(4, 5));
  CHECK_THROWS_AS(zeta_structured(1, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(zeta_structured(1, Rational(1, 3)), DomainError);

  Gen g(52);
  for (int i = 0; i < 20; ++i) {
    const Rational a = Rational(1, 2) + g.positive(30, 9);
    const int k = static_cast<int>(g.integer(0, 6));
    CAPTURE(a);
    CAPTURE(k);
    const StructuredValue sv = zeta_structured(k, a);
    CHECK(sv.form.rational_part == polyfam::p_a_poly(k - 1).eval(a, Rational(1, 4)));
    CHECK(agree(sv.value, series::zeta_hcb_numeric(1 - k, a)));
    CHECK(agree(assemble(sv.form, 200), sv.value));
  }
}

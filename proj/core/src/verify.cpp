#include "hlcbs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "hlcbs/closedform.hpp"
#include "hlcbs/errors.hpp"
#include "hlcbs/hyper.hpp"
#include "hlcbs/polyfam.hpp"
#include "hlcbs/series.hpp"

namespace hlcbs::verify {

using exact::BigFloat;
using exact::BoundedFloat;
using exact::PiExtValue;
using exact::Rational;
using Basis = PiExtValue::Basis;

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

// Grids shared by several checks.
const std::vector<Rational> kOracleA = {Rational(1, 2), Rational(1), Rational(5, 4),
                                        Rational(3, 2), Rational(2), Rational(7, 2)};
const std::vector<Rational> kOracleZ = {Rational(1, 5), Rational(1, 2)};

std::vector<Rational> lattice_up_to(long twice_max) {
  std::vector<Rational> out;
  for (long t = 1; t <= twice_max; ++t) out.emplace_back(t, 2);
  return out;
}

std::string at(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string s;
  for (const auto& [k, v] : fields) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

class Ctx {
 public:
  Ctx(const VerifyConfig& cfg, std::string id, std::string grid) : cfg_(cfg), rb_(std::move(id), std::move(grid), cfg.seed) {}

  mpfr_prec_t prec() const { return cfg_.precision_bits; }
  int n_max(int fallback) const { return cfg_.max_n.value_or(fallback); }
  std::uint64_t seed() const { return cfg_.seed; }
  ReportBuilder& rb() { return rb_; }

  void exact(bool held, const std::string& what) { rb_.exact(held, what); }

  // Bound-calibrated comparison: twice the summed error bounds.
  void compare(const BoundedFloat& lhs, const BoundedFloat& rhs, const std::string& what) {
    const BigFloat tol = cfg_.tolerance
                             ? *cfg_.tolerance
                             : exact::bound::mul(exact::bound::add(lhs.error, rhs.error), BigFloat(2, 64));
    rb_.numeric(lhs.deviation(rhs), tol, what);
  }

  // Comparison against a fixed tolerance (finite differences).
  void compare_within(const BoundedFloat& lhs, const BoundedFloat& rhs, double fixed, const std::string& what) {
    rb_.numeric(lhs.deviation(rhs), fixed_tolerance(fixed), what);
  }

  BigFloat fixed_tolerance(double fixed) const {
    return cfg_.tolerance ? *cfg_.tolerance : BigFloat::from_double(fixed, 64);
  }

  const std::optional<BigFloat>& tolerance_override() const { return cfg_.tolerance; }

  CheckReport finish() { return rb_.finish(); }

 private:
  const VerifyConfig& cfg_;
  ReportBuilder rb_;
};

BoundedFloat phi(const Rational& s, const Rational& a, const Rational& z, mpfr_prec_t prec) {
  return series::phi_numeric({s, a, z, prec, series::kDefaultMaxTerms});
}

// arcsin(z) for rational 0 <= z < 1 with a bound covering both the
// rounding of z and of the result.
BoundedFloat asin_bounded(const Rational& z, mpfr_prec_t w) {
  const BoundedFloat zf = BoundedFloat::from_rational(z, w);
  BoundedFloat out{asin(zf.value), BigFloat(64)};
  const BigFloat slope = BigFloat(2, 64) / sqrt(BigFloat(Rational(1) - z * z, 64));
  out.error = exact::bound::add(exact::bound::rounding(out.value), exact::bound::mul(zf.error, slope));
  return out;
}

// ---------------------------------------------------------------------------

CheckReport check_lehmer1(const VerifyConfig& cfg) {
  const std::vector<Rational> zs = {0, Rational(1, 10), Rational(1, 5), Rational(3, 10),
                                    Rational(1, 2), Rational(7, 10), Rational(9, 10)};
  Ctx c(cfg, "lehmer1", "s=1 a=1 z in {0,1/10,1/5,3/10,1/2,7/10,9/10}");
  const mpfr_prec_t w = c.prec() + 24;
  for (const Rational& z : zs) {
    const BoundedFloat lhs = phi(1, 1, z, c.prec());
    const BoundedFloat root = sqrt(BoundedFloat::from_rational(Rational(1) - z * z, w));
    const BoundedFloat rhs = (scale(asin_bounded(z, w), Rational(2) * z) / root).rounded(c.prec());
    c.compare(lhs, rhs, at({{"z", z.str()}}));
  }
  return c.finish();
}

CheckReport check_lehmer2(const VerifyConfig& cfg) {
  const std::vector<Rational> zs = {Rational(1, 5), Rational(3, 10), Rational(1, 2), Rational(7, 10)};
  Ctx c(cfg, "lehmer2", "k=0..6 z in {1/5,3/10,1/2,7/10}; exact zeta_CB(1-k) k=0..8");
  const mpfr_prec_t w = c.prec() + 24;
  for (int k = 0; k <= c.n_max(6); ++k) {
    const exact::UniPoly p = polyfam::p_poly(k - 1);
    const exact::UniPoly q = polyfam::q_poly(k - 1);
    for (const Rational& z : zs) {
      // sum_{n>=1} (2n)^{k-1} (2z)^{2n} / C(2n,n) = 2^{k-1} Phi(1-k, 1, z)
      const BoundedFloat lhs = scale(phi(Rational(1 - k), 1, z, c.prec()), exact::pow(Rational(2), k - 1));
      const Rational x = z * z;
      const BoundedFloat root = sqrt(BoundedFloat::from_rational(Rational(1) - x, w));
      const BoundedFloat bracket =
          scale(root, z * p.eval(x)) + scale(asin_bounded(z, w), q.eval(x));
      const BoundedFloat rhs = scale(bracket / root, z / exact::pow(Rational(1) - x, k)).rounded(c.prec());
      c.compare(lhs, rhs, at({{"k", std::to_string(k)}, {"z", z.str()}}));
    }
  }
  // zeta_CB(1-k) = (2/3)^k (p_{k-1}(1/4)/2 + pi/(3 sqrt3) q_{k-1}(1/4)), pi/(3 sqrt3) = sqrt3 pi / 9.
  for (int k = 0; k <= c.n_max(8); ++k) {
    const Rational scale_k = exact::pow(Rational(2, 3), k);
    const PiExtValue expected =
        PiExtValue::rational(scale_k * polyfam::p_poly(k - 1).eval(kQuarter) / Rational(2)) +
        PiExtValue::of(Basis::sqrt3_pi, scale_k * polyfam::q_poly(k - 1).eval(kQuarter) / Rational(9));
    const PiExtValue got = closedform::zeta_exact(k, 1);
    c.exact(got == expected, "zeta_CB(" + std::to_string(1 - k) + ") = " + got.str());
    c.exact(got.c_sqrt3().is_zero() && got.c_pi().is_zero(), "zeta_CB(" + std::to_string(1 - k) + ") outside Q + Q pi/sqrt3");
  }
  return c.finish();
}

CheckReport check_prop1(const VerifyConfig& cfg, bool positive) {
  const std::vector<Rational> zs = {0, Rational(1, 5), Rational(3, 10), Rational(1, 2)};
  Ctx c(cfg, positive ? "prop1_pos" : "prop1_neg", "k=1..3 a in {1/2,1,5/4,3/2,2,7/2} z in {0,1/5,3/10,1/2}");
  for (int k = 1; k <= 3; ++k)
    for (const Rational& a : kOracleA)
      for (const Rational& z : zs) {
        const Rational s = positive ? Rational(k) : Rational(1 - k);
        const BoundedFloat hyp = positive ? closedform::phi_pos_hyper(k, a, z, c.prec())
                                          : closedform::phi_neg_hyper(k, a, z, c.prec());
        c.compare(hyp, phi(s, a, z, c.prec()), at({{"k", std::to_string(k)}, {"a", a.str()}, {"z", z.str()}}));
      }
  return c.finish();
}

CheckReport check_diff_relation(const VerifyConfig& cfg) {
  struct Point {
    Rational s, a, z;
  };
  const std::vector<Point> grid = {{1, 1, Rational(1, 4)},
                                   {0, Rational(3, 2), Rational(3, 10)},
                                   {2, Rational(5, 4), Rational(1, 2)},
                                   {-1, 2, Rational(2, 5)},
                                   {1, Rational(1, 2), Rational(1, 5)}};
  Ctx c(cfg, "diff_relation", "(s,a,z) in {(1,1,1/4),(0,3/2,3/10),(2,5/4,1/2),(-1,2,2/5),(1,1/2,1/5)} h=2^-20");
  const Rational h = exact::pow(Rational(2), -20);
  for (const Point& pt : grid)
    c.rb().absorb(series::euler_operator_check(pt.s, pt.a, pt.z, h, c.prec(), c.fixed_tolerance(1e-8)));
  return c.finish();
}

CheckReport check_euler_transform(const VerifyConfig& cfg) {
  const std::vector<Rational> zs = {Rational(1, 5), Rational(2, 5), Rational(1, 2), Rational(3, 4)};
  const std::vector<Rational> random_a = random_parameters(cfg.seed, 10);
  Ctx c(cfg, "thm31", "closed form: a in {1/2,1,5/4,3/2,2,7/2} + 3 seeded, z in {1/5,2/5,1/2,3/4}; coefficients: n<=30, 10 seeded a");
  std::vector<Rational> as = kOracleA;
  as.insert(as.end(), random_a.begin(), random_a.begin() + 3);
  for (const Rational& a : as)
    for (const Rational& z : zs)
      c.compare(closedform::phi_one_closed(a, z, c.prec()), phi(1, a, z, c.prec()), at({{"a", a.str()}, {"z", z.str()}}));

  for (const Rational& a : random_a)
    for (int n = 0; n <= c.n_max(30); ++n) {
      const std::string where = at({{"a", a.str()}, {"n", std::to_string(n)}});
      c.exact(euler_coefficient_gap(n, a).is_zero(), "factored coefficient nonzero at " + where);
      c.exact(euler_cauchy_gap(n, a).is_zero(), "Cauchy coefficient nonzero at " + where);
    }
  return c.finish();
}

CheckReport check_ode_phi1(const VerifyConfig& cfg) {
  const std::vector<Rational> as = {Rational(1, 2), 1, Rational(3, 2), 2};
  const std::vector<Rational> zs = {Rational(1, 5), Rational(2, 5)};
  Ctx c(cfg, "ode_phi1", "a in {1/2,1,3/2,2} z in {1/5,2/5} h=2^-20");
  const Rational h = exact::pow(Rational(2), -20);
  const mpfr_prec_t w = c.prec() + 24;
  for (const Rational& a : as)
    for (const Rational& z : zs) {
      // y = a C(2a,a) 4^{-a} Phi(1,a,z) solves ((1-z^2) z d/dz - 1) y = (2a-1) z^{2a}.
      const BoundedFloat norm = scale(hyper::rational_power(4, -a, w), a) / hyper::reciprocal_central_binomial(a, w);
      const BoundedFloat y = phi(1, a, z, w);
      const BoundedFloat dy = scale(phi(1, a, z + h, w) - phi(1, a, z - h, w), Rational(1) / (Rational(2) * h));
      const BoundedFloat lhs = norm * (scale(dy, (Rational(1) - z * z) * z) - y);
      const BoundedFloat rhs = scale(hyper::rational_power(z, Rational(2) * a, w), Rational(2) * a - Rational(1));
      c.compare_within(lhs, rhs, 1e-8, at({{"a", a.str()}, {"z", z.str()}}));
    }
  return c.finish();
}

CheckReport check_zenka(const VerifyConfig& cfg) {
  struct Point {
    int k;
    Rational a, z;
  };
  std::vector<Point> grid;
  for (int k = 0; k <= 4; ++k)
    for (const Rational& a : kOracleA)
      for (const Rational& z : kOracleZ) grid.push_back({k, a, z});
  grid.push_back({2, Rational(3, 2), Rational(7, 20)});
  grid.push_back({3, Rational(7, 3), Rational(3, 5)});
  grid.push_back({1, Rational(2, 7), Rational(9, 10)});
  Ctx c(cfg, "zenka", "k=0..4 a in {1/2,1,5/4,3/2,2,7/2} z in {1/5,1/2}; (2,3/2,7/20) (3,7/3,3/5) (1,2/7,9/10)");
  for (const Point& pt : grid)
    c.compare(closedform::phi_neg_closed(pt.k, pt.a, pt.z, c.prec()), phi(Rational(1 - pt.k), pt.a, pt.z, c.prec()),
              at({{"k", std::to_string(pt.k)}, {"a", pt.a.str()}, {"z", pt.z.str()}}));
  return c.finish();
}

CheckReport check_ptoE(const VerifyConfig& cfg) {
  Ctx c(cfg, "ptoE", "n=0..8");
  for (int n = 0; n <= c.n_max(8); ++n)
    c.exact(polyfam::p_from_eulerian(n) == polyfam::p_a_poly(n), "n=" + std::to_string(n));
  return c.finish();
}

CheckReport check_bm_p(const VerifyConfig& cfg) {
  Ctx c(cfg, "bm_p", "n=0..8");
  for (int n = 0; n <= c.n_max(8); ++n)
    c.exact(polyfam::bm_p_poly(n) == polyfam::p_poly(n), "n=" + std::to_string(n));
  return c.finish();
}

CheckReport check_bm_q(const VerifyConfig& cfg) {
  Ctx c(cfg, "bm_q", "n=0..8; Eulerian recursion vs generating function n=0..8");
  for (int n = 0; n <= c.n_max(8); ++n) {
    c.exact(polyfam::bm_q_poly(n) == polyfam::q_poly(n - 1), "2^n E_n(x,1/2) vs q_{n-1}, n=" + std::to_string(n));
    c.exact(polyfam::eulerian(n) == polyfam::eulerian_gf_oracle(n), "E_n recursion vs series, n=" + std::to_string(n));
  }
  return c.finish();
}

CheckReport check_bm1(const VerifyConfig& cfg) {
  Ctx c(cfg, "bm1", "n=0..10");
  for (int n = 0; n <= c.n_max(10); ++n) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += polyfam::poly_bernoulli(n - k, -k);
    const Rational lhs = exact::pow(Rational(2, 3), n) * polyfam::p_poly(n).eval(kQuarter);
    c.exact(lhs == sum, "n=" + std::to_string(n) + ": " + lhs.str() + " vs " + sum.str());
    if (n == 3) c.exact(sum == Rational(10), "n=3 sum is " + sum.str());
  }
  return c.finish();
}

CheckReport check_p_at(const VerifyConfig& cfg, int a) {
  Ctx c(cfg, a == 0 ? "p0_is_q" : "p1_is_p", "n=0..8");
  for (int n = 0; n <= c.n_max(8); ++n) {
    const exact::UniPoly got = polyfam::p_a_poly(n).substitute_param(a);
    c.exact(got == (a == 0 ? polyfam::q_poly(n) : polyfam::p_poly(n)), "n=" + std::to_string(n) + ": " + got.str("x"));
  }
  return c.finish();
}

CheckReport check_alpha_rec(const VerifyConfig& cfg) {
  std::vector<Rational> as = {0, kHalf, 1, 2};
  const std::vector<Rational> random_a = random_parameters(cfg.seed, 10);
  as.insert(as.end(), random_a.begin(), random_a.end());
  Ctx c(cfg, "alpha_rec", "n=0..8 a in {0,1/2,1,2} + 10 seeded");
  for (const Rational& a : as)
    for (int n = 0; n <= c.n_max(8); ++n) {
      const Rational rhs = exact::pow(Rational(2, 3), n) * polyfam::p_a_poly(n).eval(a, kQuarter);
      c.exact(polyfam::alpha(n, a) == rhs, at({{"a", a.str()}, {"n", std::to_string(n)}}));
    }
  return c.finish();
}

CheckReport check_zetatokushu(const VerifyConfig& cfg) {
  const std::vector<Rational> random_a = random_parameters(cfg.seed, 10);
  std::vector<Rational> as = {Rational(5, 4), Rational(3, 2), 2, Rational(7, 3), Rational(7, 2)};
  for (const Rational& a : random_a)
    if (a > kHalf && as.size() < 8) as.push_back(a);
  Ctx c(cfg, "zetatokushu",
        "structured: k=0..8 a in {5/4,3/2,2,7/3,7/2} + 3 seeded; exact: k=0..8 a in {1/2,1,...,4}; beta: alpha in {1/2,...,4}");
  const int kmax = c.n_max(8);

  for (const Rational& a : as)
    for (int k = 0; k <= kmax; ++k) {
      const auto st = closedform::zeta_structured(k, a, c.prec());
      c.compare(st.value, series::zeta_hcb_numeric(Rational(1 - k), a, c.prec()),
                "structured " + at({{"k", std::to_string(k)}, {"a", a.str()}}));
    }

  for (const Rational& a : lattice_up_to(8))
    for (int k = 0; k <= kmax; ++k) {
      const std::string where = at({{"k", std::to_string(k)}, {"a", a.str()}});
      const PiExtValue v = closedform::zeta_exact(k, a);
      const bool shape = a.is_integer() ? (v.c_sqrt3().is_zero() && v.c_pi().is_zero())
                                        : (v.c_one().is_zero() && v.c_sqrt3().is_zero());
      c.exact(shape, "basis shape " + where + ": " + v.str());
      c.compare(exact::to_float(v, c.prec()), series::zeta_hcb_numeric(Rational(1 - k), a, c.prec()), "exact " + where);
      if (a > kHalf)
        c.compare(closedform::zeta_structured(k, a, c.prec()).value, exact::to_float(v, c.prec()),
                  "structured vs exact " + where);
    }

  for (const Rational& alpha : lattice_up_to(8))
    c.compare(exact::to_float(hyper::incomplete_beta_exact(alpha), c.prec()),
              hyper::incomplete_beta_numeric(kQuarter, alpha, kHalf, c.prec()), "B(1/4;" + alpha.str() + ",1/2)");
  return c.finish();
}

CheckReport check_shift(const VerifyConfig& cfg) {
  Ctx c(cfg, "shift", "exact: k=0..8 a in {1/2,...,4}; numeric: s=-2..1 a in {1,5/4,3/2,2}");
  for (const Rational& a : lattice_up_to(8))
    for (int k = 0; k <= c.n_max(8); ++k) {
      // zeta(1-k, a+1) = zeta(1-k, a) - a^{k-1} / C(2a, a)
      const PiExtValue drop = hyper::exact_gamma_ratio(a).scaled(exact::pow(a, k - 1));
      c.exact(closedform::zeta_exact(k, a + Rational(1)) == closedform::zeta_exact(k, a) - drop,
              at({{"k", std::to_string(k)}, {"a", a.str()}}));
    }
  const mpfr_prec_t w = c.prec() + 24;
  for (const Rational& a : {Rational(1), Rational(5, 4), Rational(3, 2), Rational(2)})
    for (int s = -2; s <= 1; ++s) {
      const BoundedFloat first = hyper::reciprocal_central_binomial(a, w) * hyper::rational_power(a, Rational(-s), w);
      const BoundedFloat rhs = (series::zeta_hcb_numeric(s, a, w) - first).rounded(c.prec());
      c.compare(series::zeta_hcb_numeric(s, a + Rational(1), c.prec()), rhs, at({{"s", std::to_string(s)}, {"a", a.str()}}));
    }
  return c.finish();
}

CheckReport check_half_shift(const VerifyConfig& cfg) {
  struct Point {
    Rational s;
    int m;
    Rational z;
  };
  const std::vector<Point> grid = {{1, 1, Rational(2, 5)}, {0, 2, Rational(1, 4)}, {2, 3, Rational(1, 2)}, {-1, 2, Rational(3, 10)}};
  Ctx c(cfg, "half_shift", "(s,m,z) in {(1,1,2/5),(0,2,1/4),(2,3,1/2),(-1,2,3/10)}");
  for (const Point& pt : grid)
    c.rb().absorb(series::half_integer_shift_check(pt.s, pt.m, pt.z, c.prec(), c.tolerance_override()));
  return c.finish();
}

struct Example {
  int k;
  Rational a;
  PiExtValue value;
  const char* label;
};

// The displayed values, transcribed with pi/sqrt3 = (1/3) sqrt3 pi.
std::vector<Example> displayed_examples() {
  const Rational third(1, 3);
  return {
      {0, 1, PiExtValue::of(Basis::sqrt3_pi, third * third), "zeta(1,1) = pi/(3 sqrt3)"},
      {4, 2, PiExtValue::rational(Rational(17, 6)) + PiExtValue::of(Basis::sqrt3_pi, Rational(74, 81) * third),
       "zeta(-3,2) = 17/6 + 74 pi/(81 sqrt3)"},
      {0, Rational(3, 2), PiExtValue::of(Basis::pi, Rational(-1, 2)) + PiExtValue::of(Basis::sqrt3_pi, third),
       "zeta(1,3/2) = (-1/2 + sqrt3/3) pi"},
      {3, Rational(7, 2),
       PiExtValue::of(Basis::pi, Rational(-935, 2048)) + PiExtValue::of(Basis::sqrt3_pi, Rational(10, 27)),
       "zeta(-2,7/2) = (-935/2048 + 10 sqrt3/27) pi"},
  };
}

CheckReport check_examples(const VerifyConfig& cfg) {
  Ctx c(cfg, "examples", "(s,a) in {(1,1),(-3,2),(1,3/2),(-2,7/2)}");
  for (const Example& ex : displayed_examples()) {
    const PiExtValue got = closedform::zeta_exact(ex.k, ex.a);
    c.exact(got == ex.value, std::string(ex.label) + ", got " + got.str());
    c.compare(exact::to_float(ex.value, c.prec()), series::zeta_hcb_numeric(Rational(1 - ex.k), ex.a, c.prec()),
              std::string(ex.label) + " numerically");
  }
  return c.finish();
}

using CheckFn = std::function<CheckReport(const VerifyConfig&)>;

struct Entry {
  CheckInfo info;
  CheckFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"lehmer1", "Phi(1,1,z) = 2z arcsin(z)/sqrt(1-z^2)"}, check_lehmer1},
      {{"lehmer2", "weighted central binomial sums via p_k, q_k and arcsin"}, check_lehmer2},
      {{"prop1_pos", "Phi(k,a,z) as a k+1Fk series"}, [](const VerifyConfig& c) { return check_prop1(c, true); }},
      {{"prop1_neg", "Phi(1-k,a,z) as a k+1Fk series"}, [](const VerifyConfig& c) { return check_prop1(c, false); }},
      {{"diff_relation", "(1/2) theta_z lowers s by one"}, check_diff_relation},
      {{"thm31", "Phi(1,a,z) through Euler's transformation"}, check_euler_transform},
      {{"ode_phi1", "first-order ODE satisfied by Phi(1,a,z)"}, check_ode_phi1},
      {{"zenka", "Phi(1-k,a,z) through p_{k-1}(a,x) and q_{k-1}(x)"}, check_zenka},
      {{"ptoE", "p_n(a,x) as a double Eulerian sum"}, check_ptoE},
      {{"bm_p", "p_n(x) as an Eulerian convolution"}, check_bm_p},
      {{"bm_q", "q_{n-1}(x) = 2^n E_n(x,1/2)"}, check_bm_q},
      {{"bm1", "(2/3)^n p_n(1/4) = sum of poly-Bernoulli numbers"}, check_bm1},
      {{"p0_is_q", "p_n(0,x) = q_n(x)"}, [](const VerifyConfig& c) { return check_p_at(c, 0); }},
      {{"p1_is_p", "p_n(1,x) = p_n(x)"}, [](const VerifyConfig& c) { return check_p_at(c, 1); }},
      {{"alpha_rec", "alpha_n(a) = (2/3)^n p_n(a,1/4)"}, check_alpha_rec},
      {{"zetatokushu", "zeta_HCB(1-k,a) through the incomplete beta function"}, check_zetatokushu},
      {{"shift", "zeta_HCB(s,a+1) = zeta_HCB(s,a) - 1/(C(2a,a) a^s)"}, check_shift},
      {{"half_shift", "Phi(s,-m+1/2,z) = Phi(s,1/2,z)"}, check_half_shift},
      {{"examples", "the four displayed zeta_HCB values"}, check_examples},
  };
  return table;
}

const Entry& find(std::string_view id) {
  for (const Entry& e : entries())
    if (e.info.id == id) return e;
  throw UnknownCheck("unknown check id: " + std::string(id));
}

CheckReport run_guarded(const Entry& e, const VerifyConfig& config) {
  try {
    return e.run(config);
  } catch (const std::exception& ex) {
    ReportBuilder rb(std::string(e.info.id), "aborted", config.seed);
    rb.exact(false, std::string("threw: ") + ex.what());
    return rb.finish();
  }
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CheckReport run_check(std::string_view check_id, const VerifyConfig& config) { return find(check_id).run(config); }

Summary run(const std::vector<std::string>& check_ids, const VerifyConfig& config) {
  std::vector<const Entry*> todo;
  for (const std::string& id : check_ids) todo.push_back(&find(id));

  Summary summary;
  summary.reports.resize(todo.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(todo.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) summary.reports[i] = run_guarded(*todo[i], config);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const CheckReport& r : summary.reports) (r.passed ? summary.passed : summary.failed)++;
  return summary;
}

Summary run_all(const VerifyConfig& config) {
  std::vector<std::string> ids;
  for (const CheckInfo& info : registry()) ids.emplace_back(info.id);
  return run(ids, config);
}

std::vector<Rational> random_parameters(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  while (out.size() < count) {
    const long den = 3 + static_cast<long>(rng() % 10);
    const long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(6 * den));
    const Rational a(num, den);
    if (!(Rational(2) * a).is_integer()) out.push_back(a);
  }
  return out;
}

Rational euler_coefficient_gap(int n, const Rational& a) {
  if (a.is_integer() || (Rational(2) * a).is_integer())
    throw DomainError("coefficient identity needs a outside (1/2)Z, got " + a.str());
  const Rational nn(n);
  Rational sum = 0;
  for (int m = 0; m <= n; ++m)
    sum += hyper::pochhammer(Rational(-1, 2), m) * hyper::pochhammer(kHalf - a - nn, m) /
           (hyper::pochhammer(Rational(1) - a - nn, m) * Rational(exact::factorial(m)));
  return sum - hyper::pochhammer(kHalf, n) * hyper::pochhammer(a - kHalf, n) /
                   (hyper::pochhammer(a, n) * Rational(exact::factorial(n)));
}

Rational euler_cauchy_gap(int n, const Rational& a) {
  if (a.sign() <= 0 && (Rational(2) * a).is_integer())
    throw DomainError("coefficient identity needs a outside (1/2)Z_{<=0}, got " + a.str());
  Rational sum = 0;
  for (int m = 0; m <= n; ++m)
    sum += hyper::pochhammer(Rational(-1, 2), m) * hyper::pochhammer(a, n - m) /
           (hyper::pochhammer(a + kHalf, n - m) * Rational(exact::factorial(m)));
  return sum - hyper::pochhammer(kHalf, n) * hyper::pochhammer(a - kHalf, n) /
                   (hyper::pochhammer(a + kHalf, n) * Rational(exact::factorial(n)));
}

}  // namespace hlcbs::verify

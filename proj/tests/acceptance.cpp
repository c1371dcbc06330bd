// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hlcbs/cli.hpp"
#include "hlcbs/closedform.hpp"
#include "hlcbs/polyfam.hpp"
#include "hlcbs/series.hpp"
#include "hlcbs/verify.hpp"

using namespace hlcbs;
using exact::BigFloat;
using exact::BiPoly;
using exact::PiExtValue;
using exact::Rational;
using exact::UniPoly;
using Basis = PiExtValue::Basis;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> body;
};

std::string cli_out(std::vector<const char*> args, int* code = nullptr) {
  args.insert(args.begin(), "hlcbs");
  std::ostringstream out, err;
  const int c = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  if (code) *code = c;
  return out.str();
}

Outcome exact_examples() {
  const Rational third(1, 3);
  struct Row {
    int k;
    Rational a;
    PiExtValue expected;
  };
  // pi/(3 sqrt3), 17/6 + 74 pi/(81 sqrt3), (-1/2 + sqrt3/3) pi, (-935/2048 + 10 sqrt3/27) pi
  const std::vector<Row> rows = {
      {0, 1, PiExtValue::of(Basis::sqrt3_pi, third * third)},
      {4, 2, PiExtValue::rational(Rational(17, 6)) + PiExtValue::of(Basis::sqrt3_pi, Rational(74, 81) * third)},
      {0, Rational(3, 2), PiExtValue(0, 0, Rational(-1, 2), third)},
      {3, Rational(7, 2), PiExtValue(0, 0, Rational(-935, 2048), Rational(10, 27))},
  };
  int equal = 0;
  for (const Row& r : rows) equal += closedform::zeta_exact(r.k, r.a) == r.expected;
  int code = 0;
  const bool cli_ok = cli_out({"zeta", "--k", "4", "--a", "2", "--exact"}, &code) == "17/6 + 74/243*sqrt3*pi\n" && code == 0;
  return {equal == 4 && cli_ok, std::to_string(equal) + "/4 exact equalities, CLI golden " + (cli_ok ? "ok" : "mismatch")};
}

Outcome tables() {
  const long table1[5][5] = {{1, 1, 1, 1, 1}, {1, 2, 4, 8, 16}, {1, 4, 14, 46, 146}, {1, 8, 46, 230, 1066}, {1, 16, 146, 1066, 6902}};
  int cells = 0;
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= 4; ++n) cells += polyfam::poly_bernoulli(n, -k) == Rational(table1[k][n]);

  const UniPoly one_minus_a{1, -1};
  auto bi = [](std::vector<UniPoly> c) { return BiPoly(std::move(c)); };
  const std::vector<UniPoly> q = {UniPoly{1}, UniPoly{1}, UniPoly{1, 2}, UniPoly{1, 10, 4}, UniPoly{1, 36, 60, 8}};
  const std::vector<UniPoly> p = {UniPoly{}, UniPoly{1}, UniPoly{3}, UniPoly{7, 8}, UniPoly{15, 70, 20}};
  const std::vector<BiPoly> pa = {
      BiPoly{},
      BiPoly::from_param(UniPoly{1}),
      bi({UniPoly{1, 2}, Rational(2) * one_minus_a}),
      bi({UniPoly{1, 2, 4}, Rational(-2) * UniPoly{-5, -3, 4}, Rational(4) * pow(one_minus_a, 2)}),
      bi({UniPoly{1, 2} * UniPoly{1, 0, 4}, Rational(-2) * UniPoly{-18, -21, -8, 12}, Rational(4) * UniPoly{15, -5, -11, 6},
          Rational(8) * pow(one_minus_a, 3)}),
  };
  int rows = 0;
  for (int n = -1; n <= 3; ++n) {
    const auto i = static_cast<std::size_t>(n + 1);
    rows += polyfam::q_poly(n) == q[i] && polyfam::p_poly(n) == p[i] && polyfam::p_a_poly(n) == pa[i];
  }
  const std::string cli = cli_out({"table", "polybernoulli", "--n", "4", "--k", "4"});
  const bool cli_ok = cli.find("4\t1\t16\t146\t1066\t6902\n") != std::string::npos;
  return {cells == 25 && rows == 5 && cli_ok, std::to_string(cells) + "/25 poly-Bernoulli cells, " + std::to_string(rows) +
                                                  "/5 Lehmer rows (n=-1..3), CLI table " + (cli_ok ? "ok" : "mismatch")};
}

Outcome bm1() {
  int held = 0;
  Rational n3;
  for (int n = 0; n <= 10; ++n) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += polyfam::poly_bernoulli(n - k, -k);
    held += exact::pow(Rational(2, 3), n) * polyfam::p_poly(n).eval(Rational(1, 4)) == sum;
    if (n == 3) n3 = sum;
  }
  return {held == 11 && n3 == 10, std::to_string(held) + "/11 exact, n=3 sum = " + n3.str()};
}

Outcome oracle_grid() {
  const BigFloat limit = BigFloat::from_double(1e-20);
  BigFloat worst(64);
  int comparisons = 0, bad = 0;
  for (int k = 0; k <= 4; ++k)
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(5, 4), Rational(3, 2), Rational(2), Rational(7, 2)})
      for (const Rational& z : {Rational(1, 5), Rational(1, 2)}) {
        std::vector<exact::BoundedFloat> forms = {closedform::phi_neg_closed(k, a, z, 128)};
        const auto neg = series::phi_numeric({Rational(1 - k), a, z, 128, series::kDefaultMaxTerms});
        std::vector<exact::BoundedFloat> refs = {neg};
        if (k >= 1) {
          forms.push_back(closedform::phi_neg_hyper(k, a, z, 128));
          refs.push_back(neg);
          forms.push_back(closedform::phi_pos_hyper(k, a, z, 128));
          refs.push_back(series::phi_numeric({Rational(k), a, z, 128, series::kDefaultMaxTerms}));
        }
        for (std::size_t i = 0; i < forms.size(); ++i) {
          const BigFloat d = forms[i].deviation(refs[i]);
          ++comparisons;
          if (!(d <= limit)) ++bad;
          worst = exact::max(worst, d.rounded(64));
        }
      }
  return {bad == 0, std::to_string(comparisons - bad) + "/" + std::to_string(comparisons) + " within 1e-20, worst " + worst.str(3)};
}

Outcome coefficient_sweep() {
  const auto as = verify::random_parameters(verify::kDefaultSeed, 10);
  int zero = 0, total = 0;
  for (const Rational& a : as)
    for (int n = 0; n <= 30; ++n) {
      total += 2;
      zero += verify::euler_coefficient_gap(n, a).is_zero();
      zero += verify::euler_cauchy_gap(n, a).is_zero();
    }
  return {zero == total, std::to_string(zero) + "/" + std::to_string(total) + " coefficients vanish (n<=30, 10 seeded a)"};
}

Outcome structural() {
  int held = 0, total = 0;
  auto count = [&](bool b) {
    ++total;
    held += b;
  };
  for (int n = 0; n <= 8; ++n) {
    count(polyfam::p_from_eulerian(n) == polyfam::p_a_poly(n));
    count(polyfam::p_a_poly(n).substitute_param(0) == polyfam::q_poly(n));
    count(polyfam::p_a_poly(n).substitute_param(1) == polyfam::p_poly(n));
    count(polyfam::bm_q_poly(n) == polyfam::q_poly(n - 1));
    count(polyfam::bm_p_poly(n) == polyfam::p_poly(n));
    for (const Rational& a : verify::random_parameters(verify::kDefaultSeed, 10))
      count(polyfam::alpha(n, a) == exact::pow(Rational(2, 3), n) * polyfam::p_a_poly(n).eval(a, Rational(1, 4)));
  }
  return {held == total, std::to_string(held) + "/" + std::to_string(total) + " exact identities"};
}

Outcome full_suite() {
  auto once = [] {
    int code = 0;
    const std::string out = cli_out({"verify", "--json"}, &code);
    return std::make_pair(code, nlohmann::json::parse(out));
  };
  const auto [code1, first] = once();
  const auto [code2, second] = once();
  std::size_t passed = 0;
  bool same = first.size() == second.size();
  for (std::size_t i = 0; i < first.size(); ++i) {
    passed += first[i]["passed"].get<bool>();
    if (same)
      same = first[i]["check_id"] == second[i]["check_id"] && first[i]["passed"] == second[i]["passed"] &&
             first[i]["max_abs_deviation"] == second[i]["max_abs_deviation"] &&
             first[i]["comparisons"] == second[i]["comparisons"];
  }
  const std::size_t registered = verify::registry().size();
  const bool ok = code1 == 0 && code2 == 0 && passed == registered && first.size() == registered && same;
  return {ok, std::to_string(passed) + "/" + std::to_string(first.size()) + " checks pass, two runs " +
                  (same ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "exact example values", 1000, exact_examples},
      {"AC2", "table reproduction", 1000, tables},
      {"AC3", "poly-Bernoulli antidiagonal identity", 1000, bm1},
      {"AC4", "oracle equivalence at 128 bits", 30000, oracle_grid},
      {"AC5", "exact coefficient-vanishing sweep", 10000, coefficient_sweep},
      {"AC6", "structural identities n<=8", 5000, structural},
      {"AC7", "verify --json full suite", 60000, full_suite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = ms < c.limit_ms;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %s  %s: %s  [%.0f ms, limit %.0f ms%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), ms,
                c.limit_ms, in_time ? "" : ", too slow");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

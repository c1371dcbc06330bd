#include "hlcbs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hlcbs/closedform.hpp"
#include "hlcbs/errors.hpp"
#include "hlcbs/hyper.hpp"
#include "hlcbs/polyfam.hpp"
#include "hlcbs/series.hpp"
#include "hlcbs/verify.hpp"

namespace hlcbs::cli {

namespace {

using exact::BigFloat;
using exact::BoundedFloat;
using exact::PiExtValue;
using exact::Rational;
using nlohmann::json;

struct Globals {
  mpfr_prec_t precision = 128;
  bool json = false;
  std::uint64_t seed = verify::kDefaultSeed;
  std::size_t max_terms = series::kDefaultMaxTerms;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (const Rational& x : xs) s += (s.empty() ? "" : ",") + x.str();
  return s;
}

void emit_numeric(std::ostream& out, const Globals& g, const BoundedFloat& v, json meta) {
  if (g.json) {
    out << json{{"mode", "numeric"}, {"value", v.value.str()}, {"error_bound", v.error.str(3)}, {"metadata", std::move(meta)}}.dump()
        << '\n';
  } else {
    out << v.value.str() << " +/- " << v.error.str(3) << '\n';
  }
}

json basis_json(const PiExtValue& v) {
  return {{"1", v.c_one().str()}, {"sqrt3", v.c_sqrt3().str()}, {"pi", v.c_pi().str()}, {"sqrt3*pi", v.c_sqrt3pi().str()}};
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string function = "phi";
  std::string method = "series";
  std::string s = "1", a = "1", z = "1/2";
  std::string upper, lower;
  std::string alpha, beta;
};

int do_eval(const EvalArgs& e, const Globals& g, std::ostream& out) {
  const Rational z = Rational::parse(e.z);
  if (e.function == "pfq") {
    hyper::PFQParams params{parse_list(e.upper), parse_list(e.lower), z};
    emit_numeric(out, g, hyper::pfq_eval(params, g.precision, std::max(g.max_terms, hyper::kDefaultMaxTerms)),
                 {{"function", "pfq"}, {"upper", join(params.upper)}, {"lower", join(params.lower)}, {"z", z.str()}});
    return kExitOk;
  }
  if (e.function == "beta") {
    const Rational alpha = Rational::parse(e.alpha), beta = Rational::parse(e.beta);
    emit_numeric(out, g, hyper::incomplete_beta_numeric(z, alpha, beta, g.precision),
                 {{"function", "beta"}, {"z", z.str()}, {"alpha", alpha.str()}, {"beta", beta.str()}});
    return kExitOk;
  }

  const Rational s = Rational::parse(e.s), a = Rational::parse(e.a);
  const Rational zz = e.function == "zeta" ? Rational(1, 2) : z;
  json meta{{"function", e.function}, {"s", s.str()}, {"a", a.str()}, {"z", zz.str()}, {"method", e.method}};

  if (e.method == "series") {
    emit_numeric(out, g, series::phi_numeric({s, a, zz, g.precision, g.max_terms}), std::move(meta));
    return kExitOk;
  }
  if (!s.is_integer()) throw DomainError("closed forms need an integer s, got " + s.str());
  const long si = s.to_long();
  BoundedFloat v;
  if (e.method == "hyper") {
    v = si >= 1 ? closedform::phi_pos_hyper(static_cast<int>(si), a, zz, g.precision)
                : closedform::phi_neg_hyper(static_cast<int>(1 - si), a, zz, g.precision);
  } else {  // closed
    if (si > 1) throw DomainError("the polynomial closed form covers s <= 1, got s = " + s.str());
    v = si == 1 ? closedform::phi_one_closed(a, zz, g.precision)
                : closedform::phi_neg_closed(static_cast<int>(1 - si), a, zz, g.precision);
  }
  emit_numeric(out, g, v, std::move(meta));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// zeta

struct ZetaArgs {
  int k = 0;
  std::string a = "1";
  bool exact = false, structured = false, numeric = false;
};

int do_zeta(const ZetaArgs& z, const Globals& g, std::ostream& out) {
  const Rational a = Rational::parse(z.a);
  const int modes = int(z.exact) + int(z.structured) + int(z.numeric);
  if (modes > 1) throw DomainError("choose one of --exact, --structured, --numeric");
  std::string mode = z.exact ? "exact" : z.structured ? "structured" : z.numeric ? "numeric" : "";
  if (mode.empty()) {
    if (a.sign() > 0 && a.is_half_integer_lattice())
      mode = "exact";
    else
      mode = a > Rational(1, 2) ? "structured" : "numeric";
  }
  const json params{{"k", z.k}, {"a", a.str()}, {"s", std::to_string(1 - z.k)}};

  if (mode == "exact") {
    const PiExtValue v = closedform::zeta_exact(z.k, a);
    if (g.json)
      out << json{{"mode", "exact"}, {"value", v.str()}, {"basis", basis_json(v)}, {"metadata", params}}.dump() << '\n';
    else
      out << v.str() << '\n';
  } else if (mode == "structured") {
    const auto st = closedform::zeta_structured(z.k, a, g.precision);
    if (g.json) {
      out << json{{"mode", "structured"},
                  {"value", st.value.value.str()},
                  {"error_bound", st.value.error.str(3)},
                  {"rational_part", st.form.rational_part.str()},
                  {"q_part", st.form.q_part.str()},
                  {"rational_coefficient", st.form.rational_coefficient.str()},
                  {"beta_coefficient", st.form.beta_coefficient.str()},
                  {"metadata", params}}
                 .dump()
          << '\n';
    } else {
      out << "Gamma(a+1)^2/Gamma(2a+1)*(" << st.form.rational_coefficient.str() << " + 4^a/sqrt3*B(1/4;"
          << (a - Rational(1, 2)).str() << ",1/2)*" << st.form.beta_coefficient.str() << ")\n"
          << st.value.value.str() << " +/- " << st.value.error.str(3) << '\n';
    }
  } else {
    json meta = params;
    meta["method"] = "series";
    emit_numeric(out, g, series::zeta_hcb_numeric(Rational(1 - z.k), a, g.precision, g.max_terms), std::move(meta));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// poly

struct PolyArgs {
  std::string family;
  int index = 0;
  std::optional<std::string> a;
  int k = 0;
};

int do_poly(const PolyArgs& p, const Globals& g, std::ostream& out) {
  std::string text;
  json extra = json::object();
  const std::optional<Rational> a = p.a ? std::optional(Rational::parse(*p.a)) : std::nullopt;
  if (p.family == "q") {
    text = polyfam::q_poly(p.index).str("x");
  } else if (p.family == "p") {
    text = polyfam::p_poly(p.index).str("x");
  } else if (p.family == "pa") {
    const exact::BiPoly pa = polyfam::p_a_poly(p.index);
    text = a ? pa.substitute_param(*a).str("x") : pa.str("x", "a");
  } else if (p.family == "eulerian") {
    text = polyfam::eulerian(p.index).str();
  } else if (p.family == "polybernoulli") {
    text = polyfam::poly_bernoulli(p.index, p.k).str();
    extra["k"] = p.k;
  } else {  // alpha
    if (!a) throw DomainError("poly alpha needs --a");
    text = polyfam::alpha(p.index, *a).str();
  }
  if (a) extra["a"] = a->str();
  if (g.json)
    out << json{{"family", p.family}, {"index", p.index}, {"value", text}, {"metadata", extra}}.dump() << '\n';
  else
    out << text << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string name;
  int n = 4;
  int k = 4;
};

int do_table(const TableArgs& t, const Globals& g, std::ostream& out) {
  if (t.name == "polybernoulli") {
    // Rows k, columns n, entries B_n^(-k).
    if (!g.json) {
      out << "k\\n";
      for (int n = 0; n <= t.n; ++n) out << '\t' << n;
      out << '\n';
    }
    for (int k = 0; k <= t.k; ++k) {
      if (!g.json) out << k;
      for (int n = 0; n <= t.n; ++n) {
        const std::string v = polyfam::poly_bernoulli(n, -k).str();
        if (g.json)
          out << json{{"table", "polybernoulli"}, {"n", n}, {"k", -k}, {"value", v}}.dump() << '\n';
        else
          out << '\t' << v;
      }
      if (!g.json) out << '\n';
    }
  } else if (t.name == "ppaq") {
    if (!g.json) out << "n\tp_n(x)\tp_n(a,x)\tq_n(x)\n";
    for (int n = -1; n <= t.n; ++n) {
      const std::string p = polyfam::p_poly(n).str("x"), pa = polyfam::p_a_poly(n).str("x", "a"),
                        q = polyfam::q_poly(n).str("x");
      if (g.json)
        out << json{{"table", "ppaq"}, {"n", n}, {"p", p}, {"pa", pa}, {"q", q}}.dump() << '\n';
      else
        out << n << '\t' << p << '\t' << pa << '\t' << q << '\n';
    }
  } else {  // eulerian
    if (!g.json) out << "n\tE_n(x,y)\n";
    for (int n = 0; n <= t.n; ++n) {
      const std::string e = polyfam::eulerian(n).str();
      if (g.json)
        out << json{{"table", "eulerian"}, {"n", n}, {"value", e}}.dump() << '\n';
      else
        out << n << '\t' << e << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::vector<std::string> ids;
  std::optional<std::string> tolerance;
  std::optional<int> max_n;
  unsigned jobs = 0;
  bool list = false;
};

json report_json(const CheckReport& r) {
  json j{{"check_id", r.check_id},
         {"passed", r.passed},
         {"comparisons", r.comparisons},
         {"elapsed_ms", r.elapsed.count()},
         {"parameter_grid", r.parameter_grid},
         {"seed", r.seed}};
  if (r.exact_only()) {
    j["max_abs_deviation"] = "exact";
    j["tolerance"] = "exact";
  } else {
    j["max_abs_deviation"] = r.max_abs_deviation->str(6);
    j["tolerance"] = r.tolerance->str(6);
  }
  j["failures"] = r.failures;
  return j;
}

int do_verify(const VerifyArgs& v, const Globals& g, std::ostream& out) {
  if (v.list) {
    for (const auto& info : verify::registry()) out << info.id << '\t' << info.summary << '\n';
    return kExitOk;
  }
  verify::VerifyConfig cfg;
  cfg.precision_bits = g.precision;
  cfg.seed = g.seed;
  cfg.max_n = v.max_n;
  cfg.jobs = v.jobs;
  if (v.tolerance) cfg.tolerance = BigFloat::parse(*v.tolerance, 64);

  const verify::Summary summary = v.ids.empty() ? verify::run_all(cfg) : verify::run(v.ids, cfg);
  if (g.json) {
    json arr = json::array();
    for (const CheckReport& r : summary.reports) arr.push_back(report_json(r));
    out << arr.dump() << '\n';
  } else {
    for (const CheckReport& r : summary.reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check_id << "  comparisons=" << r.comparisons << "  max_dev="
          << (r.exact_only() ? std::string("exact") : r.max_abs_deviation->str(3)) << "  "
          << static_cast<long>(r.elapsed.count()) << " ms\n";
      for (const std::string& f : r.failures) out << "    " << f << '\n';
    }
    out << summary.passed << '/' << summary.reports.size() << " checks passed\n";
  }
  return summary.all_passed() ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz-Lerch type central binomial series: evaluation, closed forms and identity checks", "hlcbs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--precision", g.precision, "working precision in bits")->check(CLI::Range(32, 1 << 20));
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized parameter sweeps");
  app.add_option("--max-terms", g.max_terms, "series term budget")->check(CLI::PositiveNumber);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "numeric Phi_HCB, zeta_HCB, pFq or incomplete beta");
  eval->add_option("--function", ev.function)->check(CLI::IsMember({"phi", "zeta", "pfq", "beta"}));
  eval->add_option("--method", ev.method, "phi/zeta only: series, hyper or closed")
      ->check(CLI::IsMember({"series", "hyper", "closed"}));
  eval->add_option("--s", ev.s);
  eval->add_option("--a", ev.a);
  eval->add_option("--z", ev.z, "rational P/Q or decimal");
  eval->add_option("--upper", ev.upper, "comma-separated upper parameters");
  eval->add_option("--lower", ev.lower, "comma-separated lower parameters");
  eval->add_option("--alpha", ev.alpha);
  eval->add_option("--beta", ev.beta);

  ZetaArgs zt;
  auto* zeta = app.add_subcommand("zeta", "zeta_HCB(1-k, a): exact, structured or numeric");
  zeta->add_option("--k", zt.k)->required()->check(CLI::NonNegativeNumber);
  zeta->add_option("--a", zt.a)->required();
  zeta->add_flag("--exact", zt.exact);
  zeta->add_flag("--structured", zt.structured);
  zeta->add_flag("--numeric", zt.numeric);

  PolyArgs pl;
  auto* poly = app.add_subcommand("poly", "print a family member");
  poly->add_option("family", pl.family)
      ->required()
      ->check(CLI::IsMember({"q", "p", "pa", "eulerian", "polybernoulli", "alpha"}));
  poly->add_option("index", pl.index)->required();
  poly->add_option("--a", pl.a, "parameter for pa and alpha");
  poly->add_option("--k", pl.k, "upper index for polybernoulli");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "TSV grid, or line-delimited JSON with --json");
  table->add_option("name", tb.name)->required()->check(CLI::IsMember({"polybernoulli", "ppaq", "eulerian"}));
  table->add_option("--n", tb.n)->check(CLI::Range(-1, 200));
  table->add_option("--k", tb.k)->check(CLI::Range(0, 200));

  VerifyArgs vf;
  auto* ver = app.add_subcommand("verify", "run identity checks (all by default)");
  ver->add_option("ids", vf.ids, "check ids");
  ver->add_option("--tolerance", vf.tolerance, "override every numeric tolerance");
  ver->add_option("--max-n", vf.max_n, "override the index bound of exact sweeps");
  ver->add_option("--jobs", vf.jobs, "worker threads (0: hardware concurrency)");
  ver->add_flag("--list", vf.list, "list registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (eval->parsed()) return do_eval(ev, g, out);
    if (zeta->parsed()) return do_zeta(zt, g, out);
    if (poly->parsed()) return do_poly(pl, g, out);
    if (table->parsed()) return do_table(tb, g, out);
    return do_verify(vf, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace hlcbs::cli

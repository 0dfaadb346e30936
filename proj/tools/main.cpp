#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wedgelab/catalog.hpp"
#include "wedgelab/dirichlet.hpp"
#include "wedgelab/hecke.hpp"
#include "wedgelab/shimura.hpp"
#include "wedgelab/verify.hpp"
#include "wedgelab/wedge.hpp"

namespace wl = wedgelab;
using wl::catalog::json;

namespace {

struct GlobalOpts {
  long prec = 200;
  std::string out = "csv";
  double tol = 1e-9;
  bool exact = false;
  unsigned long seed = 1;
};

long default_precision() {
  if (const char* env = std::getenv("WEDGELAB_PREC")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 200;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

wl::catalog::LoadedForm load_source_form(const std::string& form, const std::string& spec_file,
                                         const std::string& spec_inline, long prec) {
  if (!form.empty()) return wl::catalog::load_catalog_form(form, prec);
  if (!spec_file.empty())
    return wl::catalog::load_form(wl::catalog::FormSpec::parse(read_json_file(spec_file)), prec,
                                  spec_file);
  if (!spec_inline.empty())
    return wl::catalog::load_form(wl::catalog::FormSpec::parse(json::parse(spec_inline)), prec,
                                  "inline");
  throw CLI::ValidationError("one of --form/--spec/--spec-inline is required");
}

// Sequence selected by --subseq over a loaded form, as exact values plus the
// scan start index.
struct Sequence {
  std::vector<wl::CycNumber> values;
  long start_index = 1;
};

Sequence select_subsequence(const wl::catalog::LoadedForm& lf, const std::string& subseq,
                            long p, long j, long t, long prec) {
  Sequence seq;
  if (subseq == "all") {
    if (lf.half) {
      seq.values = lf.half->b;
      seq.start_index = 1;
      return seq;
    }
    const wl::QSeries s = lf.series->integral_offset()
                              ? lf.series->absolute()
                              : throw std::runtime_error("scan: non-integral exponents");
    for (long n = 0; n < s.precision(); ++n) seq.values.push_back(s.coeff(n));
    seq.start_index = 0;
    return seq;
  }
  if (subseq == "p-power") {
    if (!lf.integral) throw std::runtime_error("p-power subsequence needs an integral form");
    if (j < 1) throw std::runtime_error("p-power subsequence needs --j >= 1");
    long terms = 1;
    mpz_class reach = 1;
    for (;;) {
      for (long i = 0; i < j; ++i) reach *= p;
      if (reach >= prec) break;
      ++terms;
    }
    seq.values = wl::hecke::prime_power_coefficients(*lf.integral, p, j, terms,
                                                     wl::hecke::PowerPath::Auto);
    seq.start_index = 0;
    return seq;
  }
  if (subseq == "t-square") {
    if (lf.half) {
      seq.values = lf.half->b;
      seq.start_index = 1;
      return seq;
    }
    if (!lf.series || !lf.series->integral_offset())
      throw std::runtime_error("t-square subsequence needs integral exponents");
    const wl::QSeries s = lf.series->absolute();
    for (long n = 1; t * n * n < s.precision(); ++n) seq.values.push_back(s.coeff(t * n * n));
    seq.start_index = 1;
    return seq;
  }
  throw CLI::ValidationError("unknown --subseq: " + subseq);
}

Sequence read_csv_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Sequence seq;
  std::string line;
  bool first = true;
  long expect = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string ns, res, ims;
    if (!std::getline(ls, ns, ',') || !std::getline(ls, res, ',') || !std::getline(ls, ims, ','))
      throw std::runtime_error("bad CSV row: " + line);
    long n = std::stol(ns);
    if (first) {
      seq.start_index = n;
      expect = n;
      first = false;
    }
    if (n != expect) throw std::runtime_error("CSV rows must have consecutive indices");
    ++expect;
    // store as embedded-only values: imag part goes through a complex pair
    double re = std::stod(res), im = std::stod(ims);
    wl::CycNumber v;
    if (im == 0.0) {
      mpq_class q(re);
      q.canonicalize();
      v = wl::CycNumber(q);
    } else {
      // keep exactness where possible: re + im * zeta_4
      mpq_class qr(re), qi(im);
      qr.canonicalize();
      qi.canonicalize();
      v = wl::CycNumber(qr) + wl::CycNumber::root_of_unity(4, 1).scaled(qi);
    }
    seq.values.push_back(v);
  }
  return seq;
}

std::vector<std::complex<double>> embed_all(const std::vector<wl::CycNumber>& vs) {
  std::vector<std::complex<double>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.embed());
  return out;
}

int cmd_expand(const GlobalOpts& g, const std::string& form, const std::string& spec_file,
               const std::string& spec_inline) {
  auto lf = load_source_form(form, spec_file, spec_inline, g.prec);
  if (lf.half) {
    if (g.out == "json") {
      json j;
      j["context"] = wl::catalog::context_to_json(*lf.half);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << wl::catalog::sequence_to_csv(lf.half->b, 1, g.exact);
    }
    return 0;
  }
  if (g.out == "json")
    std::cout << wl::catalog::series_to_json(*lf.series, g.exact).dump(2) << "\n";
  else
    std::cout << wl::catalog::series_to_csv(*lf.series, g.exact);
  return 0;
}

int cmd_hecke(const GlobalOpts& g, const std::string& form, const std::string& spec_file,
              const std::string& spec_inline, long p, long j, long terms,
              const std::string& path, bool check_eigen) {
  auto lf = load_source_form(form, spec_file, spec_inline, g.prec);
  if (!lf.integral) throw std::runtime_error("hecke: an integral-weight form is required");
  wl::hecke::PowerPath pp = wl::hecke::PowerPath::Auto;
  if (path == "direct") pp = wl::hecke::PowerPath::Direct;
  if (path == "recurrence") pp = wl::hecke::PowerPath::Recurrence;
  auto seq = wl::hecke::prime_power_coefficients(*lf.integral, p, j, terms, pp);
  if (check_eigen) {
    const auto& f = *lf.integral;
    auto res = wl::hecke::eigen_generating_residual(f, p, j, terms, pp);
    bool bare = res[0] == wl::CycNumber(1L);
    for (size_t i = 1; i < res.size(); ++i)
      if (!res[i].is_zero()) bare = false;
    // corrected form: the X^1 coefficient is kappa * a(p^{j-2})
    wl::CycNumber forced_x1;
    if (j >= 2) {
      long pe = 1;
      for (long i = 0; i < j - 2; ++i) pe *= p;
      forced_x1 =
          f.chi.evaluate(p).scaled(mpq_class(wl::hecke::power_z(p, f.k - 1))) * f.a(pe);
    }
    bool corrected = res[0] == wl::CycNumber(1L) && res.size() > 1 && res[1] == forced_x1;
    for (size_t i = 2; i < res.size(); ++i)
      if (!res[i].is_zero()) corrected = false;
    json rep;
    rep["form"] = lf.name;
    rep["p"] = p;
    rep["j"] = j;
    rep["terms"] = terms;
    auto lam = wl::hecke::tj_eigenvalue(f, p, j);
    rep["scalar_action"] = lam.has_value();
    auto psum = wl::hecke::power_sum_eigenvalue(f, p, j);
    if (psum) rep["lambda_j"] = wl::catalog::cyc_to_json(*psum);
    rep["generating_identity_bare"] = bare;       // constant numerator a(1)
    rep["generating_identity_corrected"] = corrected;  // a(1)(1 + kappa a(p^{j-2}) X)
    std::cout << rep.dump(2) << "\n";
    return corrected ? 0 : 1;
  }
  if (g.out == "json") {
    json rows = json::array();
    for (size_t n = 0; n < seq.size(); ++n) {
      if (g.exact)
        rows.push_back(json::array({n, wl::catalog::cyc_to_json(seq[n])}));
      else {
        auto z = seq[n].embed();
        rows.push_back(json::array({n, z.real(), z.imag()}));
      }
    }
    json rep;
    rep["form"] = lf.name;
    rep["p"] = p;
    rep["j"] = j;
    rep["coefficients"] = rows;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << wl::catalog::sequence_to_csv(seq, 0, g.exact);
  }
  return 0;
}

wl::shimura::HalfIntegralContext synthetic_context(const GlobalOpts& g, long k, long level,
                                                   long t, long chi_index, long terms,
                                                   long lambda_cap) {
  std::mt19937_64 rng(g.seed);
  auto chis = wl::DirichletCharacter::all_characters(level);
  wl::shimura::SyntheticEigenSpec spec;
  spec.k = k;
  spec.N = level;
  spec.t = t;
  spec.chi = chis[static_cast<size_t>(chi_index) % chis.size()];
  spec.a_t = wl::CycNumber(1L + static_cast<long>(rng() % 5));
  for (long p = 2; p <= terms; ++p) {
    if (!wl::hecke::is_prime(p)) continue;
    mpz_class bound = sqrt(mpz_class(4 * wl::hecke::power_z(p, 2 * k - 1)));
    long b = bound.fits_slong_p() ? bound.get_si() : lambda_cap;
    b = std::min(b, lambda_cap);
    std::uniform_int_distribution<long> dist(-b, b);
    spec.lambdas[p] = spec.chi.evaluate(p).scaled(mpq_class(dist(rng)));
  }
  return wl::shimura::generate_synthetic_context(spec, terms);
}

int cmd_shimura(const GlobalOpts& g, const std::string& context_file, bool synthetic, long k,
                long level, long t, long chi_index, long terms, const std::string& emit,
                long transfer_p, bool roundtrip) {
  wl::shimura::HalfIntegralContext ctx =
      synthetic ? synthetic_context(g, k, level, t, chi_index, terms, 1000)
                : wl::catalog::context_from_json(read_json_file(context_file));
  long n = std::min<long>(terms, ctx.terms());
  auto L = wl::shimura::lift(ctx, n);
  int status = 0;
  if (roundtrip) {
    auto back = wl::shimura::invert_lift(L, n);
    bool ok = true;
    for (long i = 1; i <= n; ++i)
      if (!(back[i - 1] == ctx.bval(i))) ok = false;
    std::cerr << "roundtrip invert(lift(b)) == b: " << (ok ? "exact" : "FAILED") << "\n";
    if (!ok) status = 1;
  }
  if (transfer_p > 0) {
    auto rep = wl::shimura::eigen_transfer_check(ctx, L, transfer_p, g.tol);
    json jr;
    jr["p"] = transfer_p;
    jr["recursion_exact"] = rep.recursion_exact;
    jr["nu_checked"] = rep.nu_checked;
    jr["alpha_abs"] = rep.alpha_abs;
    jr["beta_abs"] = rep.beta_abs;
    jr["expected_abs"] = rep.expected_abs;
    jr["moduli_ok"] = rep.moduli_ok;
    std::cout << jr.dump(2) << "\n";
    if (!rep.recursion_exact) status = 1;
    return status;
  }
  if (emit == "context" || g.out == "json") {
    json j;
    j["context"] = wl::catalog::context_to_json(ctx);
    if (emit == "A" || emit == "both") {
      json rows = json::array();
      for (long i = 1; i <= n; ++i) {
        auto z = L.Aval(i).embed();
        rows.push_back(json::array({i, z.real(), z.imag()}));
      }
      j["A"] = rows;
    }
    std::cout << j.dump(2) << "\n";
    return status;
  }
  if (emit == "A")
    std::cout << wl::catalog::sequence_to_csv(L.A, 1, g.exact);
  else if (emit == "b")
    std::cout << wl::catalog::sequence_to_csv(ctx.b, 1, g.exact);
  else
    throw CLI::ValidationError("--emit must be A, b, or context for CSV output");
  return status;
}

int cmd_scan(const GlobalOpts& g, const std::string& form, const std::string& spec_file,
             const std::string& spec_inline, const std::string& csv_file,
             const std::string& context_file, const std::string& subseq, long p, long j, long t,
             double theta1, double theta2, bool strict) {
  Sequence seq;
  if (!csv_file.empty()) {
    seq = read_csv_sequence(csv_file);
  } else if (!context_file.empty()) {
    auto ctx = wl::catalog::context_from_json(read_json_file(context_file));
    seq.values = ctx.b;
    seq.start_index = 1;
  } else {
    // p-power scans only need a seed window for the verified recurrence;
    // the full --prec bounds the subsequence indices instead.
    long materialize = subseq == "p-power" ? std::min<long>(g.prec, 4096) : g.prec;
    auto lf = load_source_form(form, spec_file, spec_inline, materialize);
    seq = select_subsequence(lf, subseq, p, j, t, g.prec);
  }
  wl::wedge::Wedge w(theta1, theta2);
  auto values = embed_all(seq.values);
  auto rep = wl::wedge::scan(values, seq.start_index, w, strict);
  if (g.out == "json")
    std::cout << wl::catalog::scan_report_to_json(rep).dump(2) << "\n";
  else {
    std::cout << wl::catalog::scan_report_to_csv(rep);
    std::cerr << "scanned [" << rep.start_index << "," << rep.end_index << "): "
              << rep.escapes.size() << " escapes, " << rep.re_changes.size()
              << " re sign changes, " << rep.im_changes.size() << " im sign changes, first escape "
              << (rep.first_escape ? std::to_string(*rep.first_escape) : std::string("none"))
              << "\n";
  }
  return 0;
}

int cmd_analyze(const GlobalOpts& g, const std::string& form, const std::string& spec_file,
                const std::string& spec_inline, const std::string& csv_file,
                const std::string& context_file, const std::string& subseq, long p, long j,
                long t, long M, long kronecker_D, double lchi_s, bool check_identity, double identity_s) {
  json out;
  if (kronecker_D != 0) {
    auto chi = wl::DirichletCharacter::kronecker_character(mpz_class(kronecker_D));
    auto lv = wl::dirichlet::L_chi(chi, lchi_s, M > 0 ? M : 100000);
    out["L"] = {{"kronecker", kronecker_D},
                {"s", lchi_s},
                {"value_re", lv.value.real()},
                {"value_im", lv.value.imag()},
                {"tail_bound", lv.tail_bound}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (check_identity) {
    if (context_file.empty())
      throw CLI::ValidationError("--check-lift-identity needs --context with synthetic or external data");
    auto ctx = wl::catalog::context_from_json(read_json_file(context_file));
    long n = std::min<long>(M > 0 ? M : ctx.terms(), ctx.terms());
    auto L = wl::shimura::lift(ctx, n);
    auto rep = wl::dirichlet::verify_lift_partial_sums(ctx, L, identity_s, n);
    out["eq"] = {{"s", rep.s},          {"M", rep.M},
                 {"residual", rep.residual}, {"tail_bound", rep.tail_bound},
                 {"pass", rep.pass}};
    std::cout << out.dump(2) << "\n";
    return rep.pass ? 0 : 1;
  }
  Sequence seq;
  if (!csv_file.empty())
    seq = read_csv_sequence(csv_file);
  else if (!context_file.empty()) {
    auto ctx = wl::catalog::context_from_json(read_json_file(context_file));
    seq.values = ctx.b;
    seq.start_index = 1;
  } else {
    long materialize = subseq == "p-power" ? std::min<long>(g.prec, 4096) : g.prec;
    auto lf = load_source_form(form, spec_file, spec_inline, materialize);
    seq = select_subsequence(lf, subseq, p, j, t, g.prec);
  }
  wl::dirichlet::DirichletSeriesView view(embed_all(seq.values));
  long m = std::min<long>(M > 0 ? M : view.terms(), view.terms());
  auto emit = [&](wl::dirichlet::PrefixKind kind) {
    auto est = wl::dirichlet::abscissa_estimate(view, kind, m);
    json jj;
    jj["estimate"] = est.estimate;
    jj["uncertainty"] = est.uncertainty;
    json ladder = json::array();
    for (const auto& pt : est.ladder)
      ladder.push_back({{"N", pt.N}, {"magnitude", pt.magnitude}, {"slope", pt.slope}});
    jj["ladder"] = ladder;
    return jj;
  };
  out["M"] = m;
  out["convergence"] = emit(wl::dirichlet::PrefixKind::Plain);
  out["absolute"] = emit(wl::dirichlet::PrefixKind::Absolute);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
  auto results = wl::verify::run_suite(suite, g.tol);
  auto status_str = [](const wl::verify::CheckResult& r) {
    switch (r.status) {
      case wl::verify::CheckResult::Status::Pass:
        return "pass";
      case wl::verify::CheckResult::Status::Blocked:
        return "blocked";
      default:
        return "fail";
    }
  };
  if (g.out == "json") {
    json j;
    j["suite"] = suite;
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name},
                        {"status", status_str(r)},
                        {"detail", r.detail},
                        {"millis", r.millis}});
    j["checks"] = checks;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      const char* tag = r.status == wl::verify::CheckResult::Status::Pass
                            ? "[PASS]    "
                            : (r.status == wl::verify::CheckResult::Status::Blocked
                                   ? "[BLOCKED] "
                                   : "[FAIL]    ");
      std::cout << tag << r.name << " (" << r.millis << " ms): " << r.detail << "\n";
    }
  }
  return wl::verify::all_green(results) ? 0 : 1;
}

int cmd_catalog(const GlobalOpts& g) {
  if (g.out == "json") {
    json j = json::array();
    for (const auto& e : wl::catalog::builtin_catalog()) {
      auto sc = wl::catalog::self_check(e, std::min<long>(g.prec, 512));
      j.push_back({{"name", e.name},
                   {"description", e.description},
                   {"spec", e.spec.to_json()},
                   {"eigenform", e.eigenform},
                   {"newform", e.newform},
                   {"r_chi_odd", e.r_chi_odd},
                   {"self_check", sc.pass},
                   {"self_check_detail", sc.detail}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  bool ok = true;
  for (const auto& e : wl::catalog::builtin_catalog()) {
    auto sc = wl::catalog::self_check(e, std::min<long>(g.prec, 512));
    ok = ok && sc.pass;
    std::cout << e.name << ": " << e.description << " [self-check "
              << (sc.pass ? "ok" : "FAILED") << ": " << sc.detail << "]\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wedgelab: exact q-series, Hecke/Shimura identities, wedge scans"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand

  GlobalOpts g;
  g.prec = default_precision();
  app.add_option("--prec", g.prec, "coefficient precision window (env WEDGELAB_PREC)")
      ->capture_default_str();
  app.add_option("--out", g.out, "output format: csv|json")->capture_default_str();
  app.add_option("--tol", g.tol, "numeric tolerance")->capture_default_str();
  app.add_flag("--exact", g.exact, "emit exact cyclotomic rows instead of embeddings");
  app.add_option("--seed", g.seed, "seed for synthetic data")->capture_default_str();

  std::string form, spec_file, spec_inline, csv_file, context_file;
  auto add_source = [&](CLI::App* c, bool with_csv) {
    c->add_option("--form", form, "built-in catalog form name");
    c->add_option("--spec", spec_file, "JSON form-spec file");
    c->add_option("--spec-inline", spec_inline, "JSON form-spec string");
    if (with_csv) {
      c->add_option("--csv", csv_file, "CSV coefficient file (n,re,im rows)");
      c->add_option("--context", context_file, "half-integral context JSON file");
    }
  };

  auto* c_expand = app.add_subcommand("expand", "materialize a form's q-expansion");
  add_source(c_expand, false);

  long p = 2, j = 1, terms = 16, t = 1;
  std::string path = "auto";
  bool check_eigen = false;
  auto* c_hecke = app.add_subcommand("hecke", "prime-power coefficient subsequences");
  add_source(c_hecke, false);
  c_hecke->add_option("--p", p, "prime");
  c_hecke->add_option("--j", j, "operator index j");
  c_hecke->add_option("--terms", terms, "number of subsequence terms");
  c_hecke->add_option("--path", path, "auto|direct|recurrence");
  c_hecke->add_flag("--check", check_eigen, "verify the eigen generating identity instead");

  bool synthetic = false, roundtrip = false;
  long sh_k = 2, sh_level = 4, sh_t = 1, chi_index = 0, transfer_p = 0;
  std::string emit = "A";
  auto* c_shimura = app.add_subcommand("shimura", "coefficient-level lift and its inverse");
  c_shimura->add_option("--context", context_file, "half-integral context JSON file");
  c_shimura->add_flag("--synthetic", synthetic, "generate synthetic eigen-data");
  c_shimura->add_option("--k", sh_k, "weight parameter k (weight k+1/2)");
  c_shimura->add_option("--level", sh_level, "level (divisible by 4)");
  c_shimura->add_option("--t", sh_t, "squarefree t");
  c_shimura->add_option("--chi-index", chi_index, "character index mod level");
  c_shimura->add_option("--terms", terms, "sequence length");
  c_shimura->add_option("--emit", emit, "A|b|context");
  c_shimura->add_option("--transfer-p", transfer_p, "run the eigen transfer check at p");
  c_shimura->add_flag("--roundtrip", roundtrip, "check invert(lift(b)) == b");

  double theta1 = -0.5, theta2 = 0.5;
  bool strict = false;
  std::string subseq = "all";
  auto* c_scan = app.add_subcommand("scan", "wedge escapes and sign changes");
  add_source(c_scan, true);
  c_scan->add_option("--subseq", subseq, "all|p-power|t-square");
  c_scan->add_option("--p", p, "prime for p-power subsequences");
  c_scan->add_option("--j", j, "stride j for p-power subsequences");
  c_scan->add_option("--t", t, "t for t-square subsequences");
  c_scan->add_option("--theta1", theta1, "wedge start angle");
  c_scan->add_option("--theta2", theta2, "wedge end angle");
  c_scan->add_flag("--strict-wedge", strict, "treat 0 as escaping");

  long M = 0, kron_D = 0;
  double lchi_s = 2.0, identity_s = 8.0;
  bool check_identity = false;
  auto* c_analyze = app.add_subcommand("analyze", "partial sums and abscissa estimates");
  add_source(c_analyze, true);
  c_analyze->add_option("--subseq", subseq, "all|p-power|t-square");
  c_analyze->add_option("--p", p, "prime for p-power subsequences");
  c_analyze->add_option("--j", j, "stride j for p-power subsequences");
  c_analyze->add_option("--t", t, "t for t-square subsequences");
  c_analyze->add_option("--M", M, "truncation for estimates");
  c_analyze->add_option("--kronecker", kron_D, "evaluate L(s, (D/.)) instead");
  c_analyze->add_option("--s", lchi_s, "s for the L evaluation");
  c_analyze->add_flag("--check-lift-identity", check_identity, "check the lift partial-sum identity");
  c_analyze->add_option("--identity-s", identity_s, "s for the lift identity check");

  std::string suite = "all";
  auto* c_verify = app.add_subcommand("verify", "run the invariant suites");
  c_verify->add_option("--suite", suite, "hecke|shimura|wedge|dirichlet|all");

  auto* c_catalog = app.add_subcommand("catalog", "list built-in forms and self-checks");
  (void)c_catalog;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (app.got_subcommand("expand")) return cmd_expand(g, form, spec_file, spec_inline);
    if (app.got_subcommand("hecke"))
      return cmd_hecke(g, form, spec_file, spec_inline, p, j, terms, path, check_eigen);
    if (app.got_subcommand("shimura"))
      return cmd_shimura(g, context_file, synthetic, sh_k, sh_level, sh_t, chi_index, terms,
                         emit, transfer_p, roundtrip);
    if (app.got_subcommand("scan"))
      return cmd_scan(g, form, spec_file, spec_inline, csv_file, context_file, subseq, p, j, t,
                      theta1, theta2, strict);
    if (app.got_subcommand("analyze"))
      return cmd_analyze(g, form, spec_file, spec_inline, csv_file, context_file, subseq, p, j,
                         t, M, kron_D, lchi_s, check_identity, identity_s);
    if (app.got_subcommand("verify")) return cmd_verify(g, suite);
    if (app.got_subcommand("catalog")) return cmd_catalog(g);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "wedgelab/catalog.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wedgelab::catalog {

namespace {

mpq_class parse_mpq(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

json cyc_to_json(const CycNumber& v) {
  mpq_class q;
  if (v.rational_value(&q)) return json(q.get_str());
  json j;
  j["order"] = v.order();
  json coeffs = json::array();
  CycNumber c = v.canonical();
  for (const auto& x : c.coeffs()) coeffs.push_back(x.get_str());
  j["coeffs"] = coeffs;
  return j;
}

CycNumber cyc_from_json(const json& j) {
  if (j.is_number_integer()) return CycNumber(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return CycNumber(parse_mpq(j.get<std::string>()));
  if (j.is_object()) {
    unsigned order = j.at("order").get<unsigned>();
    const json& coeffs = j.at("coeffs");
    CycNumber acc;
    long i = 0;
    for (const auto& c : coeffs) {
      mpq_class q = c.is_string() ? parse_mpq(c.get<std::string>())
                                  : mpq_class(static_cast<long>(c.get<long long>()));
      if (q != 0)
        acc += CycNumber::root_of_unity(order, i).scaled(q);
      ++i;
    }
    if (i == 0) return CycNumber();
    // make sure the order is kept even for rational-valued inputs
    acc += CycNumber::root_of_unity(order, 0).scaled(mpq_class(0));
    return acc;
  }
  throw std::invalid_argument("bad cyclotomic value in JSON");
}

json character_to_json(const DirichletCharacter& chi) {
  json j;
  switch (chi.kind()) {
    case DirichletCharacter::Kind::Generators: {
      j["modulus"] = chi.modulus();
      json gens = json::array();
      for (const auto& c : chi.components()) gens.push_back(json::array({c.generator, c.exponent}));
      j["generators"] = gens;
      j["valueOrder"] = chi.order();
      return j;
    }
    case DirichletCharacter::Kind::Kronecker:
      j["kronecker"] = static_cast<long long>(chi.kronecker_top().get_si());
      return j;
    case DirichletCharacter::Kind::Product: {
      json fs = json::array();
      for (const auto& f : chi.factors()) fs.push_back(character_to_json(f));
      j["product"] = fs;
      return j;
    }
  }
  throw std::logic_error("unreachable");
}

DirichletCharacter character_from_json(const json& j) {
  if (j.contains("kronecker"))
    return DirichletCharacter::kronecker_character(mpz_class(static_cast<long>(j.at("kronecker").get<long long>())));
  if (j.contains("product")) {
    std::vector<DirichletCharacter> fs;
    for (const auto& f : j.at("product")) fs.push_back(character_from_json(f));
    return DirichletCharacter::product(std::move(fs));
  }
  long modulus = j.at("modulus").get<long>();
  auto comps = DirichletCharacter::components_of_modulus(modulus);
  std::vector<long> exps(comps.size(), 0);
  if (j.contains("generators")) {
    for (const auto& ge : j.at("generators")) {
      long g = ge.at(0).get<long>();
      long e = ge.at(1).get<long>();
      bool matched = false;
      for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].generator == g) {
          exps[i] = e;
          matched = true;
          break;
        }
      if (!matched)
        throw std::invalid_argument("character JSON: generator " + std::to_string(g) +
                                    " is not a component generator of modulus " +
                                    std::to_string(modulus));
    }
  }
  return DirichletCharacter::from_generator_exponents(modulus, exps);
}

FormSpec FormSpec::parse(const json& j) {
  FormSpec spec;
  const std::string type = j.at("type").get<std::string>();
  if (type == "eta_quotient") {
    spec.kind = Kind::EtaQuotient;
    for (const auto& f : j.at("factors"))
      spec.eta.factors.emplace_back(f.at(0).get<long>(), f.at(1).get<long>());
  } else if (type == "unary_theta") {
    spec.kind = Kind::UnaryTheta;
    spec.psi = character_from_json(j.at("psi"));
    spec.nu = j.at("nu").get<int>();
    spec.theta_t = j.at("t").get<long>();
  } else if (type == "synthetic_eigen") {
    spec.kind = Kind::SyntheticEigen;
    spec.synthetic.k = j.at("k").get<long>();
    spec.synthetic.N = j.at("level").get<long>();
    spec.synthetic.t = j.at("t").get<long>();
    spec.synthetic.chi = character_from_json(j.at("chi"));
    spec.synthetic.a_t = j.contains("a_t") ? cyc_from_json(j.at("a_t")) : CycNumber(1L);
    if (j.contains("lambdas"))
      for (const auto& [key, val] : j.at("lambdas").items())
        spec.synthetic.lambdas[std::stol(key)] = cyc_from_json(val);
  } else {
    throw std::invalid_argument("unknown form kind: " + type);
  }
  if (j.contains("weight2")) spec.declared_weight2 = j.at("weight2").get<long>();
  if (j.contains("level")) spec.declared_level = j.at("level").get<long>();
  if (j.contains("chi") && type != "synthetic_eigen")
    spec.declared_chi = character_from_json(j.at("chi"));
  return spec;
}

json FormSpec::to_json() const {
  json j;
  switch (kind) {
    case Kind::EtaQuotient: {
      j["type"] = "eta_quotient";
      json fs = json::array();
      for (const auto& [d, r] : eta.factors) fs.push_back(json::array({d, r}));
      j["factors"] = fs;
      break;
    }
    case Kind::UnaryTheta:
      j["type"] = "unary_theta";
      j["psi"] = character_to_json(psi);
      j["nu"] = nu;
      j["t"] = theta_t;
      break;
    case Kind::SyntheticEigen: {
      j["type"] = "synthetic_eigen";
      j["k"] = synthetic.k;
      j["level"] = synthetic.N;
      j["t"] = synthetic.t;
      j["chi"] = character_to_json(synthetic.chi);
      j["a_t"] = cyc_to_json(synthetic.a_t);
      json ls;
      for (const auto& [p, l] : synthetic.lambdas) ls[std::to_string(p)] = cyc_to_json(l);
      j["lambdas"] = ls;
      break;
    }
  }
  if (declared_weight2) j["weight2"] = *declared_weight2;
  if (declared_level && kind != Kind::SyntheticEigen) j["level"] = *declared_level;
  if (declared_chi) j["chi"] = character_to_json(*declared_chi);
  return j;
}

EtaInvariants eta_invariants(const EtaSpec& spec) {
  if (spec.factors.empty()) throw std::invalid_argument("eta_invariants: empty spec");
  EtaInvariants inv;
  long lcm_d = 1;
  long offset24 = 0;
  mpq_class sum_r_over_d(0);
  inv.character_top = 1;
  for (const auto& [d, r] : spec.factors) {
    if (d <= 0) throw std::invalid_argument("eta_invariants: d must be positive");
    inv.weight2 += r;
    offset24 += d * r;
    lcm_d = std::lcm(lcm_d, d);
    mpq_class term(r, d);
    term.canonicalize();
    sum_r_over_d += term;
    mpz_class dp;
    mpz_pow_ui(dp.get_mpz_t(), mpz_class(d).get_mpz_t(), static_cast<unsigned long>(std::abs(r)));
    // negative exponents contribute d^{-|r|}; multiplying by d^{|r|} instead
    // keeps the top integral and lands in the same square class, and the
    // symbol vanishes identically on gcd(n, d) > 1 either way
    inv.character_top *= dp;
  }
  inv.offset = mpq_class(offset24, 24);
  inv.offset.canonicalize();
  // level: smallest multiple of lcm(d) with N * sum(r_d/d) / 24 integral
  mpq_class s24 = sum_r_over_d / 24;
  s24.canonicalize();
  mpz_class den = s24.get_den();
  mpz_class level = lcm(mpz_class(lcm_d), den);
  if (!level.fits_slong_p()) throw std::overflow_error("eta_invariants: level overflow");
  inv.level = level.get_si();
  if (inv.weight2 % 2 == 0 && (inv.weight2 / 2) % 2 != 0) inv.character_top = -inv.character_top;
  return inv;
}

LoadedForm load_form(const FormSpec& spec, long precision, const std::string& name) {
  LoadedForm lf;
  lf.name = name;
  switch (spec.kind) {
    case FormSpec::Kind::EtaQuotient: {
      EtaInvariants inv = eta_invariants(spec.eta);
      if (inv.offset < 0)
        throw std::invalid_argument(name + ": negative total exponent offset");
      lf.weight2 = inv.weight2;
      lf.level = inv.level;
      if (spec.declared_weight2 && *spec.declared_weight2 != inv.weight2)
        throw std::invalid_argument(name + ": declared weight disagrees with sum(r_d)/2");
      if (spec.declared_level && *spec.declared_level != inv.level)
        throw std::invalid_argument(name + ": declared level disagrees with the eta formula");
      lf.series = eta_quotient(spec.eta, precision);
      if (inv.weight2 % 2 == 0) {
        if (!lf.series->integral_offset())
          throw std::invalid_argument(name + ": integral-weight form with non-integral exponents");
        DirichletCharacter chi = spec.declared_chi
                                     ? *spec.declared_chi
                                     : DirichletCharacter::kronecker_character(inv.character_top);
        lf.type = LoadedForm::Type::Integral;
        lf.integral = hecke::make_form_context(inv.weight2 / 2, inv.level, chi, *lf.series, false);
      } else {
        lf.type = LoadedForm::Type::HalfIntegralExhibit;
      }
      return lf;
    }
    case FormSpec::Kind::UnaryTheta: {
      lf.type = LoadedForm::Type::HalfIntegralExhibit;
      lf.weight2 = spec.nu == 1 ? 3 : 1;
      lf.series = unary_theta(spec.psi, spec.nu, spec.theta_t, precision);
      return lf;
    }
    case FormSpec::Kind::SyntheticEigen: {
      lf.type = LoadedForm::Type::Synthetic;
      lf.weight2 = 2 * spec.synthetic.k + 1;
      lf.level = spec.synthetic.N;
      lf.half = shimura::generate_synthetic_context(spec.synthetic, precision);
      return lf;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> cat;
  {
    CatalogEntry e;
    e.name = "delta";
    e.description = "eta(z)^24: weight 12, level 1, trivial character";
    e.spec.kind = FormSpec::Kind::EtaQuotient;
    e.spec.eta.factors = {{1, 24}};
    e.spec.declared_weight2 = 24;
    e.spec.declared_level = 1;
    e.eigenform = e.newform = true;
    e.r_chi_odd = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "eta11";
    e.description = "eta(z)^2 eta(11z)^2: weight 2, level 11, trivial character";
    e.spec.kind = FormSpec::Kind::EtaQuotient;
    e.spec.eta.factors = {{1, 2}, {11, 2}};
    e.spec.declared_weight2 = 4;
    e.spec.declared_level = 11;
    e.eigenform = e.newform = true;
    e.r_chi_odd = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "eta4_6";
    e.description = "eta(4z)^6: weight 3, level 16, character (-4/.)";
    e.spec.kind = FormSpec::Kind::EtaQuotient;
    e.spec.eta.factors = {{4, 6}};
    e.spec.declared_weight2 = 6;
    e.spec.declared_level = 16;
    e.eigenform = e.newform = true;
    e.r_chi_odd = false;  // (-4/.) has order 2
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "theta8_3";
    e.description = "eta(8z)^3 = sum (-4/n) n q^{n^2}: weight 3/2 exhibit";
    e.spec.kind = FormSpec::Kind::EtaQuotient;
    e.spec.eta.factors = {{8, 3}};
    e.eigenform = e.newform = false;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "theta_basic";
    e.description = "sum_{n>=1} q^{n^2}: weight 1/2 exhibit, cusp condition fails";
    e.spec.kind = FormSpec::Kind::UnaryTheta;
    e.spec.psi = DirichletCharacter::principal(1);
    e.spec.nu = 0;
    e.spec.theta_t = 1;
    e.eigenform = e.newform = false;
    cat.push_back(e);
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = make_catalog();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog form: " + name);
}

LoadedForm load_catalog_form(const std::string& name, long precision) {
  const CatalogEntry& e = catalog_entry(name);
  return load_form(e.spec, precision, e.name);
}

SelfCheck self_check(const CatalogEntry& entry, long precision) {
  SelfCheck sc;
  LoadedForm lf = load_form(entry.spec, precision, entry.name);
  std::ostringstream os;
  if (lf.type == LoadedForm::Type::Integral && entry.eigenform) {
    const auto& f = *lf.integral;
    if (!(f.a(1) == CycNumber(1L))) {
      sc.pass = false;
      sc.detail = "a(1) != 1";
      return sc;
    }
    for (long p = 2; p <= 13; ++p) {
      if (!hecke::is_prime(p) || f.N % p == 0) continue;
      if (f.precision() < 2 * p) break;
      auto lambda = hecke::tj_eigenvalue(f, p, 1);
      if (!lambda) {
        sc.pass = false;
        sc.detail = "T(" + std::to_string(p) + ") eigen check failed";
        return sc;
      }
      if (!(*lambda == f.a(p))) {
        sc.pass = false;
        sc.detail = "T(p) eigenvalue differs from a(p) at p=" + std::to_string(p);
        return sc;
      }
    }
    os << "eigen checks p<=13 ok";
    if (entry.r_chi_odd != (f.chi.order() % 2 == 1)) {
      sc.pass = false;
      sc.detail = "r_chi parity flag disagrees with the computed order";
      return sc;
    }
  } else {
    os << "exhibit: no eigen checks";
  }
  sc.pass = true;
  sc.detail = os.str();
  return sc;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string exponent_string(const mpq_class& offset, long n) {
  mpq_class e = offset + n;
  e.canonicalize();
  return e.get_str();
}

}  // namespace

std::string series_to_csv(const QSeries& s, bool exact) {
  std::ostringstream os;
  for (long n = 0; n < s.precision(); ++n) {
    CycNumber v = s.coeff(n);
    if (exact) {
      CycNumber c = v.canonical();
      os << exponent_string(s.offset(), n) << ',' << c.order() << ',' << c.coeff_string() << '\n';
    } else {
      auto z = v.embed();
      os << exponent_string(s.offset(), n) << ',' << format_double(z.real()) << ','
         << format_double(z.imag()) << '\n';
    }
  }
  return os.str();
}

json series_to_json(const QSeries& s, bool exact) {
  json j;
  j["offset"] = s.offset().get_str();
  j["precision"] = s.precision();
  j["mode"] = exact ? "exact" : "embedded";
  json terms = json::array();
  for (long n = 0; n < s.precision(); ++n) {
    CycNumber v = s.coeff(n);
    if (exact)
      terms.push_back(json::array({exponent_string(s.offset(), n), cyc_to_json(v)}));
    else {
      auto z = v.embed();
      terms.push_back(json::array({exponent_string(s.offset(), n), z.real(), z.imag()}));
    }
  }
  j["terms"] = terms;
  return j;
}

std::string sequence_to_csv(const std::vector<CycNumber>& seq, long first_index, bool exact) {
  std::ostringstream os;
  for (size_t i = 0; i < seq.size(); ++i) {
    long n = first_index + static_cast<long>(i);
    if (exact) {
      CycNumber c = seq[i].canonical();
      os << n << ',' << c.order() << ',' << c.coeff_string() << '\n';
    } else {
      auto z = seq[i].embed();
      os << n << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
    }
  }
  return os.str();
}

json context_to_json(const shimura::HalfIntegralContext& ctx) {
  json j;
  j["k"] = ctx.k;
  j["level"] = ctx.N;
  j["t"] = ctx.t;
  j["chi"] = character_to_json(ctx.chi);
  j["provenance"] = ctx.provenance;
  j["claimed_in_Sstar"] = ctx.claimed_in_Sstar;
  if (ctx.nonzero_witness) j["nonzero_witness"] = *ctx.nonzero_witness;
  json b = json::array();
  for (const auto& v : ctx.b) b.push_back(cyc_to_json(v));
  j["b"] = b;
  return j;
}

shimura::HalfIntegralContext context_from_json(const json& j) {
  std::vector<CycNumber> b;
  for (const auto& v : j.at("b")) b.push_back(cyc_from_json(v));
  auto ctx = shimura::make_halfintegral_context(
      j.at("k").get<long>(), j.at("level").get<long>(), character_from_json(j.at("chi")),
      j.at("t").get<long>(), std::move(b),
      j.contains("provenance") ? j.at("provenance").get<std::string>() : "external");
  if (j.contains("claimed_in_Sstar")) ctx.claimed_in_Sstar = j.at("claimed_in_Sstar").get<bool>();
  return ctx;
}

json scan_report_to_json(const wedge::ScanReport& rep) {
  json j;
  j["start_index"] = rep.start_index;
  j["end_index"] = rep.end_index;
  j["escapes"] = rep.escapes;
  j["re_sign_changes"] = rep.re_changes;
  j["im_sign_changes"] = rep.im_changes;
  j["escape_count"] = rep.escapes.size();
  j["re_sign_change_count"] = rep.re_changes.size();
  j["im_sign_change_count"] = rep.im_changes.size();
  if (rep.first_escape)
    j["first_escape"] = *rep.first_escape;
  else
    j["first_escape"] = "none";
  return j;
}

std::string scan_report_to_csv(const wedge::ScanReport& rep) {
  // one row per scanned index: n,escape,re_change,im_change
  std::ostringstream os;
  size_t ei = 0, ri = 0, ii = 0;
  for (long n = rep.start_index; n < rep.end_index; ++n) {
    int esc = 0, rc = 0, ic = 0;
    if (ei < rep.escapes.size() && rep.escapes[ei] == n) {
      esc = 1;
      ++ei;
    }
    if (ri < rep.re_changes.size() && rep.re_changes[ri] == n) {
      rc = 1;
      ++ri;
    }
    if (ii < rep.im_changes.size() && rep.im_changes[ii] == n) {
      ic = 1;
      ++ii;
    }
    os << n << ',' << esc << ',' << rc << ',' << ic << '\n';
  }
  return os.str();
}

}  // namespace wedgelab::catalog

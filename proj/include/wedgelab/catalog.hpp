#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wedgelab/hecke.hpp"
#include "wedgelab/qseries.hpp"
#include "wedgelab/shimura.hpp"
#include "wedgelab/wedge.hpp"

namespace wedgelab::catalog {

using json = nlohmann::ordered_json;

/// Declarative description of a form: an eta quotient, a unary theta
/// series, or synthetic eigen-data.  Declared weight/level/character are
/// optional and cross-checked against the computed ones when present.
struct FormSpec {
  enum class Kind { EtaQuotient, UnaryTheta, SyntheticEigen };
  Kind kind = Kind::EtaQuotient;

  // eta quotient
  EtaSpec eta;
  // unary theta
  DirichletCharacter psi;
  int nu = 1;
  long theta_t = 1;
  // synthetic eigen-data
  shimura::SyntheticEigenSpec synthetic;

  std::optional<long> declared_weight2;  // 2 * weight
  std::optional<long> declared_level;
  std::optional<DirichletCharacter> declared_chi;

  static FormSpec parse(const json& j);
  json to_json() const;
};

/// Weight, level and nebentypus of an eta quotient by the standard
/// formulas: weight = sum(r_d)/2, level = smallest multiple N of lcm(d)
/// with 24 | N sum(r_d/d), character (((-1)^k prod d^{r_d}) / .).
struct EtaInvariants {
  long weight2 = 0;        // sum r_d
  long level = 1;
  mpq_class offset;        // sum d r_d / 24
  mpz_class character_top; // (-1)^k prod d^{r_d} (integral weight only)
};

EtaInvariants eta_invariants(const EtaSpec& spec);

/// A materialized form: either an integral-weight Hecke context, a
/// half-integral exhibit carrying only its q-expansion, or synthetic
/// eigen-data carrying the square-indexed subfamily.
struct LoadedForm {
  enum class Type { Integral, HalfIntegralExhibit, Synthetic };
  Type type = Type::Integral;
  std::string name = "anonymous";
  std::optional<hecke::FormContext> integral;
  std::optional<shimura::HalfIntegralContext> half;
  std::optional<QSeries> series;  // q-expansion for eta/theta kinds
  long weight2 = 0;
  long level = 1;
};

LoadedForm load_form(const FormSpec& spec, long precision, const std::string& name = "anonymous");

struct CatalogEntry {
  std::string name;
  std::string description;
  FormSpec spec;
  bool eigenform = false;
  bool newform = false;
  bool r_chi_odd = true;
};

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& catalog_entry(const std::string& name);
LoadedForm load_catalog_form(const std::string& name, long precision);

/// Load-time self-check for built-in eigenforms: T(p) f = a(p) f exactly on
/// the shared window for p <= 13, p not dividing the level; plus offset
/// integrality and declared-invariant cross-checks.
struct SelfCheck {
  bool pass = false;
  std::string detail;
};
SelfCheck self_check(const CatalogEntry& entry, long precision);

// ---- serialization helpers -------------------------------------------------

json cyc_to_json(const CycNumber& v);
CycNumber cyc_from_json(const json& j);
json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const json& j);

json context_to_json(const shimura::HalfIntegralContext& ctx);
shimura::HalfIntegralContext context_from_json(const json& j);

std::string format_double(double v);

/// CSV rows of a series: "<exponent>,<re>,<im>" (embedded) or
/// "<exponent>,<order>,<c0;c1;...>" (exact).  One row per precision slot.
std::string series_to_csv(const QSeries& s, bool exact);
json series_to_json(const QSeries& s, bool exact);

std::string sequence_to_csv(const std::vector<CycNumber>& seq, long first_index, bool exact);
json scan_report_to_json(const wedge::ScanReport& rep);
std::string scan_report_to_csv(const wedge::ScanReport& rep);

}  // namespace wedgelab::catalog

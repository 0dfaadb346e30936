#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "wedgelab/characters.hpp"
#include "wedgelab/cyclotomic.hpp"

namespace wedgelab {

/// Eta quotient prod_d eta(d z)^{r_d}: list of (scale d, exponent r).
struct EtaSpec {
  std::vector<std::pair<long, long>> factors;
};

/// Truncated q-series sum_{n>=0} c_n q^{offset+n} with exact CycNumber
/// coefficients, a rational exponent offset (denominator dividing 24), and
/// an explicit precision: coefficients are known exactly for keys n in
/// [0, precision).  Storage is a sparse ordered map since theta-type series
/// are lacunary.  All arithmetic propagates precision by the min rule,
/// adjusted for offsets; nothing beyond the precision window is ever
/// reported.  Values are immutable in spirit: operations return new series.
class QSeries {
 public:
  QSeries() : offset_(0), prec_(0) {}
  QSeries(const mpq_class& offset, long precision);

  static QSeries one(long precision);

  long precision() const { return prec_; }
  const mpq_class& offset() const { return offset_; }
  bool integral_offset() const;
  const std::map<long, CycNumber>& terms() const { return c_; }

  /// Coefficient of q^{offset+n}; throws past the precision window.
  CycNumber coeff(long n) const;
  void set_coeff(long n, CycNumber v);

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const CycNumber& s) const;
  QSeries pow(long e) const;
  QSeries truncated(long precision) const;

  /// Rebase a series with integral non-negative offset to offset 0, so keys
  /// become absolute exponents (a(n) at key n).  Precision grows by the
  /// shift: the zero slots below the old offset are known.
  QSeries absolute() const;

 private:
  mpq_class offset_;
  long prec_;
  std::map<long, CycNumber> c_;
};

/// Exact equality of all coefficients over the shared precision window.
/// Offsets must differ by an integer.
bool equal_on_shared(const QSeries& a, const QSeries& b);

/// Euler pentagonal-number expansion of prod_{n>=1}(1-q^n): pairs
/// (exponent, sign) with exponent < bound, including (0,+1).
std::vector<std::pair<long, int>> pentagonal_expansion(long bound);

/// q-expansion of prod_d eta(d z)^{r_d} to `precision` coefficients past
/// the offset sum(d r_d)/24.  Integer coefficients.
QSeries eta_quotient(const EtaSpec& spec, long precision);

/// Unary theta series sum_{n>=1} psi(n) n^nu q^{t n^2}, nu in {0,1}.
/// The weight-1/2 constant-term convention is not modeled: the sum starts
/// at n = 1 (catalog-exhibit use only).
QSeries unary_theta(const DirichletCharacter& psi, int nu, long t, long precision);

}  // namespace wedgelab

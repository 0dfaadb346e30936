#include "wedgelab/qseries.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wedgelab {

namespace {

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("QSeries: exponent overflow");
  return z.get_si();
}

}  // namespace

QSeries::QSeries(const mpq_class& offset, long precision) : offset_(offset), prec_(precision) {
  if (precision < 0) throw std::invalid_argument("QSeries: negative precision");
  mpq_class scaled = offset * 24;
  if (!is_integer(scaled))
    throw std::invalid_argument("QSeries: offset denominator must divide 24");
}

QSeries QSeries::one(long precision) {
  QSeries s(mpq_class(0), precision);
  if (precision > 0) s.set_coeff(0, CycNumber(1L));
  return s;
}

bool QSeries::integral_offset() const { return is_integer(offset_); }

CycNumber QSeries::coeff(long n) const {
  if (n < 0 || n >= prec_)
    throw std::out_of_range("QSeries::coeff: index outside the precision window");
  auto it = c_.find(n);
  return it == c_.end() ? CycNumber() : it->second;
}

void QSeries::set_coeff(long n, CycNumber v) {
  if (n < 0 || n >= prec_)
    throw std::out_of_range("QSeries::set_coeff: index outside the precision window");
  if (v.is_structural_zero())
    c_.erase(n);
  else
    c_[n] = std::move(v);
}

QSeries QSeries::operator+(const QSeries& o) const {
  // Common offset is the min; both series must live on the same unit grid.
  mpq_class diff = offset_ - o.offset_;
  if (!is_integer(diff))
    throw std::invalid_argument("QSeries::+: offsets differ by a non-integer");
  long d = to_long(diff.get_num());
  const QSeries& lo = d >= 0 ? o : *this;  // series with the smaller offset
  const QSeries& hi = d >= 0 ? *this : o;
  long shift = d >= 0 ? d : -d;
  // the shifted series is known (as zero) below its offset too
  QSeries out(lo.offset_, std::min(lo.prec_, hi.prec_ + shift));
  for (const auto& [n, v] : lo.c_) {
    if (n >= out.prec_) break;
    out.set_coeff(n, v);
  }
  for (const auto& [n, v] : hi.c_) {
    if (n + shift >= out.prec_) break;
    CycNumber cur = out.coeff(n + shift);
    cur += v;
    out.set_coeff(n + shift, std::move(cur));
  }
  return out;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(CycNumber(-1L)); }

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries out(offset_ + o.offset_, std::min(prec_, o.prec_));
  std::map<long, CycNumber> acc;
  for (const auto& [na, va] : c_) {
    if (na >= out.prec_) break;
    for (const auto& [nb, vb] : o.c_) {
      if (na + nb >= out.prec_) break;
      auto it = acc.find(na + nb);
      if (it == acc.end())
        acc.emplace(na + nb, va * vb);
      else
        it->second += va * vb;
    }
  }
  for (auto& [n, v] : acc)
    if (!v.is_structural_zero()) out.set_coeff(n, std::move(v));
  return out;
}

QSeries QSeries::scaled(const CycNumber& s) const {
  QSeries out(offset_, prec_);
  if (s.is_structural_zero()) return out;
  for (const auto& [n, v] : c_) out.set_coeff(n, v * s);
  return out;
}

QSeries QSeries::pow(long e) const {
  if (e < 0) throw std::invalid_argument("QSeries::pow: negative exponent");
  QSeries acc = one(prec_);  // offsets accumulate to e * offset through mul
  QSeries base = *this;
  long k = e;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

QSeries QSeries::truncated(long precision) const {
  if (precision > prec_)
    throw std::invalid_argument("QSeries::truncated: cannot extend precision");
  QSeries out(offset_, precision);
  for (const auto& [n, v] : c_) {
    if (n >= precision) break;
    out.set_coeff(n, v);
  }
  return out;
}

QSeries QSeries::absolute() const {
  if (!integral_offset())
    throw std::invalid_argument("QSeries::absolute: offset is not an integer");
  long shift = to_long(mpq_class(offset_).get_num());
  if (shift < 0) throw std::invalid_argument("QSeries::absolute: negative offset");
  if (shift == 0) return *this;
  QSeries out(mpq_class(0), prec_ + shift);
  for (const auto& [n, v] : c_) out.set_coeff(n + shift, v);
  return out;
}

bool equal_on_shared(const QSeries& a, const QSeries& b) {
  mpq_class diff = a.offset() - b.offset();
  if (diff.get_den() != 1) return false;
  long d = to_long(diff.get_num());
  // align: exponent offset_a + n  ==  offset_b + (n + d)
  long shared = std::min(a.precision(),
                         d >= 0 ? b.precision() - d : b.precision() - d /*d<0 adds*/);
  if (shared < 0) shared = 0;
  for (long n = 0; n < shared; ++n) {
    long nb = n + d;
    CycNumber va = n < a.precision() ? a.coeff(n) : CycNumber();
    CycNumber vb = (nb >= 0 && nb < b.precision()) ? b.coeff(nb) : CycNumber();
    if (!(va == vb)) return false;
  }
  // exponents below the higher offset must be zero on the other side
  if (d > 0) {
    for (long nb = 0; nb < std::min(d, b.precision()); ++nb)
      if (!b.coeff(nb).is_zero()) return false;
  } else if (d < 0) {
    for (long na = 0; na < std::min(-d, a.precision()); ++na)
      if (!a.coeff(na).is_zero()) return false;
  }
  return true;
}

std::vector<std::pair<long, int>> pentagonal_expansion(long bound) {
  std::vector<std::pair<long, int>> out;
  if (bound > 0) out.emplace_back(0, 1);
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2;
    long g2 = k * (3 * k + 1) / 2;
    int sign = (k % 2 == 0) ? 1 : -1;
    bool any = false;
    if (g1 < bound) {
      out.emplace_back(g1, sign);
      any = true;
    }
    if (g2 < bound) {
      out.emplace_back(g2, sign);
      any = true;
    }
    if (!any) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// In-place multiply of a dense integer series by prod_{n>=1}(1 - q^{d n}),
// truncated to acc.size() coefficients.
void multiply_by_eta_factor(std::vector<mpz_class>& acc, long d) {
  const long prec = static_cast<long>(acc.size());
  auto pent = pentagonal_expansion((prec + d - 1) / d);
  for (long n = prec - 1; n >= 0; --n) {
    mpz_class v = acc[n];  // term (0,+1)
    for (const auto& [g, s] : pent) {
      if (g == 0) continue;
      long e = g * d;
      if (e > n) break;
      if (s > 0)
        v += acc[n - e];
      else
        v -= acc[n - e];
    }
    acc[n] = v;
  }
}

// In-place multiply by 1 / prod_{n>=1}(1 - q^{d n}) = partition series in q^d.
void multiply_by_eta_factor_inverse(std::vector<mpz_class>& acc, long d) {
  const long prec = static_cast<long>(acc.size());
  const long md = (prec + d - 1) / d;
  auto pent = pentagonal_expansion(md);
  // v = inverse of the pentagonal series on the compressed grid
  std::vector<mpz_class> v(md);
  v[0] = 1;
  for (long m = 1; m < md; ++m) {
    mpz_class s = 0;
    for (const auto& [g, sg] : pent) {
      if (g == 0) continue;
      if (g > m) break;
      if (sg > 0)
        s += v[m - g];
      else
        s -= v[m - g];
    }
    v[m] = -s;
  }
  for (long n = prec - 1; n >= 0; --n) {
    mpz_class s = acc[n];  // v[0] = 1
    for (long m = 1; m * d <= n; ++m)
      if (v[m] != 0) s += v[m] * acc[n - m * d];
    acc[n] = s;
  }
}

}  // namespace

QSeries eta_quotient(const EtaSpec& spec, long precision) {
  if (precision < 1) throw std::invalid_argument("eta_quotient: precision must be >= 1");
  if (spec.factors.empty()) throw std::invalid_argument("eta_quotient: empty spec");
  long offset24 = 0;
  bool any_nonzero = false;
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    auto [d, r] = spec.factors[i];
    if (d <= 0) throw std::invalid_argument("eta_quotient: scale d must be positive");
    for (size_t j = i + 1; j < spec.factors.size(); ++j)
      if (spec.factors[j].first == d)
        throw std::invalid_argument("eta_quotient: duplicate scale d");
    if (r != 0) any_nonzero = true;
    offset24 += d * r;
  }
  if (!any_nonzero) throw std::invalid_argument("eta_quotient: all exponents are zero");
  mpq_class offset(offset24, 24);
  offset.canonicalize();

  std::vector<mpz_class> acc(precision);
  acc[0] = 1;
  for (const auto& [d, r] : spec.factors) {
    if (r > 0)
      for (long i = 0; i < r; ++i) multiply_by_eta_factor(acc, d);
    else
      for (long i = 0; i < -r; ++i) multiply_by_eta_factor_inverse(acc, d);
  }

  QSeries out(offset, precision);
  for (long n = 0; n < precision; ++n)
    if (acc[n] != 0) out.set_coeff(n, CycNumber(acc[n]));
  return out;
}

QSeries unary_theta(const DirichletCharacter& psi, int nu, long t, long precision) {
  if (nu != 0 && nu != 1) throw std::invalid_argument("unary_theta: nu must be 0 or 1");
  if (t <= 0) throw std::invalid_argument("unary_theta: t must be positive");
  QSeries out(mpq_class(0), precision);
  for (long n = 1; n <= precision / t; ++n) {
    if (n > precision / t / n) break;  // t n^2 >= precision
    long e = t * n * n;
    if (e >= precision) break;
    CycNumber v = psi.evaluate(n);
    if (v.is_structural_zero()) continue;
    if (nu == 1) v = v.scaled(mpq_class(n));
    out.set_coeff(e, std::move(v));
  }
  return out;
}

}  // namespace wedgelab

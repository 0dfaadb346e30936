#include "wedgelab/hecke.hpp"

#include <cmath>
#include <stdexcept>

namespace wedgelab::hecke {

namespace {

long pow_long_checked(long base, long exp, long cap) {
  // returns base^exp, or cap+1 if it exceeds cap
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class power_z(long base, long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

FormContext make_form_context(long k, long N, DirichletCharacter chi, const QSeries& series,
                              bool normalized_newform) {
  if (k < 1) throw std::invalid_argument("form context: weight must be positive");
  if (N < 1) throw std::invalid_argument("form context: level must be positive");
  if (!series.integral_offset())
    throw std::invalid_argument("form context: series has non-integral exponent offset");
  FormContext f;
  f.k = k;
  f.N = N;
  f.chi = std::move(chi);
  f.coeffs = series.absolute();
  f.normalized_newform = normalized_newform;
  if (normalized_newform) {
    if (f.coeffs.precision() < 2 || !(f.coeffs.coeff(1) == CycNumber(1L)))
      throw std::invalid_argument("form context: normalized newform needs a(1) = 1");
  }
  return f;
}

namespace {

// shared worker: T_j(p) applied to an absolutely-indexed series
QSeries apply_tj_series(const QSeries& s, long k, const DirichletCharacter& chi, long p,
                        long j) {
  if (j < 0) throw std::invalid_argument("hecke_tj: j must be non-negative");
  if (!is_prime(p)) throw std::invalid_argument("hecke_tj: p must be prime");
  if (j == 0) return s.scaled(CycNumber(2L));
  const long M = s.precision();
  const long pj = pow_long_checked(p, j, M);
  const long out_prec = pj > M ? 0 : M / pj;
  if (out_prec < 1)
    throw std::invalid_argument("hecke_tj: precision too small to produce any coefficient");
  CycNumber twist = chi.evaluate(p).pow(static_cast<unsigned long>(j));
  twist = twist.scaled(mpq_class(power_z(p, j * (k - 1))));
  QSeries out(mpq_class(0), out_prec);
  for (long n = 0; n < out_prec; ++n) {
    CycNumber v = s.coeff(pj * n);
    if (!twist.is_structural_zero() && n % pj == 0) v += twist * s.coeff(n / pj);
    if (!v.is_structural_zero()) out.set_coeff(n, std::move(v));
  }
  return out;
}

}  // namespace

QSeries hecke_tj(const FormContext& f, long p, long j) {
  return apply_tj_series(f.coeffs, f.k, f.chi, p, j);
}

QSeries hecke_tj_by_recurrence(const FormContext& f, long p, long j) {
  if (j < 0) throw std::invalid_argument("hecke_tj_by_recurrence: j must be non-negative");
  if (j == 0) return f.coeffs.scaled(CycNumber(2L));
  QSeries prev = f.coeffs.scaled(CycNumber(2L));      // T_0 f
  QSeries cur = apply_tj_series(f.coeffs, f.k, f.chi, p, 1);  // T_1 f
  CycNumber kappa = f.chi.evaluate(p).scaled(mpq_class(power_z(p, f.k - 1)));
  for (long m = 1; m < j; ++m) {
    QSeries next = apply_tj_series(cur, f.k, f.chi, p, 1) - prev.scaled(kappa);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::optional<CycNumber> tj_eigenvalue(const FormContext& f, long p, long j) {
  if (f.precision() < 2 || !(f.a(1) == CycNumber(1L))) return std::nullopt;
  QSeries tf = hecke_tj(f, p, j);
  if (tf.precision() < 2) return std::nullopt;
  CycNumber lambda = tf.coeff(1);
  QSeries expect = f.coeffs.truncated(tf.precision()).scaled(lambda);
  if (!equal_on_shared(tf, expect)) return std::nullopt;
  return lambda;
}

std::optional<CycNumber> power_sum_eigenvalue(const FormContext& f, long p, long j) {
  if (j < 0) throw std::invalid_argument("power_sum_eigenvalue: j must be non-negative");
  auto lambda1 = tj_eigenvalue(f, p, 1);
  if (!lambda1) return std::nullopt;
  if (j == 0) return CycNumber(2L);
  if (j == 1) return lambda1;
  CycNumber kappa = f.chi.evaluate(p).scaled(mpq_class(power_z(p, f.k - 1)));
  CycNumber prev(2L);       // lambda_0
  CycNumber cur = *lambda1;  // lambda_1
  for (long m = 1; m < j; ++m) {
    CycNumber next = *lambda1 * cur - kappa * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<CycNumber> prime_power_coefficients(const FormContext& f, long p, long j,
                                                long terms, PowerPath path) {
  if (terms < 1) throw std::invalid_argument("prime_power_coefficients: terms must be >= 1");
  if (j < 1) throw std::invalid_argument("prime_power_coefficients: j must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("prime_power_coefficients: p must be prime");
  const long M = f.precision();

  const long top = j * (terms - 1);
  mpz_class reach = power_z(p, top);
  const bool direct_fits = reach < M;

  if (path == PowerPath::Auto) path = direct_fits ? PowerPath::Direct : PowerPath::Recurrence;

  if (path == PowerPath::Direct) {
    if (!direct_fits)
      throw std::invalid_argument("prime_power_coefficients: precision shortfall for direct path");
    std::vector<CycNumber> out;
    out.reserve(terms);
    long idx = 1;
    for (long n = 0; n < terms; ++n) {
      out.push_back(f.a(idx));
      if (n + 1 < terms)
        for (long i = 0; i < j; ++i) idx *= p;
    }
    return out;
  }

  // recurrence path: verified eigenform extension
  auto lambda = tj_eigenvalue(f, p, 1);
  if (!lambda)
    throw std::invalid_argument(
        "prime_power_coefficients: recurrence path needs a verified normalized eigenform");
  CycNumber kappa = f.chi.evaluate(p).scaled(mpq_class(power_z(p, f.k - 1)));
  std::vector<CycNumber> u;  // u[m] = a(p^m)
  u.reserve(top + 1);
  u.push_back(CycNumber(1L));
  if (top >= 1) u.push_back(*lambda);
  for (long m = 1; m < top; ++m) u.push_back(*lambda * u[m] - kappa * u[m - 1]);
  // sanity: agree with the stored expansion as far as it reaches
  long idx = 1;
  for (long m = 0; m <= top; ++m) {
    if (idx < M && !(u[m] == f.a(idx)))
      throw std::logic_error("prime_power_coefficients: recurrence disagrees with expansion");
    if (idx > (M - 1) / p) break;
    idx *= p;
  }
  std::vector<CycNumber> out;
  out.reserve(terms);
  for (long n = 0; n < terms; ++n) out.push_back(u[static_cast<size_t>(n) * j]);
  return out;
}

std::vector<CycNumber> eigen_generating_residual(const FormContext& f, long p, long j,
                                                 long terms, PowerPath path) {
  auto seq = prime_power_coefficients(f, p, j, terms, path);
  auto lambda = power_sum_eigenvalue(f, p, j);
  if (!lambda)
    throw std::invalid_argument(
        "eigen_generating_residual: f is not a verified normalized eigenform at p");
  CycNumber lambda_j = *lambda;
  CycNumber kappa_j =
      f.chi.evaluate(p).pow(static_cast<unsigned long>(j)).scaled(mpq_class(power_z(p, j * (f.k - 1))));
  std::vector<CycNumber> res(terms);
  for (long n = 0; n < terms; ++n) {
    CycNumber v = seq[n];
    if (n >= 1) v -= lambda_j * seq[n - 1];
    if (n >= 2) v += kappa_j * seq[n - 2];
    res[n] = std::move(v);
  }
  return res;
}

EulerFactor euler_roots(const CycNumber& a_p, long k, const CycNumber& chi_p, long p) {
  EulerFactor ef;
  ef.p = p;
  ef.k = k;
  ef.trace = a_p;
  ef.norm = chi_p.scaled(mpq_class(power_z(p, k - 1)));
  ef.expected_abs = std::pow(static_cast<double>(p), (k - 1) / 2.0);
  const std::complex<double> t = a_p.embed();
  if (chi_p.is_zero()) {
    ef.degree = 1;
    ef.alpha = t;
    ef.beta = {0.0, 0.0};
    ef.alpha_abs = std::abs(ef.alpha);
    ef.beta_abs = 0.0;
    ef.deligne_moduli_ok = false;  // bound check not applicable at p | N
    return ef;
  }
  const std::complex<double> c = ef.norm.embed();
  const std::complex<double> disc = t * t - 4.0 * c;
  const std::complex<double> sq = std::sqrt(disc);
  std::complex<double> r1 = 0.5 * (t + sq);
  std::complex<double> r2 = 0.5 * (t - sq);
  if (r1.imag() < r2.imag() || (r1.imag() == r2.imag() && r1.real() < r2.real()))
    std::swap(r1, r2);
  ef.alpha = r1;
  ef.beta = r2;
  ef.alpha_abs = std::abs(r1);
  ef.beta_abs = std::abs(r2);
  const double tol = 1e-9;
  ef.deligne_moduli_ok = std::abs(ef.alpha_abs - ef.expected_abs) <= tol * ef.expected_abs &&
                         std::abs(ef.beta_abs - ef.expected_abs) <= tol * ef.expected_abs;
  return ef;
}

EulerFactor euler_factor_of(const FormContext& f, long p) {
  return euler_roots(f.a(p), f.k, f.chi.evaluate(p), p);
}

RootAverage root_of_unity_average(const EulerFactor& ef, long j, long terms) {
  if (j < 1) throw std::invalid_argument("root_of_unity_average: j must be >= 1");
  if (terms < 1) throw std::invalid_argument("root_of_unity_average: terms must be >= 1");
  RootAverage out;
  out.j = j;
  out.scale_log = 0.5 * (ef.k - 1) * std::log(static_cast<double>(ef.p));
  const double scale = std::exp(out.scale_log);
  const std::complex<double> a = ef.alpha / scale;
  const std::complex<double> b = ef.beta / scale;
  const long len = j * terms + 1;
  out.normalized.assign(len, {0.0, 0.0});
  for (long mu = 0; mu < j; ++mu) {
    const double ang = 2.0 * M_PI * mu / j;
    const std::complex<double> z{std::cos(ang), std::sin(ang)};
    // h_n(z a, z b) by the two-term recurrence with trace z(a+b), norm z^2 ab
    const std::complex<double> tr = z * (a + b);
    const std::complex<double> nm = z * z * a * b;
    std::complex<double> hm1{0.0, 0.0}, h0{1.0, 0.0};
    out.normalized[0] += h0;
    for (long n = 1; n < len; ++n) {
      std::complex<double> h = tr * h0 - nm * hm1;
      hm1 = h0;
      h0 = h;
      out.normalized[n] += h;
    }
  }
  for (auto& v : out.normalized) v /= static_cast<double>(j);
  return out;
}

CycNumber degeneracy_coefficient(const CycNumber& chi_p, long j, long mu) {
  CycNumber z_neg = CycNumber::root_of_unity(static_cast<unsigned>(j), -mu);
  CycNumber z_pos = CycNumber::root_of_unity(static_cast<unsigned>(j), mu);
  return z_neg + chi_p * z_pos;
}

DegeneracyReport degeneracy_scan(const EulerFactor& ef, long j, double tol) {
  DegeneracyReport rep;
  const double scale = std::pow(static_cast<double>(ef.p), (ef.k - 1) / 2.0);
  const std::complex<double> a = ef.alpha / scale;
  const std::complex<double> b = ef.beta / scale;
  for (long mu = 0; mu < j; ++mu) {
    const double ang = 2.0 * M_PI * mu / j;
    const std::complex<double> z{std::cos(ang), std::sin(ang)};
    bool hit = false;
    const std::complex<double> za = z * a;
    if (std::abs(za) > 0 && std::abs(za.imag()) <= tol * std::abs(za)) hit = true;
    if (ef.degree == 2) {
      const std::complex<double> zb = z * b;
      if (std::abs(zb) > 0 && std::abs(zb.imag()) <= tol * std::abs(zb)) hit = true;
    }
    if (hit) rep.real_pole_mu.push_back(mu);
    // exact vanishing of zeta^{-mu} + chi(p) zeta^{mu}
    CycNumber chi_p = ef.norm.scaled(mpq_class(1, power_z(ef.p, ef.k - 1)));
    if (degeneracy_coefficient(chi_p, j, mu).is_zero())
      rep.vanishing_coefficient_mu.push_back(mu);
  }
  return rep;
}

}  // namespace wedgelab::hecke

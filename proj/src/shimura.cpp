#include "wedgelab/shimura.hpp"

#include <cmath>
#include <stdexcept>

#include "wedgelab/hecke.hpp"

namespace wedgelab::shimura {

using hecke::power_z;

std::vector<int> mobius_sieve(long n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<long> primes;
  for (long i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (long p : primes) {
      if (i > n / p) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  if (n >= 0) mu[0] = 0;
  return mu;
}

bool is_squarefree(long n) {
  if (n < 1) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

HalfIntegralContext make_halfintegral_context(long k, long N, DirichletCharacter chi, long t,
                                              std::vector<CycNumber> b,
                                              std::string provenance) {
  if (k < 1) throw std::invalid_argument("half-integral context: k must be >= 1");
  if (N % 4 != 0) throw std::invalid_argument("half-integral context: level must be divisible by 4");
  if (t <= 0 || !is_squarefree(t))
    throw std::invalid_argument("half-integral context: t must be squarefree and positive");
  HalfIntegralContext ctx;
  ctx.k = k;
  ctx.N = N;
  ctx.chi = chi;
  ctx.t = t;
  ctx.twist = shimura_twist_character(chi, k, N, t);
  ctx.b = std::move(b);
  ctx.provenance = std::move(provenance);
  for (size_t i = 0; i < ctx.b.size(); ++i)
    if (!ctx.b[i].is_zero()) {
      ctx.nonzero_witness = static_cast<long>(i + 1);
      break;
    }
  return ctx;
}

namespace {

// chi_{t,N}(d) d^{k-1} for d = 1..terms, cached once per call site
std::vector<CycNumber> twist_weights(const DirichletCharacter& twist, long k, long terms) {
  std::vector<CycNumber> w(terms + 1);
  for (long d = 1; d <= terms; ++d) {
    CycNumber v = twist.evaluate(d);
    if (!v.is_structural_zero()) v = v.scaled(mpq_class(power_z(d, k - 1)));
    w[d] = std::move(v);
  }
  return w;
}

}  // namespace

LiftResult lift(const HalfIntegralContext& ctx, long terms) {
  if (terms < 1) throw std::invalid_argument("lift: terms must be >= 1");
  if (terms > ctx.terms()) throw std::invalid_argument("lift: precision shortfall in b");
  LiftResult L;
  L.twist = ctx.twist;
  L.k = ctx.k;
  L.N = ctx.N;
  L.t = ctx.t;
  auto w = twist_weights(ctx.twist, ctx.k, terms);
  L.A.resize(terms);
  for (long n = 1; n <= terms; ++n) {
    CycNumber acc;
    for (long d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      long e = n / d;
      // divisor pair (d, e)
      if (!w[d].is_structural_zero()) acc += w[d] * ctx.bval(e);
      if (e != d && !w[e].is_structural_zero()) acc += w[e] * ctx.bval(d);
    }
    L.A[n - 1] = std::move(acc);
  }
  return L;
}

std::vector<CycNumber> invert_lift(const LiftResult& L, long terms) {
  if (terms < 1) throw std::invalid_argument("invert_lift: terms must be >= 1");
  if (terms > L.terms()) throw std::invalid_argument("invert_lift: precision shortfall in A");
  auto w = twist_weights(L.twist, L.k, terms);
  auto mu = mobius_sieve(terms);
  std::vector<CycNumber> b(terms);
  for (long n = 1; n <= terms; ++n) {
    CycNumber acc;
    for (long d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      long e = n / d;
      if (mu[d] != 0 && !w[d].is_structural_zero()) {
        CycNumber term = w[d] * L.Aval(e);
        if (mu[d] < 0) term = -term;
        acc += term;
      }
      if (e != d && mu[e] != 0 && !w[e].is_structural_zero()) {
        CycNumber term = w[e] * L.Aval(d);
        if (mu[e] < 0) term = -term;
        acc += term;
      }
    }
    b[n - 1] = std::move(acc);
  }
  return b;
}

std::vector<CycNumber> halfintegral_euler_series(const CycNumber& a_t,
                                                 const CycNumber& lambda_p,
                                                 const DirichletCharacter& chi,
                                                 const CycNumber& chi_tN_p, long p, long k,
                                                 long terms) {
  if (terms < 1) throw std::invalid_argument("halfintegral_euler_series: terms must be >= 1");
  CycNumber w = chi_tN_p.scaled(mpq_class(power_z(p, k - 1)));
  CycNumber qn = chi.evaluate(p).pow(2).scaled(mpq_class(power_z(p, 2 * k - 1)));
  std::vector<CycNumber> c(terms);
  c[0] = a_t;
  if (terms >= 2) c[1] = lambda_p * c[0] - w * a_t;
  for (long nu = 2; nu < terms; ++nu) c[nu] = lambda_p * c[nu - 1] - qn * c[nu - 2];
  return c;
}

TransferReport eigen_transfer_check(const HalfIntegralContext& ctx, const LiftResult& L,
                                    long p, double tol) {
  if (!hecke::is_prime(p)) throw std::invalid_argument("eigen_transfer_check: p must be prime");
  if (ctx.N % p == 0)
    throw std::invalid_argument("eigen_transfer_check: p must not divide the level");
  TransferReport rep;
  // A(p^nu) for p^nu <= terms
  std::vector<CycNumber> Ap;
  for (long q = 1; q <= L.terms(); q *= p) {
    Ap.push_back(L.Aval(q));
    if (q > L.terms() / p) break;
  }
  CycNumber qn = ctx.chi.evaluate(p).pow(2).scaled(mpq_class(power_z(p, 2 * ctx.k - 1)));
  // division-free recursion check:
  //   A(p^{nu+1}) A(1) = A(p) A(p^nu) - qn A(1) A(p^{nu-1}),  nu >= 1,
  // plus the degree-2 head A(p) A(1) = A(p) A(1) (vacuous at nu = 0).
  rep.recursion_exact = true;
  const CycNumber& A1 = L.Aval(1);
  for (size_t nu = 1; nu + 1 < Ap.size(); ++nu) {
    CycNumber lhs = Ap[nu + 1] * A1;
    CycNumber rhs = Ap[1] * Ap[nu] - qn * (A1 * Ap[nu - 1]);
    ++rep.nu_checked;
    if (!(lhs == rhs)) {
      rep.recursion_exact = false;
      rep.first_bad_nu = static_cast<long>(nu + 1);
      break;
    }
  }
  // numeric roots of Y^2 - lambda Y + qn, lambda = A(p)/A(1)
  rep.expected_abs = std::pow(static_cast<double>(p), ctx.k - 0.5);
  std::complex<double> a1 = A1.embed();
  if (std::abs(a1) == 0.0) return rep;  // no eigenvalue to report
  std::complex<double> lam = Ap.size() > 1 ? Ap[1].embed() / a1 : std::complex<double>{0, 0};
  std::complex<double> q = qn.embed();
  std::complex<double> sq = std::sqrt(lam * lam - 4.0 * q);
  rep.alpha = 0.5 * (lam + sq);
  rep.beta = 0.5 * (lam - sq);
  if (rep.alpha.imag() < rep.beta.imag()) std::swap(rep.alpha, rep.beta);
  rep.alpha_abs = std::abs(rep.alpha);
  rep.beta_abs = std::abs(rep.beta);
  rep.moduli_ok = std::abs(rep.alpha_abs - rep.expected_abs) <= tol * rep.expected_abs &&
                  std::abs(rep.beta_abs - rep.expected_abs) <= tol * rep.expected_abs;
  return rep;
}

HalfIntegralDegeneracyReport halfintegral_degeneracy(const CycNumber& lambda_p, const CycNumber& chi2_p, long k, long p,
                           double tol) {
  HalfIntegralDegeneracyReport rep;
  CycNumber one_plus = chi2_p + CycNumber(1L);
  rep.chi2_plus_one_zero = one_plus.is_zero();
  const double scale = std::pow(static_cast<double>(p), k - 0.5);
  std::complex<double> lam = lambda_p.embed() / scale;  // normalized
  std::complex<double> q = chi2_p.embed();              // normalized norm
  std::complex<double> sq = std::sqrt(lam * lam - 4.0 * q);
  std::complex<double> a = 0.5 * (lam + sq);
  std::complex<double> b = 0.5 * (lam - sq);
  rep.alpha = a * scale;
  rep.beta = b * scale;
  auto real_within = [&](const std::complex<double>& z) {
    return std::abs(z) > 0 && std::abs(z.imag()) <= tol * std::abs(z);
  };
  rep.real_root = real_within(a) || real_within(b);
  if (rep.real_root) {
    // eq-14 shape: lambda = s p^{k-1/2}(1 + chi^2(p)) for s = +-1
    std::complex<double> target = std::complex<double>(1.0, 0.0) + q;
    if (std::abs(lam - target) <= tol * std::max(1.0, std::abs(target)))
      rep.matched_sign = 1;
    else if (std::abs(lam + target) <= tol * std::max(1.0, std::abs(target)))
      rep.matched_sign = -1;
  }
  return rep;
}

HalfIntegralContext generate_synthetic_context(const SyntheticEigenSpec& spec, long terms) {
  if (terms < 1) throw std::invalid_argument("generate_synthetic_context: terms must be >= 1");
  // local normalized series per prime (a_t = 1), extended multiplicatively
  DirichletCharacter twist = shimura_twist_character(spec.chi, spec.k, spec.N, spec.t);
  std::map<long, std::vector<CycNumber>> local;
  std::vector<long> spf(terms + 1, 0);  // smallest prime factor
  for (long i = 2; i <= terms; ++i)
    if (spf[i] == 0)
      for (long m = i; m <= terms; m += i)
        if (spf[m] == 0) spf[m] = i;
  std::vector<CycNumber> bt(terms);
  std::vector<CycNumber> normalized(terms + 1);
  normalized[1] = CycNumber(1L);
  for (long n = 2; n <= terms; ++n) {
    long p = spf[n];
    long m = n, nu = 0;
    while (m % p == 0) {
      m /= p;
      ++nu;
    }
    auto it = local.find(p);
    if (it == local.end()) {
      auto lam = spec.lambdas.find(p);
      if (lam == spec.lambdas.end())
        throw std::invalid_argument("generate_synthetic_context: missing lambda for prime " +
                                    std::to_string(p));
      long max_nu = 0;
      for (long q = 1; q <= terms; q *= p) {
        ++max_nu;
        if (q > terms / p) break;
      }
      it = local
               .emplace(p, halfintegral_euler_series(CycNumber(1L), lam->second, spec.chi,
                                                     twist.evaluate(p), p, spec.k, max_nu))
               .first;
    }
    normalized[n] = it->second.at(nu) * normalized[m];
  }
  for (long n = 1; n <= terms; ++n) bt[n - 1] = spec.a_t * normalized[n];
  auto ctx = make_halfintegral_context(spec.k, spec.N, spec.chi, spec.t, std::move(bt),
                                       "synthetic");
  return ctx;
}

}  // namespace wedgelab::shimura

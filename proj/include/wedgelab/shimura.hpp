#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wedgelab/characters.hpp"
#include "wedgelab/cyclotomic.hpp"

namespace wedgelab::shimura {

/// Coefficient data of a half-integral weight form restricted to the
/// square-indexed subfamily: b(n) = a(t n^2), n >= 1.  The full
/// half-integral expansion is never stored; the lift and the local
/// identities only touch this slice.
struct HalfIntegralContext {
  long k = 1;          // weight is k + 1/2
  long N = 4;          // level, divisible by 4
  DirichletCharacter chi;
  long t = 1;          // squarefree
  std::vector<CycNumber> b;  // b[i] = b(i+1); b.front() = a(t)
  std::optional<long> nonzero_witness;  // least n with b(n) != 0, if any
  bool claimed_in_Sstar = true;         // unchecked flag: orthogonal to thetas
  std::string provenance = "external";
  DirichletCharacter twist;  // chi_{t,N}, cached

  long terms() const { return static_cast<long>(b.size()); }
  const CycNumber& bval(long n) const { return b.at(static_cast<size_t>(n - 1)); }
};

HalfIntegralContext make_halfintegral_context(long k, long N, DirichletCharacter chi, long t,
                                              std::vector<CycNumber> b,
                                              std::string provenance = "external");

/// Lifted coefficients A(n) = sum_{d|n} chi_{t,N}(d) d^{k-1} b(n/d).
struct LiftResult {
  std::vector<CycNumber> A;  // A[i] = A(i+1)
  DirichletCharacter twist;
  long k = 1, N = 4, t = 1;
  const CycNumber& Aval(long n) const { return A.at(static_cast<size_t>(n - 1)); }
  long terms() const { return static_cast<long>(A.size()); }
};

LiftResult lift(const HalfIntegralContext& ctx, long terms);

/// Moebius inverse of the lift: b(n) = sum_{d|n} mu(d) chi_{t,N}(d) d^{k-1}
/// A(n/d).  invert_lift(lift(ctx)) recovers ctx.b exactly.
std::vector<CycNumber> invert_lift(const LiftResult& L, long terms);

/// Exact expansion of  a(t) (1 - chi_{t,N}(p) p^{k-1} X)
///                     / (1 - lambda_p X + chi^2(p) p^{2k-1} X^2)
/// to X^{terms-1}: the local subfamily a(t p^{2 nu}).
std::vector<CycNumber> halfintegral_euler_series(const CycNumber& a_t,
                                                 const CycNumber& lambda_p,
                                                 const DirichletCharacter& chi,
                                                 const CycNumber& chi_tN_p, long p, long k,
                                                 long terms);

/// Verifies that the lifted p-power coefficients satisfy the weight-2k
/// Hecke recursion (division-free, exact), and reports the numeric Euler
/// roots with the |alpha| = |beta| = p^{k-1/2} moduli check.
struct TransferReport {
  bool recursion_exact = false;
  long first_bad_nu = -1;
  long nu_checked = 0;
  std::complex<double> alpha{0, 0}, beta{0, 0};
  double alpha_abs = 0, beta_abs = 0, expected_abs = 0;
  bool moduli_ok = false;
};

TransferReport eigen_transfer_check(const HalfIntegralContext& ctx, const LiftResult& L,
                                    long p, double tol = 1e-9);

/// The Theorem-4 obstruction at p: is alpha_p or beta_p real within tol,
/// and is 1 + chi^2(p) exactly zero (the case excluded by odd r_{chi^2}).
struct HalfIntegralDegeneracyReport {
  bool real_root = false;
  bool chi2_plus_one_zero = false;
  std::complex<double> alpha{0, 0}, beta{0, 0};
  int matched_sign = 0;  // sign s with lambda = s p^{k-1/2}(1 + chi^2(p)), 0 if no real root
};

HalfIntegralDegeneracyReport halfintegral_degeneracy(const CycNumber& lambda_p, const CycNumber& chi2_p, long k, long p,
                           double tol);

/// Synthetic eigen-data: coefficients generated from prescribed local
/// eigenvalues via the local series and multiplicativity, the desk-scale
/// stand-in for a genuine half-integral eigenform.
struct SyntheticEigenSpec {
  long k = 1;
  long N = 4;
  DirichletCharacter chi;
  long t = 1;
  CycNumber a_t = CycNumber(1L);
  std::map<long, CycNumber> lambdas;  // prime -> lambda_p
};

HalfIntegralContext generate_synthetic_context(const SyntheticEigenSpec& spec, long terms);

/// mu(1..n) by sieve.
std::vector<int> mobius_sieve(long n);
bool is_squarefree(long n);

}  // namespace wedgelab::shimura

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "wedgelab/characters.hpp"
#include "wedgelab/qseries.hpp"

namespace wedgelab::hecke {

/// An integral-weight cusp form context: weight k, level N, nebentypus chi,
/// and an absolutely-indexed coefficient series (a(n) at key n, offset 0).
struct FormContext {
  long k = 0;
  long N = 1;
  DirichletCharacter chi;
  QSeries coeffs;
  bool normalized_newform = false;

  CycNumber a(long n) const { return coeffs.coeff(n); }
  long precision() const { return coeffs.precision(); }
};

/// Builds a context from any series with integral non-negative offset.
/// When `normalized_newform` is set, a(1) = 1 is enforced.
FormContext make_form_context(long k, long N, DirichletCharacter chi, const QSeries& series,
                              bool normalized_newform);

/// The generalized operator on q-expansions:
/// (T_j(p) f)(n) = a(p^j n) + p^{j(k-1)} chi^j(p) a(n / p^j),
/// with a(n/p^j) = 0 unless p^j | n.  j = 0 gives 2 f.  Output precision is
/// floor(input precision / p^j); an empty output window is rejected.
QSeries hecke_tj(const FormContext& f, long p, long j);

/// T_j(p) f computed through the three-term operator recurrence
/// T_{j+1} = T_j T_1 - p^{k-1} chi(p) T_{j-1}, using only T_1 applications.
/// Must agree with hecke_tj coefficientwise on the shared window.
QSeries hecke_tj_by_recurrence(const FormContext& f, long p, long j);

/// Eigenvalue of T_j(p) when f is a normalized eigenfunction: the first
/// coefficient of T_j(p) f, verified against T_j(p) f = lambda f on the
/// whole shared window.  Returns nullopt when the verification fails (the
/// form is downgraded, not an error).  Note that for j >= 2 the direct
/// operator is not scalar on eigenforms off the p-divisibility cone, so
/// this extraction succeeds only for j <= 1 on generic data; the quantity
/// driving the subsequence identities is power_sum_eigenvalue below.
std::optional<CycNumber> tj_eigenvalue(const FormContext& f, long p, long j);

/// lambda_j(p) = alpha_p^j + beta_p^j, computed exactly by the Newton
/// recurrence lambda_{m+1} = lambda_1 lambda_m - p^{k-1} chi(p)
/// lambda_{m-1} from the verified T(p)-eigenvalue lambda_1 = a(p)
/// (lambda_0 = 2).  This is the eigenvalue entering the generating
/// identity and the subsequence recursion.
std::optional<CycNumber> power_sum_eigenvalue(const FormContext& f, long p, long j);

enum class PowerPath { Direct, Recurrence, Auto };

/// The subsequence a(p^{j n}), n = 0..terms-1.
///
/// Two paths are provided.  Direct reads the stored expansion and requires
/// precision > p^{j(terms-1)}.  Recurrence verifies that f is a normalized
/// T(p)-eigenfunction on the available window and extends by the exact
/// two-term Hecke recursion a(p^{m+1}) = a(p) a(p^m) - p^{k-1} chi(p)
/// a(p^{m-1}), which reaches indices like p^{100} that no expansion could.
/// Auto takes Direct when it fits, otherwise Recurrence.
std::vector<CycNumber> prime_power_coefficients(const FormContext& f, long p, long j,
                                                long terms,
                                                PowerPath path = PowerPath::Auto);

/// Residual of the generating identity for eigenforms:
/// (1 - lambda_j(p) X + p^{j(k-1)} chi^j(p) X^2) * sum_n a(p^{jn}) X^n,
/// truncated mod X^terms.  For a T_j(p)-eigenfunction this equals the
/// constant polynomial a(1).
std::vector<CycNumber> eigen_generating_residual(const FormContext& f, long p, long j,
                                                 long terms,
                                                 PowerPath path = PowerPath::Auto);

/// Degree-2 local Euler data at p: trace a(p), norm chi(p) p^{k-1}, and the
/// numeric roots alpha, beta of Y^2 - a(p) Y + chi(p) p^{k-1}.  alpha is
/// the root with larger imaginary part (ties: larger real part).  When
/// chi(p) = 0 the factor is linear: degree 1 and beta = 0.
struct EulerFactor {
  long p = 2;
  long k = 2;
  CycNumber trace;
  CycNumber norm;
  int degree = 2;
  std::complex<double> alpha{0.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
  double alpha_abs = 0.0;
  double beta_abs = 0.0;
  double expected_abs = 0.0;  // p^{(k-1)/2}
  bool deligne_moduli_ok = false;
};

EulerFactor euler_roots(const CycNumber& a_p, long k, const CycNumber& chi_p, long p);
EulerFactor euler_factor_of(const FormContext& f, long p);

/// Power-series coefficients of the root-of-unity average
///   (1/j) sum_{mu=0}^{j-1} 1 / ((1 - zeta^mu alpha X)(1 - zeta^mu beta X)),
/// computed in the Deligne-normalized variable: entry n holds the X^n
/// coefficient divided by p^{n(k-1)/2}, which keeps every magnitude at
/// O(n+1) so the vanishing / matching tolerances are meaningful in double
/// precision.  Length is j*terms + 1.
struct RootAverage {
  long j = 1;
  double scale_log = 0.0;  // log of p^{(k-1)/2}
  std::vector<std::complex<double>> normalized;
};

RootAverage root_of_unity_average(const EulerFactor& ef, long j, long terms);

/// Per-mu degeneracy probes for the escape obstruction: mu with
/// zeta^mu alpha or zeta^mu beta real within tol (relative), and mu whose
/// coefficient zeta^{-mu} + chi(p) zeta^{mu} vanishes exactly.
struct DegeneracyReport {
  std::vector<long> real_pole_mu;
  std::vector<long> vanishing_coefficient_mu;
};

DegeneracyReport degeneracy_scan(const EulerFactor& ef, long j, double tol);

/// The degeneracy coefficient zeta_j^{-mu} + chi_p zeta_j^{mu} itself.
CycNumber degeneracy_coefficient(const CycNumber& chi_p, long j, long mu);

bool is_prime(long p);
mpz_class power_z(long base, long exp);

}  // namespace wedgelab::hecke

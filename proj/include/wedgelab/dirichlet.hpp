#pragma once

#include <complex>
#include <vector>

#include "wedgelab/characters.hpp"
#include "wedgelab/cyclotomic.hpp"
#include "wedgelab/shimura.hpp"

namespace wedgelab::dirichlet {

/// Neumaier-compensated accumulator.
struct CompensatedSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

/// Read-only view over an embedded coefficient sequence a(1..M) with cached
/// compensated prefix sums of a(n) and |a(n)|.
class DirichletSeriesView {
 public:
  explicit DirichletSeriesView(std::vector<std::complex<double>> coeffs);
  static DirichletSeriesView from_exact(const std::vector<CycNumber>& coeffs);

  long terms() const { return static_cast<long>(a_.size()); }
  std::complex<double> value(long n) const { return a_.at(static_cast<size_t>(n - 1)); }
  std::complex<double> prefix(long n) const;   // sum_{m<=n} a(m)
  double prefix_abs(long n) const;             // sum_{m<=n} |a(m)|

 private:
  std::vector<std::complex<double>> a_;
  std::vector<std::complex<double>> prefix_;
  std::vector<double> prefix_abs_;
};

/// sum_{lo <= n <= M} a(n) n^{-s}, compensated.
std::complex<double> partial_sum(const DirichletSeriesView& view, double s, long M,
                                 long lo = 1);

enum class PrefixKind { Plain, Absolute };

/// Log-log slope ladder estimate of limsup log|S(N)| / log N over
/// N = M^{1/8}, ..., M.  Reports the max slope and a scale-sensitivity
/// uncertainty band, never a point claim.  All-zero prefixes give -inf.
struct LadderPoint {
  long N = 0;
  double magnitude = 0;
  double slope = 0;
};

struct AbscissaEstimate {
  double estimate = 0;
  double uncertainty = 0;
  std::vector<LadderPoint> ladder;
};

AbscissaEstimate abscissa_estimate(const DirichletSeriesView& view, PrefixKind kind, long M);

/// Direct L-series partial sum at real s > 1 with the analytic tail bound
/// M^{1-s}/(s-1).
struct LValue {
  std::complex<double> value{0, 0};
  double tail_bound = 0;
};

LValue L_chi(const DirichletCharacter& chi, double s, long M);

/// Numeric check of the lift identity in partial-sum form:
/// (sum b(n) n^{-s}) (sum chi_{t,N}(n) n^{k-1-s}) vs sum A(n) n^{-s}, all
/// truncated at M, with a computable cross-term tail bound.  Requires s in
/// the joint absolute-convergence range s > k + 1/2.
struct LiftPartialSumReport {
  double s = 0;
  long M = 0;
  std::complex<double> b_sum{0, 0}, twist_sum{0, 0}, lift_sum{0, 0};
  double residual = 0;
  double tail_bound = 0;
  bool pass = false;
};

LiftPartialSumReport verify_lift_partial_sums(const shimura::HalfIntegralContext& ctx, const shimura::LiftResult& L,
                     double s, long M);

}  // namespace wedgelab::dirichlet

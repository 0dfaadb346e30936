#include "wedgelab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wedgelab::dirichlet {

DirichletSeriesView::DirichletSeriesView(std::vector<std::complex<double>> coeffs)
    : a_(std::move(coeffs)) {
  prefix_.reserve(a_.size());
  prefix_abs_.reserve(a_.size());
  CompensatedSum re, im, ab;
  for (const auto& z : a_) {
    re.add(z.real());
    im.add(z.imag());
    ab.add(std::abs(z));
    prefix_.emplace_back(re.value(), im.value());
    prefix_abs_.push_back(ab.value());
  }
}

DirichletSeriesView DirichletSeriesView::from_exact(const std::vector<CycNumber>& coeffs) {
  std::vector<std::complex<double>> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(c.embed());
  return DirichletSeriesView(std::move(v));
}

std::complex<double> DirichletSeriesView::prefix(long n) const {
  if (n < 1) return {0, 0};
  n = std::min<long>(n, terms());
  return prefix_.at(static_cast<size_t>(n - 1));
}

double DirichletSeriesView::prefix_abs(long n) const {
  if (n < 1) return 0;
  n = std::min<long>(n, terms());
  return prefix_abs_.at(static_cast<size_t>(n - 1));
}

std::complex<double> partial_sum(const DirichletSeriesView& view, double s, long M, long lo) {
  if (M < 1) throw std::invalid_argument("partial_sum: M must be >= 1");
  if (M > view.terms()) throw std::invalid_argument("partial_sum: coefficient shortfall");
  CompensatedSum re, im;
  for (long n = std::max<long>(lo, 1); n <= M; ++n) {
    const std::complex<double> z = view.value(n);
    if (z.real() == 0 && z.imag() == 0) continue;
    const double w = std::pow(static_cast<double>(n), -s);
    re.add(z.real() * w);
    im.add(z.imag() * w);
  }
  return {re.value(), im.value()};
}

AbscissaEstimate abscissa_estimate(const DirichletSeriesView& view, PrefixKind kind, long M) {
  if (M < 100) throw std::invalid_argument("abscissa_estimate: M must be >= 100");
  if (M > view.terms()) throw std::invalid_argument("abscissa_estimate: coefficient shortfall");
  AbscissaEstimate est;
  std::vector<long> rungs;
  for (int i = 1; i <= 8; ++i) {
    long N = static_cast<long>(std::llround(std::pow(static_cast<double>(M), i / 8.0)));
    N = std::clamp<long>(N, 2, M);
    if (rungs.empty() || rungs.back() != N) rungs.push_back(N);
  }
  bool any = false;
  double prev_slope = 0;
  double max_gap = 0;
  for (size_t i = 0; i < rungs.size(); ++i) {
    long N = rungs[i];
    double mag = kind == PrefixKind::Absolute ? view.prefix_abs(N) : std::abs(view.prefix(N));
    LadderPoint pt;
    pt.N = N;
    pt.magnitude = mag;
    if (mag > 0) {
      pt.slope = std::log(mag) / std::log(static_cast<double>(N));
      if (!any) {
        est.estimate = pt.slope;
        any = true;
      } else {
        est.estimate = std::max(est.estimate, pt.slope);
        max_gap = std::max(max_gap, std::abs(pt.slope - prev_slope));
      }
      prev_slope = pt.slope;
    } else {
      pt.slope = -std::numeric_limits<double>::infinity();
    }
    est.ladder.push_back(pt);
  }
  if (!any) {
    est.estimate = -std::numeric_limits<double>::infinity();
    est.uncertainty = 0;
    return est;
  }
  est.uncertainty = std::max(max_gap, 1.0 / std::log(static_cast<double>(M)));
  return est;
}

LValue L_chi(const DirichletCharacter& chi, double s, long M) {
  if (!(s > 1.0)) throw std::invalid_argument("L_chi: requires s > 1");
  if (M < 1) throw std::invalid_argument("L_chi: M must be >= 1");
  CompensatedSum re, im;
  for (long n = 1; n <= M; ++n) {
    CycNumber v = chi.evaluate(n);
    if (v.is_structural_zero()) continue;
    const std::complex<double> z = v.embed();
    const double w = std::pow(static_cast<double>(n), -s);
    re.add(z.real() * w);
    im.add(z.imag() * w);
  }
  LValue out;
  out.value = {re.value(), im.value()};
  out.tail_bound = std::pow(static_cast<double>(M), 1.0 - s) / (s - 1.0);
  return out;
}

LiftPartialSumReport verify_lift_partial_sums(const shimura::HalfIntegralContext& ctx, const shimura::LiftResult& L,
                     double s, long M) {
  if (!(s > ctx.k + 0.5))
    throw std::invalid_argument("verify_lift_partial_sums: s must exceed k + 1/2 (absolute range)");
  if (M < 1 || M > ctx.terms() || M > L.terms())
    throw std::invalid_argument("verify_lift_partial_sums: truncation exceeds available coefficients");
  LiftPartialSumReport rep;
  rep.s = s;
  rep.M = M;

  CompensatedSum bre, bim, tre, tim, are, aim;
  for (long n = 1; n <= M; ++n) {
    const double ws = std::pow(static_cast<double>(n), -s);
    const std::complex<double> b = ctx.bval(n).embed();
    bre.add(b.real() * ws);
    bim.add(b.imag() * ws);
    const std::complex<double> tz = ctx.twist.evaluate(n).embed();
    const double wt = std::pow(static_cast<double>(n), ctx.k - 1 - s);
    tre.add(tz.real() * wt);
    tim.add(tz.imag() * wt);
    const std::complex<double> az = L.Aval(n).embed();
    are.add(az.real() * ws);
    aim.add(az.imag() * ws);
  }
  rep.b_sum = {bre.value(), bim.value()};
  rep.twist_sum = {tre.value(), tim.value()};
  rep.lift_sum = {are.value(), aim.value()};
  rep.residual = std::abs(rep.b_sum * rep.twist_sum - rep.lift_sum);

  // Cross-term bound: every dropped product pairs m <= M with d > M/m and
  // |chi_{t,N}(d) d^{k-1-s}| summed over d > K is at most
  // K^{k-1-s} + K^{k-s}/(s-k).
  CompensatedSum tail;
  for (long m = 1; m <= M; ++m) {
    const std::complex<double> b = ctx.bval(m).embed();
    const double bm = std::abs(b);
    if (bm == 0) continue;
    const double K = std::floor(static_cast<double>(M) / m) + 1.0;
    const double tail_d = std::pow(K, ctx.k - 1 - s) + std::pow(K, ctx.k - s) / (s - ctx.k);
    tail.add(bm * std::pow(static_cast<double>(m), -s) * tail_d);
  }
  const double fp_slack = 1e3 * std::numeric_limits<double>::epsilon() *
                          (std::abs(rep.b_sum) * std::abs(rep.twist_sum) + std::abs(rep.lift_sum) + 1.0);
  rep.tail_bound = tail.value() + fp_slack;
  rep.pass = rep.residual <= rep.tail_bound;
  return rep;
}

}  // namespace wedgelab::dirichlet

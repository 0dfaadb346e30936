#include "wedgelab/wedge.hpp"

#include <cmath>
#include <stdexcept>

namespace wedgelab::wedge {

namespace {

double wrap_pi(double a) {
  // into (-pi, pi]
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

double wrap_2pi(double a) {
  // into [0, 2pi)
  a = std::fmod(a, 2.0 * M_PI);
  if (a < 0) a += 2.0 * M_PI;
  return a;
}

int sign_of(double x) { return (x > 0) - (x < 0); }

}  // namespace

Wedge::Wedge(double theta1, double theta2) {
  if (!std::isfinite(theta1) || !std::isfinite(theta2))
    throw std::invalid_argument("wedge: non-finite angle");
  double w = wrap_2pi(theta2 - theta1);
  if (w >= M_PI) throw std::invalid_argument("wedge: opening must satisfy 0 <= theta2-theta1 < pi");
  theta1_ = wrap_pi(theta1);
  width_ = w;
}

double Wedge::theta2() const { return wrap_pi(theta1_ + width_); }

bool Wedge::contains(std::complex<double> z, bool strict_zero, double angle_tol) const {
  if (z.real() == 0.0 && z.imag() == 0.0) return !strict_zero;
  double delta = wrap_2pi(std::arg(z) - theta1_);
  return delta <= width_ + angle_tol || delta >= 2.0 * M_PI - angle_tol;
}

Wedge Wedge::rotated(double psi) const { return Wedge(theta1_ + psi, theta1_ + psi + width_); }

RotationNormalization normalize_rotation(const Wedge& w) {
  RotationNormalization r;
  r.phi = 0.5 * w.width();
  r.gamma = std::cos(r.phi);
  r.psi = -(w.theta1() + 0.5 * w.width());
  return r;
}

ScanReport scan(std::span<const std::complex<double>> values, long start_index, const Wedge& w,
                bool strict_zero, double angle_tol) {
  ScanReport rep;
  rep.start_index = start_index;
  rep.end_index = start_index + static_cast<long>(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    const long idx = start_index + static_cast<long>(i);
    const std::complex<double>& z = values[i];
    if (!w.contains(z, strict_zero, angle_tol)) {
      rep.escapes.push_back(idx);
      if (!rep.first_escape) rep.first_escape = idx;
    }
    if (int s = sign_of(z.real()); s != 0) {
      if (rep.re_last_sign == 0) {
        rep.re_first_sign = s;
        rep.re_first_index = idx;
      } else if (s != rep.re_last_sign) {
        rep.re_changes.push_back(idx);
      }
      rep.re_last_sign = s;
    }
    if (int s = sign_of(z.imag()); s != 0) {
      if (rep.im_last_sign == 0) {
        rep.im_first_sign = s;
        rep.im_first_index = idx;
      } else if (s != rep.im_last_sign) {
        rep.im_changes.push_back(idx);
      }
      rep.im_last_sign = s;
    }
  }
  return rep;
}

ScanReport merge(const ScanReport& a, const ScanReport& b) {
  if (a.end_index != b.start_index)
    throw std::invalid_argument("merge: reports are not adjacent");
  ScanReport m;
  m.start_index = a.start_index;
  m.end_index = b.end_index;
  m.escapes = a.escapes;
  m.escapes.insert(m.escapes.end(), b.escapes.begin(), b.escapes.end());
  m.first_escape = a.first_escape ? a.first_escape : b.first_escape;

  m.re_changes = a.re_changes;
  if (a.re_last_sign != 0 && b.re_first_sign != 0 && a.re_last_sign != b.re_first_sign)
    m.re_changes.push_back(b.re_first_index);  // the junction pair, counted once
  m.re_changes.insert(m.re_changes.end(), b.re_changes.begin(), b.re_changes.end());

  m.im_changes = a.im_changes;
  if (a.im_last_sign != 0 && b.im_first_sign != 0 && a.im_last_sign != b.im_first_sign)
    m.im_changes.push_back(b.im_first_index);
  m.im_changes.insert(m.im_changes.end(), b.im_changes.begin(), b.im_changes.end());

  m.re_first_sign = a.re_first_sign ? a.re_first_sign : b.re_first_sign;
  m.re_first_index = a.re_first_sign ? a.re_first_index : b.re_first_index;
  m.re_last_sign = b.re_last_sign ? b.re_last_sign : a.re_last_sign;
  m.im_first_sign = a.im_first_sign ? a.im_first_sign : b.im_first_sign;
  m.im_first_index = a.im_first_sign ? a.im_first_index : b.im_first_index;
  m.im_last_sign = b.im_last_sign ? b.im_last_sign : a.im_last_sign;
  return m;
}

}  // namespace wedgelab::wedge

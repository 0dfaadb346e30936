#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace wedgelab::wedge {

/// Closed angular sector {r e^{i theta} : r >= 0, theta in [theta1, theta2]}
/// with opening theta2 - theta1 in [0, pi).  Angles are stored normalized to
/// (-pi, pi]; the opening is kept separately so wrapped inputs stay valid.
class Wedge {
 public:
  Wedge(double theta1, double theta2);

  double theta1() const { return theta1_; }
  double theta2() const;  // theta1 + width, normalized
  double width() const { return width_; }

  /// Membership.  z = 0 belongs to every wedge by default (r >= 0 admits
  /// r = 0); strict mode treats 0 as escaping.  Boundary angles are members
  /// within an absolute angle tolerance.
  bool contains(std::complex<double> z, bool strict_zero = false,
                double angle_tol = 1e-12) const;

  /// The wedge of e^{i psi} z over z in this wedge.
  Wedge rotated(double psi) const;

 private:
  double theta1_;
  double width_;
};

/// Rotation normalization: phi = half opening in [0, pi/2), gamma = cos phi
/// > 0, and the rotation angle psi with Re(e^{i psi} z) >= gamma |z| for
/// every z in the wedge.
struct RotationNormalization {
  double phi = 0;
  double gamma = 1;
  double psi = 0;
};

RotationNormalization normalize_rotation(const Wedge& w);

/// Scan summary over an indexed window [start_index, end_index).
/// Sign changes follow the skip-zeros convention: a change is recorded at
/// the index of the later of two consecutive nonzero entries of opposite
/// strict sign; exact zeros never produce or suppress a change.
struct ScanReport {
  long start_index = 0;
  long end_index = 0;
  std::vector<long> escapes;
  std::vector<long> re_changes;
  std::vector<long> im_changes;
  std::optional<long> first_escape;

  // merge bookkeeping: first/last nonzero signs of each part
  int re_first_sign = 0, re_last_sign = 0;
  int im_first_sign = 0, im_last_sign = 0;
  long re_first_index = 0, im_first_index = 0;
};

ScanReport scan(std::span<const std::complex<double>> values, long start_index,
                const Wedge& w, bool strict_zero = false, double angle_tol = 1e-12);

/// Merge of two adjacent reports (a.end_index == b.start_index).  The
/// junction pair is examined once here; the result equals a scan of the
/// concatenated sequence.
ScanReport merge(const ScanReport& a, const ScanReport& b);

}  // namespace wedgelab::wedge

#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace wedgelab {

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// The value is stored as a dense length-m rational vector c against the
/// spanning set 1, zeta, ..., zeta^{m-1} of Z[x]/(x^m - 1), so ring
/// operations are cheap wrap-around convolutions.  Reduction modulo the
/// m-th cyclotomic polynomial (which makes the representation canonical)
/// happens only in canonical(), is_zero() and equality tests.  Elements of
/// different orders are compared after lifting to the lcm order.
class CycNumber {
 public:
  CycNumber() : order_(1), c_(1) {}
  explicit CycNumber(long v) : order_(1), c_(1, mpq_class(v)) {}
  explicit CycNumber(const mpz_class& v) : order_(1), c_(1, mpq_class(v)) {}
  explicit CycNumber(const mpq_class& v) : order_(1), c_(1, v) {}

  /// zeta_order^exponent; exponent may be any integer.
  static CycNumber root_of_unity(unsigned order, long exponent);

  unsigned order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }

  CycNumber scaled(const mpq_class& r) const;
  CycNumber pow(unsigned long e) const;
  CycNumber conj() const;  // zeta -> zeta^{-1}

  /// True iff the value is 0 in Q(zeta_m); runs the canonical reduction.
  bool is_zero() const;
  /// Cheap structural test: every stored coefficient is literally 0.
  bool is_structural_zero() const;
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  /// Representative reduced mod the m-th cyclotomic polynomial: the
  /// coefficients above degree phi(m)-1 are cleared.  Idempotent.
  CycNumber canonical() const;

  /// If the value lies in Q, writes it to *out (when non-null) and returns
  /// true.
  bool rational_value(mpq_class* out = nullptr) const;

  std::complex<double> embed() const;

  /// Semicolon-joined canonical coefficient vector, e.g. "1;-1/2".
  std::string coeff_string() const;
  std::string str() const;

 private:
  unsigned order_;
  std::vector<mpq_class> c_;  // size order_

  void lift_to(unsigned target);  // pre: order_ divides target
  static unsigned common_order(unsigned a, unsigned b);
};

/// Coefficients (low degree first, monic) of the m-th cyclotomic
/// polynomial; cached, thread-safe.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m);

/// Euler totient by trial division (desk scale).
unsigned long euler_phi(unsigned long n);

}  // namespace wedgelab

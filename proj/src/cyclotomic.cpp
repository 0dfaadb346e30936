#include "wedgelab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wedgelab {

namespace {

// Exact division of integer polynomials, divisor monic.  Low degree first.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw std::logic_error("divide_monic: degree underflow");
  std::vector<mpz_class> quot(num.size() - dd);
  for (size_t i = num.size(); i-- > dd;) {
    mpz_class c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
  }
  for (size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("divide_monic: nonzero remainder");
  return quot;
}

std::vector<mpz_class> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<mpz_class> poly(m + 1);
  poly[0] = -1;
  poly[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

std::mutex g_cyclo_mu;
std::map<unsigned, std::vector<mpz_class>> g_cyclo_cache;

// Remainder of a rational vector (degree < m) mod Phi_m, resized to deg Phi_m.
std::vector<mpq_class> reduce_mod_phi(std::vector<mpq_class> r, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;
  for (size_t i = r.size(); i-- > deg;) {
    if (r[i] == 0) continue;
    mpq_class c = r[i];
    r[i] = 0;
    for (size_t t = 0; t < deg; ++t)
      if (phi[t] != 0) r[i - deg + t] -= c * phi[t];
  }
  r.resize(deg);
  return r;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m = 0");
  {
    std::lock_guard<std::mutex> lk(g_cyclo_mu);
    auto it = g_cyclo_cache.find(m);
    if (it != g_cyclo_cache.end()) return it->second;
  }
  auto val = compute_cyclotomic(m);  // recursion happens without the lock
  std::lock_guard<std::mutex> lk(g_cyclo_mu);
  return g_cyclo_cache.emplace(m, std::move(val)).first->second;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long res = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    res -= res / p;
  }
  if (n > 1) res -= res / n;
  return res;
}

CycNumber CycNumber::root_of_unity(unsigned order, long exponent) {
  if (order == 0) throw std::invalid_argument("root_of_unity: order 0");
  CycNumber z;
  z.order_ = order;
  z.c_.assign(order, mpq_class(0));
  long e = exponent % static_cast<long>(order);
  if (e < 0) e += order;
  z.c_[static_cast<size_t>(e)] = 1;
  return z;
}

unsigned CycNumber::common_order(unsigned a, unsigned b) {
  return static_cast<unsigned>(std::lcm(a, b));
}

void CycNumber::lift_to(unsigned target) {
  if (target == order_) return;
  if (target % order_ != 0) throw std::logic_error("lift_to: not a multiple");
  const unsigned stride = target / order_;
  std::vector<mpq_class> lifted(target);
  for (unsigned i = 0; i < order_; ++i)
    if (c_[i] != 0) lifted[static_cast<size_t>(i) * stride] = c_[i];
  order_ = target;
  c_ = std::move(lifted);
}

CycNumber CycNumber::operator-() const {
  CycNumber r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (order_ == o.order_) {
    for (unsigned i = 0; i < order_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  unsigned L = common_order(order_, o.order_);
  lift_to(L);
  const unsigned stride = L / o.order_;
  for (unsigned i = 0; i < o.order_; ++i)
    if (o.c_[i] != 0) c_[static_cast<size_t>(i) * stride] += o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  if (order_ == o.order_) {
    for (unsigned i = 0; i < order_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  unsigned L = common_order(order_, o.order_);
  lift_to(L);
  const unsigned stride = L / o.order_;
  for (unsigned i = 0; i < o.order_; ++i)
    if (o.c_[i] != 0) c_[static_cast<size_t>(i) * stride] -= o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  // Fast path: either side is a plain rational.
  if (o.order_ == 1) {
    if (o.c_[0] == 0) {
      *this = CycNumber();
      return *this;
    }
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    CycNumber r = o;
    if (c_[0] == 0)
      r = CycNumber();
    else
      for (auto& x : r.c_) x *= c_[0];
    *this = std::move(r);
    return *this;
  }
  unsigned L = common_order(order_, o.order_);
  CycNumber rhs = o;
  lift_to(L);
  rhs.lift_to(L);
  // Wrap-around convolution; iterate only nonzero coefficients.
  std::vector<mpq_class> out(L);
  for (unsigned i = 0; i < L; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < L; ++j) {
      if (rhs.c_[j] == 0) continue;
      unsigned t = i + j;
      if (t >= L) t -= L;
      out[t] += c_[i] * rhs.c_[j];
    }
  }
  c_ = std::move(out);
  return *this;
}

CycNumber CycNumber::scaled(const mpq_class& r) const {
  CycNumber out(*this);
  if (r == 0) return CycNumber();
  for (auto& x : out.c_) x *= r;
  return out;
}

CycNumber CycNumber::pow(unsigned long e) const {
  CycNumber acc(1L);
  CycNumber base(*this);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

CycNumber CycNumber::conj() const {
  CycNumber r;
  r.order_ = order_;
  r.c_.assign(order_, mpq_class(0));
  for (unsigned i = 0; i < order_; ++i) {
    unsigned t = (order_ - i) % order_;
    r.c_[t] = c_[i];
  }
  return r;
}

bool CycNumber::is_structural_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_zero() const {
  if (is_structural_zero()) return true;
  auto red = reduce_mod_phi(c_, order_);
  for (const auto& x : red)
    if (x != 0) return false;
  return true;
}

CycNumber CycNumber::canonical() const {
  CycNumber r;
  r.order_ = order_;
  r.c_ = reduce_mod_phi(c_, order_);
  r.c_.resize(order_);
  return r;
}

bool CycNumber::operator==(const CycNumber& o) const {
  CycNumber d(*this);
  d -= o;
  return d.is_zero();
}

bool CycNumber::rational_value(mpq_class* out) const {
  auto red = reduce_mod_phi(c_, order_);
  for (size_t i = 1; i < red.size(); ++i)
    if (red[i] != 0) return false;
  if (out) *out = red.empty() ? mpq_class(0) : red[0];
  return true;
}

std::complex<double> CycNumber::embed() const {
  const double tau = 2.0 * M_PI / static_cast<double>(order_);
  double re = 0.0, im = 0.0;
  const long m = order_;
  for (unsigned i = 0; i < order_; ++i) {
    if (c_[i] == 0) continue;
    const double v = c_[i].get_d();
    // signed exponent, so conjugate pairs cancel exactly; quarter turns are
    // exact so real/imaginary axes carry no trigonometric ghost
    const long e = (i <= order_ / 2) ? static_cast<long>(i) : static_cast<long>(i) - m;
    double cs, sn;
    if ((4 * std::labs(e)) % m == 0) {
      switch (((4 * e / m) % 4 + 4) % 4) {
        case 0: cs = 1; sn = 0; break;
        case 1: cs = 0; sn = 1; break;
        case 2: cs = -1; sn = 0; break;
        default: cs = 0; sn = -1; break;
      }
    } else {
      cs = std::cos(tau * e);
      sn = std::sin(tau * e);
    }
    re += v * cs;
    im += v * sn;
  }
  return {re, im};
}

std::string CycNumber::coeff_string() const {
  auto red = reduce_mod_phi(c_, order_);
  std::ostringstream os;
  for (size_t i = 0; i < red.size(); ++i) {
    if (i) os << ';';
    os << red[i].get_str();
  }
  return os.str();
}

std::string CycNumber::str() const {
  mpq_class q;
  if (rational_value(&q)) return q.get_str();
  std::ostringstream os;
  os << "cyc(" << order_ << ")[" << coeff_string() << "]";
  return os.str();
}

}  // namespace wedgelab

#include "wedgelab/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wedgelab {

namespace {

// (2/a) for odd a, by a mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

long positive_mod(long long n, long m) {
  long r = static_cast<long>(n % m);
  return r < 0 ? r + m : r;
}

struct PrimePower {
  long p, e, q;  // q = p^e
};

std::vector<PrimePower> factor_prime_powers(long n) {
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long e = 0, q = 1;
    while (n % p == 0) {
      n /= p;
      ++e;
      q *= p;
    }
    out.push_back({p, e, q});
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<long>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Primitive root mod p^e for odd prime p.
long primitive_root(long p, long e) {
  const long phi_p = p - 1;
  auto fac = prime_factors(phi_p);
  long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (long f : fac)
      if (pow_mod(g, phi_p / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  if (e == 1) return g;
  long p2 = p * p;
  if (pow_mod(g, p - 1, p2) == 1) g += p;
  return g;
}

}  // namespace

int kronecker(const mpz_class& a_in, const mpz_class& n_in) {
  mpz_class a = a_in, n = n_in;
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  const bool a_even = mpz_even_p(a.get_mpz_t());
  if (a_even && mpz_even_p(n.get_mpz_t())) return 0;
  int k = 1;
  // strip twos from n; each contributes (2/a)
  long v = 0;
  while (mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    ++v;
  }
  if (v & 1) {
    long a8 = static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), 8));
    k = kTwoTable[a8];
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  if (n == 1) return k;
  // Jacobi loop on (a mod n / n), n odd > 0.
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());  // 0 <= r < n
  a = r;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      long n8 = static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), 8));
      if (n8 == 3 || n8 == 5) k = -k;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) k = -k;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  }
  return n == 1 ? k : 0;
}

int kronecker(long a, long n) { return kronecker(mpz_class(a), mpz_class(n)); }

std::vector<DirichletCharacter::Component> DirichletCharacter::components_of_modulus(
    long modulus) {
  if (modulus < 1) throw std::invalid_argument("character modulus must be positive");
  std::vector<Component> comps;
  for (const auto& pp : factor_prime_powers(modulus)) {
    if (pp.p == 2) {
      if (pp.e == 1) continue;  // (Z/2)^* trivial
      if (pp.e == 2) {
        comps.push_back({4, 3, 2, 0});
      } else {
        long q = pp.q;
        comps.push_back({q, q - 1, 2, 0});          // the -1 factor
        comps.push_back({q, 5, q / 4, 0});          // the 5-power factor, order 2^{e-2}
      }
    } else {
      long d = (pp.q / pp.p) * (pp.p - 1);  // phi(p^e)
      comps.push_back({pp.q, primitive_root(pp.p, pp.e), d, 0});
    }
  }
  return comps;
}

void DirichletCharacter::build_dlog_tables() {
  dlog_.clear();
  // For the 2-adic pair the two tables are built jointly below.
  size_t i = 0;
  while (i < comps_.size()) {
    const Component& c = comps_[i];
    if (c.prime_power >= 8 && c.generator == c.prime_power - 1 && i + 1 < comps_.size() &&
        comps_[i + 1].prime_power == c.prime_power) {
      // components (-1, 5) of (Z/2^e)^*: residue (-1)^s 5^t
      const long q = c.prime_power;
      std::vector<int32_t> tab_s(q, -1), tab_t(q, -1);
      long x = 1;
      for (long t = 0; t < comps_[i + 1].gen_order; ++t) {
        tab_s[x] = 0;
        tab_t[x] = static_cast<int32_t>(t);
        long y = q - x;  // -x
        tab_s[y] = 1;
        tab_t[y] = static_cast<int32_t>(t);
        x = static_cast<long>((static_cast<__int128>(x) * 5) % q);
      }
      dlog_.push_back(std::move(tab_s));
      dlog_.push_back(std::move(tab_t));
      i += 2;
      continue;
    }
    const long q = c.prime_power;
    std::vector<int32_t> tab(q, -1);
    long x = 1;
    for (long t = 0; t < c.gen_order; ++t) {
      tab[x] = static_cast<int32_t>(t);
      x = static_cast<long>((static_cast<__int128>(x) * c.generator) % q);
    }
    dlog_.push_back(std::move(tab));
    ++i;
  }
}

DirichletCharacter DirichletCharacter::principal(long modulus) {
  DirichletCharacter chi;
  chi.kind_ = Kind::Generators;
  chi.modulus_ = modulus;
  chi.comps_ = components_of_modulus(modulus);
  chi.build_dlog_tables();
  chi.order_ = chi.compute_order();
  return chi;
}

DirichletCharacter DirichletCharacter::from_generator_exponents(
    long modulus, const std::vector<long>& exponents) {
  DirichletCharacter chi = principal(modulus);
  if (exponents.size() != chi.comps_.size())
    throw std::invalid_argument("from_generator_exponents: wrong component count");
  for (size_t i = 0; i < exponents.size(); ++i) {
    long d = chi.comps_[i].gen_order;
    chi.comps_[i].exponent = ((exponents[i] % d) + d) % d;
  }
  chi.order_ = chi.compute_order();
  return chi;
}

DirichletCharacter DirichletCharacter::kronecker_character(const mpz_class& D_in) {
  if (D_in == 0) throw std::invalid_argument("kronecker character: D = 0");
  mpz_class D = D_in;
  long rem = static_cast<long>(mpz_fdiv_ui(D.get_mpz_t(), 4));
  if (rem == 2 || rem == 3) D *= 4;
  DirichletCharacter chi;
  chi.kind_ = Kind::Kronecker;
  chi.kron_D_ = D;
  mpz_class ad = abs(D);
  if (!ad.fits_slong_p()) throw std::invalid_argument("kronecker character: |D| too large");
  chi.modulus_ = ad.get_si();
  chi.order_ = chi.compute_order();
  return chi;
}

DirichletCharacter DirichletCharacter::product(std::vector<DirichletCharacter> factors) {
  if (factors.empty()) return principal(1);
  DirichletCharacter chi;
  chi.kind_ = Kind::Product;
  long m = 1;
  for (const auto& f : factors) m = std::lcm(m, f.modulus());
  chi.modulus_ = m;
  chi.factors_ = std::move(factors);
  chi.order_ = chi.compute_order();
  return chi;
}

DirichletCharacter DirichletCharacter::power(long j) const {
  if (kind_ == Kind::Generators) {
    DirichletCharacter chi(*this);
    for (auto& c : chi.comps_) {
      long d = c.gen_order;
      long e = static_cast<long>(((static_cast<__int128>(c.exponent) * j) % d + d) % d);
      c.exponent = e;
    }
    chi.order_ = chi.compute_order();
    return chi;
  }
  long jr = j;
  if (jr < 0) {
    long r = order();
    jr = ((jr % r) + r) % r;
  }
  if (jr == 0) return principal(modulus_);
  if (jr == 1) return *this;
  std::vector<DirichletCharacter> fs(static_cast<size_t>(jr), *this);
  return product(std::move(fs));
}

std::optional<long> DirichletCharacter::value_exponent(long long n) const {
  // returns e with chi(n) = zeta_{order()}^e
  CycNumber v = evaluate(n);
  if (v.is_zero()) return std::nullopt;
  long r = order();
  for (long e = 0; e < r; ++e)
    if (v == CycNumber::root_of_unity(static_cast<unsigned>(r), e)) return e;
  throw std::logic_error("value_exponent: value not an order-r root of unity");
}

CycNumber DirichletCharacter::evaluate(long long n) const {
  const long r = positive_mod(n, modulus_);
  switch (kind_) {
    case Kind::Generators: {
      if (modulus_ == 1) return CycNumber(1L);
      if (std::gcd(static_cast<long>(r), modulus_) != 1) return CycNumber();
      // total exponent over zeta_L, L = lcm of generator orders
      long L = 1;
      for (const auto& c : comps_) L = std::lcm(L, c.gen_order);
      long acc = 0;
      for (size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        long res = r % c.prime_power;
        int32_t lg = dlog_[i][res];
        if (lg < 0) throw std::logic_error("dlog table miss");
        long term = static_cast<long>(
            (static_cast<__int128>(L / c.gen_order) * c.exponent % L * lg) % L);
        acc = (acc + term) % L;
      }
      // express in the character's own value order
      long rord = order();
      return CycNumber::root_of_unity(static_cast<unsigned>(rord),
                                      static_cast<long>((static_cast<__int128>(acc) * rord) / L));
    }
    case Kind::Kronecker:
      return CycNumber(static_cast<long>(kronecker(kron_D_, mpz_class(r))));
    case Kind::Product: {
      CycNumber v(1L);
      for (const auto& f : factors_) {
        CycNumber fv = f.evaluate(r);
        if (fv.is_structural_zero()) return CycNumber();
        v *= fv;
      }
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

long DirichletCharacter::compute_order() const {
  switch (kind_) {
    case Kind::Generators: {
      long r = 1;
      for (const auto& c : comps_)
        r = std::lcm(r, c.gen_order / std::gcd(c.gen_order, c.exponent));
      return r;
    }
    case Kind::Kronecker: {
      if (modulus_ == 1) return 1;
      for (long n = 2; n < modulus_; ++n)
        if (std::gcd(n, modulus_) == 1 && kronecker(kron_D_, mpz_class(n)) == -1) return 2;
      return 1;
    }
    case Kind::Product: {
      long bound = 1;
      for (const auto& f : factors_) bound = std::lcm(bound, f.order());
      // least divisor r of bound with chi^r = principal, tested pointwise
      std::vector<long> divs;
      for (long d = 1; d * d <= bound; ++d)
        if (bound % d == 0) {
          divs.push_back(d);
          divs.push_back(bound / d);
        }
      std::sort(divs.begin(), divs.end());
      divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
      for (long r : divs) {
        bool principal_power = true;
        for (long n = 1; n <= modulus_ && principal_power; ++n) {
          if (std::gcd(n, modulus_) != 1) continue;
          CycNumber v = evaluate(n).pow(static_cast<unsigned long>(r));
          if (!(v == CycNumber(1L))) principal_power = false;
        }
        if (principal_power) return r;
      }
      throw std::logic_error("order: no divisor of the lcm bound worked");
    }
  }
  throw std::logic_error("unreachable");
}

long DirichletCharacter::order() const { return order_; }

bool DirichletCharacter::is_principal() const { return order() == 1; }

bool DirichletCharacter::order_of_square_is_odd() const {
  long r2 = power(2).order();
  return (r2 % 2) == 1;
}

std::vector<DirichletCharacter> DirichletCharacter::all_characters(long modulus) {
  auto comps = components_of_modulus(modulus);
  std::vector<DirichletCharacter> out;
  std::vector<long> exps(comps.size(), 0);
  for (;;) {
    out.push_back(from_generator_exponents(modulus, exps));
    size_t i = 0;
    for (; i < comps.size(); ++i) {
      if (++exps[i] < comps[i].gen_order) break;
      exps[i] = 0;
    }
    if (i == comps.size()) break;
  }
  return out;
}

DirichletCharacter shimura_twist_character_with_scale(const DirichletCharacter& chi, long k,
                                                      const mpz_class& numerator_scale,
                                                      long t) {
  if (t <= 0) throw std::invalid_argument("shimura twist: t must be positive");
  mpz_class s = numerator_scale * t;
  if (k % 2 != 0) s = -s;
  return DirichletCharacter::product({chi, DirichletCharacter::kronecker_character(s)});
}

DirichletCharacter shimura_twist_character(const DirichletCharacter& chi, long k, long N,
                                           long t) {
  return shimura_twist_character_with_scale(chi, k, mpz_class(N) * N, t);
}

}  // namespace wedgelab

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wedgelab/catalog.hpp"
#include "wedgelab/hecke.hpp"

using namespace wedgelab;
using hecke::FormContext;
using hecke::PowerPath;

namespace {

const FormContext& delta() {
  static FormContext f = *catalog::load_catalog_form("delta", 2000).integral;
  return f;
}
const FormContext& eta11() {
  static FormContext f = *catalog::load_catalog_form("eta11", 2000).integral;
  return f;
}
const FormContext& eta4_6() {
  static FormContext f = *catalog::load_catalog_form("eta4_6", 2000).integral;
  return f;
}

}  // namespace

TEST_CASE("T_0 doubles the form and T_1 hits known values") {
  QSeries t0 = hecke::hecke_tj(delta(), 2, 0);
  CHECK(equal_on_shared(t0, delta().coeffs.scaled(CycNumber(2L))));

  QSeries t1 = hecke::hecke_tj(delta(), 2, 1);
  mpq_class v;
  CHECK(t1.coeff(1).rational_value(&v));
  CHECK(v == -24);  // tau(2)
  // at p coprime to n the coefficient is a(pn)
  CHECK(t1.coeff(3) == delta().a(6));
  CHECK(t1.coeff(5) == delta().a(10));
  // at p | n both terms enter: a(2n) + 2^{11} a(n/2)
  CycNumber expect = delta().a(8) + delta().a(2).scaled(mpq_class(2048));
  CHECK(t1.coeff(4) == expect);
}

TEST_CASE("operator precondition and precision rules") {
  CHECK_THROWS(hecke::hecke_tj(delta(), 2, -1));
  CHECK_THROWS(hecke::hecke_tj(delta(), 4, 1));   // p not prime
  CHECK_THROWS(hecke::hecke_tj(delta(), 2, 30));  // no output window
  QSeries t2 = hecke::hecke_tj(delta(), 2, 2);
  CHECK(t2.precision() == delta().precision() / 4);
}

TEST_CASE("recurrence chain acts by the power-sum scalar on eigenforms") {
  for (const FormContext* f : {&delta(), &eta11(), &eta4_6()}) {
    for (long p : {2L, 3L}) {
      if (f->N % p == 0) continue;
      for (long j : {2L, 3L}) {
        QSeries chain = hecke::hecke_tj_by_recurrence(*f, p, j);
        auto lambda = hecke::power_sum_eigenvalue(*f, p, j);
        REQUIRE(lambda.has_value());
        QSeries scalar = f->coeffs.truncated(chain.precision()).scaled(*lambda);
        CHECK(equal_on_shared(chain, scalar));
        // the direct operator agrees exactly on the cone v_p(n) >= j-1 and
        // differs from the chain at n = 1 by kappa * a(p^{j-2})
        QSeries direct = hecke::hecke_tj(*f, p, j);
        CHECK(equal_on_shared(hecke::hecke_tj(*f, p, 1), hecke::hecke_tj_by_recurrence(*f, p, 1)));
        long pj1 = 1;
        for (long i = 0; i < j - 1; ++i) pj1 *= p;
        for (long n = 0; n < direct.precision(); ++n)
          if (n % pj1 == 0) CHECK(direct.coeff(n) == chain.coeff(n));
        CycNumber kappa = f->chi.evaluate(p).scaled(mpq_class(hecke::power_z(p, f->k - 1)));
        long pe = 1;
        for (long i = 0; i < j - 2; ++i) pe *= p;
        CHECK(direct.coeff(1) - chain.coeff(1) == kappa * f->a(pe));
      }
    }
  }
}

TEST_CASE("prime-power subsequences: frozen values and path agreement") {
  auto seq = hecke::prime_power_coefficients(delta(), 2, 1, 4, PowerPath::Direct);
  mpq_class v;
  CHECK(seq[0].rational_value(&v));
  CHECK(v == 1);
  CHECK(seq[1].rational_value(&v));
  CHECK(v == -24);
  CHECK(seq[2].rational_value(&v));
  CHECK(v == -1472);
  CHECK(seq[3].rational_value(&v));
  CHECK(v == 84480);

  auto one = hecke::prime_power_coefficients(delta(), 5, 1, 1);
  CHECK(one.size() == 1);
  CHECK(one[0] == CycNumber(1L));

  // direct and recurrence agree where both reach (2^7, 3^5 < precision)
  for (auto [p, terms] : {std::pair<long, long>{2, 8}, {3, 6}}) {
    auto d = hecke::prime_power_coefficients(delta(), p, 1, terms, PowerPath::Direct);
    auto r = hecke::prime_power_coefficients(delta(), p, 1, terms, PowerPath::Recurrence);
    for (size_t i = 0; i < d.size(); ++i) CHECK(d[i] == r[i]);
  }
  // recurrence extends beyond any expansion and matches the test oracle
  auto far = hecke::prime_power_coefficients(delta(), 2, 1, 41, PowerPath::Recurrence);
  auto oracle = oracles::tau_two_powers(41);
  for (size_t i = 0; i < far.size(); ++i) {
    CHECK(far[i].rational_value(&v));
    CHECK(v == mpq_class(oracle[i]));
  }
  CHECK_THROWS(hecke::prime_power_coefficients(delta(), 2, 1, 41, PowerPath::Direct));
}

TEST_CASE("subsequence three-term recursion holds from n = 1 on") {
  for (const FormContext* f : {&delta(), &eta11(), &eta4_6()}) {
    for (long p : {2L, 3L, 5L}) {
      if (f->N % p == 0) continue;
      for (long j : {1L, 2L, 3L}) {
        auto u = hecke::prime_power_coefficients(*f, p, j, 12, PowerPath::Recurrence);
        auto lambda = hecke::power_sum_eigenvalue(*f, p, j);
        REQUIRE(lambda.has_value());
        CycNumber kj = f->chi.evaluate(p)
                           .pow(static_cast<unsigned long>(j))
                           .scaled(mpq_class(hecke::power_z(p, j * (f->k - 1))));
        for (size_t n = 1; n + 1 < u.size(); ++n)
          CHECK(u[n + 1] == *lambda * u[n] - kj * u[n - 1]);
      }
    }
  }
}

TEST_CASE("generating residual for j = 1 is the bare constant") {
  for (long p : {2L, 3L, 5L}) {
    auto res = hecke::eigen_generating_residual(delta(), p, 1, 10, PowerPath::Recurrence);
    CHECK(res[0] == CycNumber(1L));
    for (size_t i = 1; i < res.size(); ++i) CHECK(res[i].is_zero());
  }
}

TEST_CASE("eigenvalue extraction verifies and downgrades") {
  auto lam = hecke::tj_eigenvalue(delta(), 2, 1);
  REQUIRE(lam.has_value());
  mpq_class v;
  CHECK(lam->rational_value(&v));
  CHECK(v == -24);

  // perturb one coefficient: the verification pass must reject
  QSeries bad = delta().coeffs;
  bad.set_coeff(6, bad.coeff(6) + CycNumber(1L));
  FormContext g = delta();
  g.coeffs = bad;
  CHECK(!hecke::tj_eigenvalue(g, 2, 1).has_value());

  // power sums: lambda_2 = a(p)^2 - 2 kappa
  auto l2 = hecke::power_sum_eigenvalue(delta(), 2, 2);
  REQUIRE(l2.has_value());
  CHECK(l2->rational_value(&v));
  CHECK(v == mpq_class(-24) * -24 - 2 * 2048);
}

TEST_CASE("euler roots: frozen moduli and degenerate cases") {
  auto ef = hecke::euler_factor_of(delta(), 2);
  CHECK(ef.degree == 2);
  CHECK(std::abs(ef.alpha + ef.beta - std::complex<double>(-24.0, 0.0)) < 1e-9);
  CHECK(std::abs(ef.alpha * ef.beta - std::complex<double>(2048.0, 0.0)) < 1e-6);
  // |alpha| = 2^{5.5}; frozen from the quadratic formula
  CHECK(ef.alpha_abs == doctest::Approx(45.254833995939045).epsilon(1e-12));
  CHECK(ef.deligne_moduli_ok);
  CHECK(ef.alpha.imag() >= 0);  // pairing rule

  // a(p) = 0, chi(p) = 1: roots +- i p^{(k-1)/2}
  auto pure = hecke::euler_roots(CycNumber(0L), 12, CycNumber(1L), 2);
  CHECK(pure.alpha.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pure.alpha.imag() == doctest::Approx(45.254833995939045).epsilon(1e-12));
  CHECK(pure.beta.imag() == doctest::Approx(-45.254833995939045).epsilon(1e-12));

  // chi(p) = 0: linear factor
  auto lin = hecke::euler_roots(CycNumber(7L), 3, CycNumber(0L), 2);
  CHECK(lin.degree == 1);
  CHECK(std::abs(lin.alpha - std::complex<double>(7.0, 0.0)) < 1e-12);
}

TEST_CASE("root-of-unity average reproduces the subsequence") {
  auto ef = hecke::euler_factor_of(delta(), 2);
  // j = 1: the plain local expansion
  auto avg1 = hecke::root_of_unity_average(ef, 1, 8);
  auto seq = hecke::prime_power_coefficients(delta(), 2, 1, 9, PowerPath::Recurrence);
  for (long n = 0; n < 9; ++n) {
    mpq_class a;
    REQUIRE(seq[n].rational_value(&a));
    double expect = a.get_d() / std::pow(2.0, 5.5 * n);
    CHECK(std::abs(avg1.normalized[n] - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
  }
  // j = 3: X^3 coefficient carries tau(8), off-multiples vanish
  auto avg3 = hecke::root_of_unity_average(ef, 3, 5);
  CHECK(std::abs(avg3.normalized[1]) < 1e-12);
  CHECK(std::abs(avg3.normalized[2]) < 1e-12);
  double t8 = 84480.0 / std::pow(2.0, 5.5 * 3);
  CHECK(avg3.normalized[3].real() == doctest::Approx(t8).epsilon(1e-9));
  CHECK_THROWS(hecke::root_of_unity_average(ef, 0, 5));
}

TEST_CASE("degeneracy scan") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    auto ef = hecke::euler_factor_of(delta(), p);
    for (long j : {1L, 3L, 5L}) {
      auto rep = hecke::degeneracy_scan(ef, j, 1e-9);
      CHECK(rep.real_pole_mu.empty());
      CHECK(rep.vanishing_coefficient_mu.empty());
    }
  }
  // synthetic double real root: flagged exactly at mu = 0
  auto dbl = hecke::euler_roots(CycNumber(10L), 3, CycNumber(1L), 5);
  auto rep = hecke::degeneracy_scan(dbl, 7, 1e-9);
  CHECK(rep.real_pole_mu == std::vector<long>{0});
  // chi(p) = -1, even j: the coefficient zeta^{-mu} + chi(p) zeta^{mu}
  // vanishes exactly (why the hypotheses demand odd j and odd order)
  CHECK(hecke::degeneracy_coefficient(CycNumber(-1L), 2, 0).is_zero());
  CHECK(hecke::degeneracy_coefficient(CycNumber(-1L), 2, 1).is_zero());
  auto evenj = hecke::euler_roots(CycNumber(0L), 3, CycNumber(-1L), 5);
  auto rep2 = hecke::degeneracy_scan(evenj, 2, 1e-9);
  CHECK(!rep2.vanishing_coefficient_mu.empty());
}

TEST_CASE("form context validation") {
  auto chi = DirichletCharacter::principal(1);
  QSeries frac(mpq_class(1, 24), 5);
  CHECK_THROWS(hecke::make_form_context(12, 1, chi, frac, false));
  QSeries ok(mpq_class(1), 5);
  ok.set_coeff(0, CycNumber(2L));  // a(1) = 2
  CHECK_THROWS(hecke::make_form_context(12, 1, chi, ok, true));
  CHECK_NOTHROW(hecke::make_form_context(12, 1, chi, ok, false));
}

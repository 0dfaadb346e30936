#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wedgelab/hecke.hpp"
#include "wedgelab/shimura.hpp"

using namespace wedgelab;
using shimura::HalfIntegralContext;
using shimura::LiftResult;

namespace {

std::vector<CycNumber> random_ints(std::mt19937_64& rng, long len, long lo = -50, long hi = 50) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<CycNumber> out(len);
  for (auto& v : out) v = CycNumber(dist(rng));
  if (out[0].is_zero()) out[0] = CycNumber(1L);
  return out;
}

}  // namespace

TEST_CASE("mobius sieve matches factorization") {
  auto mu = shimura::mobius_sieve(500);
  for (long n = 1; n <= 500; ++n) CHECK(mu[n] == oracles::mobius_bruteforce(n));
  CHECK(shimura::is_squarefree(1));
  CHECK(shimura::is_squarefree(30));
  CHECK(!shimura::is_squarefree(12));
  CHECK(!shimura::is_squarefree(49));
}

TEST_CASE("context validation") {
  std::mt19937_64 rng(31);
  auto chi = DirichletCharacter::principal(4);
  auto b = random_ints(rng, 10);
  CHECK_THROWS(shimura::make_halfintegral_context(1, 6, chi, 1, b));   // 4 ∤ N
  CHECK_THROWS(shimura::make_halfintegral_context(1, 4, chi, 12, b));  // t not squarefree
  CHECK_THROWS(shimura::make_halfintegral_context(0, 4, chi, 1, b));   // k < 1
  auto ctx = shimura::make_halfintegral_context(2, 4, chi, 1, b);
  CHECK(ctx.nonzero_witness.has_value());
  CHECK(*ctx.nonzero_witness == 1);
  std::vector<CycNumber> zeros(5);
  auto zctx = shimura::make_halfintegral_context(2, 4, chi, 1, zeros);
  CHECK(!zctx.nonzero_witness.has_value());
}

TEST_CASE("lift: divisor-sum values against a brute-force loop") {
  std::mt19937_64 rng(32);
  auto chis = DirichletCharacter::all_characters(8);
  const auto& chi = chis.at(2 % chis.size());
  const long k = 3, terms = 60;
  auto b = random_ints(rng, terms);
  auto ctx = shimura::make_halfintegral_context(k, 8, chi, 5, b);
  auto L = shimura::lift(ctx, terms);

  CHECK(L.Aval(1) == ctx.bval(1));  // only divisor d = 1

  for (long n = 1; n <= terms; ++n) {
    CycNumber expect;
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      CycNumber w = ctx.twist.evaluate(d);
      if (w.is_structural_zero()) continue;
      expect += w.scaled(mpq_class(hecke::power_z(d, k - 1))) * ctx.bval(n / d);
    }
    CHECK(L.Aval(n) == expect);
  }

  // at a prime with vanishing twist value the lift is the identity
  for (long p : {2L, 5L})
    if (ctx.twist.evaluate(p).is_zero()) CHECK(L.Aval(p) == ctx.bval(p));
}

TEST_CASE("lift then invert is the identity") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    long N = 4 * (1 + static_cast<long>(rng() % 4));
    auto chis = DirichletCharacter::all_characters(N);
    const auto& chi = chis[rng() % chis.size()];
    long t = std::vector<long>{1, 2, 3, 5, 6, 7}[rng() % 6];
    long k = 1 + static_cast<long>(rng() % 6);
    auto b = random_ints(rng, 120);
    auto ctx = shimura::make_halfintegral_context(k, N, chi, t, b);
    auto L = shimura::lift(ctx, 120);
    auto back = shimura::invert_lift(L, 120);
    for (long n = 1; n <= 120; ++n) CHECK(back[n - 1] == ctx.bval(n));
  }
}

TEST_CASE("inverse of a delta sequence is the Moebius-twisted weight") {
  auto chi = DirichletCharacter::principal(4);
  const long k = 2, terms = 20;
  LiftResult L;
  L.twist = shimura_twist_character(chi, k, 4, 1);
  L.k = k;
  L.N = 4;
  L.t = 1;
  L.A.assign(terms, CycNumber());
  L.A[0] = CycNumber(1L);  // A = indicator at n = 1
  auto b = shimura::invert_lift(L, terms);
  for (long n = 1; n <= terms; ++n) {
    int mu = oracles::mobius_bruteforce(n);
    CycNumber expect = L.twist.evaluate(n).scaled(
        mpq_class(mu) * mpq_class(hecke::power_z(n, k - 1)));
    CHECK(b[n - 1] == expect);
  }
}

TEST_CASE("roundtrip preserves square-only support") {
  std::mt19937_64 rng(34);
  auto chi = DirichletCharacter::all_characters(4).at(1);
  std::vector<CycNumber> b(100);
  for (long n = 1; n * n <= 100; ++n) b[n * n - 1] = CycNumber(static_cast<long>(rng() % 9) + 1);
  auto ctx = shimura::make_halfintegral_context(2, 4, chi, 1, b);
  auto back = shimura::invert_lift(shimura::lift(ctx, 100), 100);
  for (long n = 1; n <= 100; ++n) {
    CHECK(back[n - 1] == ctx.bval(n));
    long r = static_cast<long>(std::lround(std::sqrt(double(n))));
    if (r * r != n) CHECK(back[n - 1].is_zero());
  }
}

TEST_CASE("local series: head values and long-division oracle") {
  auto chi = DirichletCharacter::all_characters(8).at(1);
  const long p = 3, k = 2;
  CycNumber a_t(7L);
  CycNumber lam = chi.evaluate(p).scaled(mpq_class(5));
  CycNumber w_tw = shimura_twist_character(chi, k, 8, 1).evaluate(p);
  auto c = shimura::halfintegral_euler_series(a_t, lam, chi, w_tw, p, k, 12);

  CHECK(c[0] == a_t);  // nu = 0
  // nu = 1: a(t) (lambda - chi_{t,N}(p) p^{k-1}), by hand expansion
  CycNumber w = w_tw.scaled(mpq_class(hecke::power_z(p, k - 1)));
  CHECK(c[1] == a_t * (lam - w));

  // long-division oracle: multiply back by the denominator and compare with
  // the numerator a_t (1 - w X)
  CycNumber qn = chi.evaluate(p).pow(2).scaled(mpq_class(hecke::power_z(p, 2 * k - 1)));
  for (long nu = 2; nu < 12; ++nu) CHECK((c[nu] - lam * c[nu - 1] + qn * c[nu - 2]).is_zero());
  CHECK((c[1] - lam * c[0] + w * a_t).is_zero());

  // zero numerator: identically zero
  auto z = shimura::halfintegral_euler_series(CycNumber(), lam, chi, w_tw, p, k, 6);
  for (const auto& v : z) CHECK(v.is_zero());
  CHECK_THROWS(shimura::halfintegral_euler_series(a_t, lam, chi, w_tw, p, k, 0));
}

TEST_CASE("synthetic contexts are multiplicative and transfer-check clean") {
  std::mt19937_64 rng(35);
  shimura::SyntheticEigenSpec spec;
  spec.k = 3;
  spec.N = 4;
  spec.t = 2;
  spec.chi = DirichletCharacter::all_characters(4).at(1);
  spec.a_t = CycNumber(3L);
  for (long p = 2; p <= 200; ++p) {
    if (!wedgelab::hecke::is_prime(p)) continue;
    spec.lambdas[p] =
        spec.chi.evaluate(p).scaled(mpq_class(static_cast<long>(rng() % 21) - 10));
  }
  auto ctx = shimura::generate_synthetic_context(spec, 200);

  // multiplicativity: b(mn) a(t) = b(m) b(n) for coprime m, n
  for (auto [m, n] : {std::pair<long, long>{2, 3}, {4, 5}, {9, 8}, {5, 7}, {25, 3}})
    CHECK(ctx.bval(m * n) * spec.a_t == ctx.bval(m) * ctx.bval(n));

  auto L = shimura::lift(ctx, 200);
  for (long p : {3L, 5L, 7L}) {
    auto rep = shimura::eigen_transfer_check(ctx, L, p, 1e-9);
    CHECK(rep.recursion_exact);
    CHECK(rep.moduli_ok);
    CHECK(rep.expected_abs == doctest::Approx(std::pow(double(p), 2.5)).epsilon(1e-12));
  }
  CHECK_THROWS(shimura::eigen_transfer_check(ctx, L, 2, 1e-9));  // p | N

  // a perturbed coefficient breaks the recursion at the perturbed index
  auto bad = ctx;
  bad.b[26] = bad.b[26] + CycNumber(1L);  // b(27) = b(3^3)
  auto badL = shimura::lift(bad, 200);
  auto rep = shimura::eigen_transfer_check(bad, badL, 3, 1e-9);
  CHECK(!rep.recursion_exact);
  CHECK(rep.first_bad_nu >= 2);

  // missing lambda for a needed prime is an error
  shimura::SyntheticEigenSpec missing = spec;
  missing.lambdas.erase(7);
  CHECK_THROWS(shimura::generate_synthetic_context(missing, 200));
}

TEST_CASE("lambda = 0 gives the alternating pure-quadratic pattern") {
  auto chi = DirichletCharacter::principal(4);
  shimura::SyntheticEigenSpec spec;
  spec.k = 2;
  spec.N = 4;
  spec.t = 1;
  spec.chi = chi;
  spec.a_t = CycNumber(1L);
  for (long p = 2; p <= 100; ++p)
    if (wedgelab::hecke::is_prime(p)) spec.lambdas[p] = CycNumber();
  auto ctx = shimura::generate_synthetic_context(spec, 100);
  // with lambda = 0: b(p^{2m}) alternates as (-q)^m stretched over even powers
  auto L = shimura::lift(ctx, 100);
  auto rep = shimura::eigen_transfer_check(ctx, L, 3, 1e-9);
  CHECK(rep.recursion_exact);
  CHECK(rep.moduli_ok);  // roots +- i p^{k-1/2}
}

TEST_CASE("theorem-4 style degeneracy reports") {
  // lambda = 0, chi^2(p) = 1: roots +- i p^{k-1/2}, no real root
  auto rep = shimura::halfintegral_degeneracy(CycNumber(0L), CycNumber(1L), 2, 5, 1e-9);
  CHECK(!rep.real_root);
  CHECK(!rep.chi2_plus_one_zero);
  CHECK(std::abs(rep.alpha - std::complex<double>(0, std::pow(5.0, 1.5))) < 1e-6);

  // lambda ~= 2 p^{k-1/2} (rational approximation): double real root, the
  // matched shape lambda = + p^{k-1/2} (1 + chi^2(p))
  mpq_class approx(mpz_class("22360679774997897"), mpz_class("1000000000000000"));  // ~2*5^1.5
  approx.canonicalize();
  auto dbl = shimura::halfintegral_degeneracy(CycNumber(approx), CycNumber(1L), 2, 5, 1e-6);
  CHECK(dbl.real_root);
  CHECK(dbl.matched_sign == 1);

  // chi^2(p) = -1 is detected exactly (the even-order obstruction)
  auto flag = shimura::halfintegral_degeneracy(CycNumber(0L), CycNumber(-1L), 2, 5, 1e-9);
  CHECK(flag.chi2_plus_one_zero);
  // an order-4 character mod 5 squares to -1 at 2
  auto chi5 = DirichletCharacter::from_generator_exponents(5, {1});
  CHECK(chi5.evaluate(2).pow(2) == CycNumber(-1L));
  CHECK(!chi5.order_of_square_is_odd());
}

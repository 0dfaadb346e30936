#include <doctest.h>

#include <cmath>
#include <random>

#include "wedgelab/dirichlet.hpp"
#include "wedgelab/hecke.hpp"
#include "wedgelab/catalog.hpp"

using namespace wedgelab;
using dirichlet::DirichletSeriesView;
using dirichlet::PrefixKind;

namespace {

DirichletSeriesView ones(long M) {
  return DirichletSeriesView(std::vector<std::complex<double>>(M, {1.0, 0.0}));
}

}  // namespace

TEST_CASE("partial sums: known values") {
  // a(n) = n at s = 0, M = 10: 55
  std::vector<std::complex<double>> lin(10);
  for (long n = 1; n <= 10; ++n) lin[n - 1] = {double(n), 0.0};
  DirichletSeriesView vl(std::move(lin));
  CHECK(dirichlet::partial_sum(vl, 0.0, 10).real() == doctest::Approx(55.0).epsilon(1e-15));

  // a = 1 at s = 2 approaches pi^2/6 within 1/M
  auto v = ones(20000);
  double zeta2 = M_PI * M_PI / 6.0;
  CHECK(std::abs(dirichlet::partial_sum(v, 2.0, 20000).real() - zeta2) < 1.0 / 20000);

  CHECK_THROWS(dirichlet::partial_sum(v, 2.0, 0));
  CHECK_THROWS(dirichlet::partial_sum(v, 2.0, 20001));
}

TEST_CASE("partial sums are additive over splits to a few ulps") {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::vector<std::complex<double>> coeffs(5000);
  double mass = 0;
  for (auto& z : coeffs) {
    z = {val(rng), val(rng)};
    mass += std::abs(z);
  }
  DirichletSeriesView v(std::move(coeffs));
  for (long cut : {1L, 7L, 1234L, 4999L}) {
    auto whole = dirichlet::partial_sum(v, 1.3, 5000);
    auto left = dirichlet::partial_sum(v, 1.3, cut);
    auto right = dirichlet::partial_sum(v, 1.3, 5000, cut + 1);
    CHECK(std::abs(whole - (left + right)) <= 64 * std::numeric_limits<double>::epsilon() * mass);
  }
}

TEST_CASE("abscissa ladder on model sequences") {
  // constant sequence: slope 1 with a tight band
  auto est = dirichlet::abscissa_estimate(ones(100000), PrefixKind::Plain, 100000);
  CHECK(std::abs(est.estimate - 1.0) <= 0.1);
  CHECK(est.ladder.size() >= 4);

  // alternating +1, -1: plain prefix bounded, absolute prefix grows linearly
  std::vector<std::complex<double>> alt(100000);
  for (size_t i = 0; i < alt.size(); ++i) alt[i] = {i % 2 ? -1.0 : 1.0, 0.0};
  DirichletSeriesView va(std::move(alt));
  auto plain = dirichlet::abscissa_estimate(va, PrefixKind::Plain, 100000);
  auto abs_est = dirichlet::abscissa_estimate(va, PrefixKind::Absolute, 100000);
  CHECK(plain.estimate <= 0.3);
  CHECK(std::abs(abs_est.estimate - 1.0) <= 0.1);
  // the ordering invariant, up to the reported band
  CHECK(abs_est.estimate >= plain.estimate - plain.uncertainty);

  // all-zero prefix reports -inf
  DirichletSeriesView vz(std::vector<std::complex<double>>(200, {0.0, 0.0}));
  auto zero = dirichlet::abscissa_estimate(vz, PrefixKind::Plain, 200);
  CHECK(std::isinf(zero.estimate));
  CHECK(zero.estimate < 0);

  CHECK_THROWS(dirichlet::abscissa_estimate(ones(200), PrefixKind::Plain, 99));
}

TEST_CASE("L-function partial sums with tail bounds") {
  auto one = DirichletCharacter::principal(1);
  auto z2 = dirichlet::L_chi(one, 2.0, 100000);
  CHECK(std::abs(z2.value.real() - M_PI * M_PI / 6.0) <= z2.tail_bound);

  // (-4/.) at s = 2: direct sum approaches Catalan's constant 0.9159655...
  auto chi = DirichletCharacter::kronecker_character(mpz_class(-4));
  auto cat = dirichlet::L_chi(chi, 2.0, 1000000);
  CHECK(std::abs(cat.value.real() - 0.915965594177219015) <= cat.tail_bound);
  CHECK(cat.value.imag() == doctest::Approx(0.0).epsilon(1e-12));

  auto head = dirichlet::L_chi(chi, 2.0, 1);
  CHECK(head.value.real() == doctest::Approx(1.0).epsilon(1e-15));  // chi(1) = 1

  CHECK_THROWS(dirichlet::L_chi(chi, 1.0, 100));
  CHECK_THROWS(dirichlet::L_chi(chi, 0.5, 100));
}

TEST_CASE("lift identity in partial sums") {
  // single-prime synthetic data reduces to the local factor: tiny residual
  shimura::SyntheticEigenSpec spec;
  spec.k = 3;
  spec.N = 4;
  spec.t = 1;
  spec.chi = DirichletCharacter::all_characters(4).at(1);
  spec.a_t = CycNumber(2L);
  std::mt19937_64 rng(92);
  for (long p = 2; p <= 512; ++p) {
    if (!wedgelab::hecke::is_prime(p)) continue;
    long c = static_cast<long>(rng() % 7) - 3;
    spec.lambdas[p] = spec.chi.evaluate(p).scaled(mpq_class(c));
  }
  auto ctx = shimura::generate_synthetic_context(spec, 512);
  auto L = shimura::lift(ctx, 512);
  auto rep = dirichlet::verify_lift_partial_sums(ctx, L, 2.0 * spec.k, 512);
  CHECK(rep.pass);
  CHECK(rep.residual <= rep.tail_bound);

  // b = 0 everywhere: residual exactly zero
  auto zctx = shimura::make_halfintegral_context(2, 4, spec.chi, 1,
                                                 std::vector<CycNumber>(64), "synthetic");
  auto zL = shimura::lift(zctx, 64);
  auto zrep = dirichlet::verify_lift_partial_sums(zctx, zL, 6.0, 64);
  CHECK(zrep.residual == 0.0);

  // range violation
  CHECK_THROWS(dirichlet::verify_lift_partial_sums(ctx, L, spec.k + 0.25, 512));
}

TEST_CASE("normalized tau partial sums stay finite (regression value)") {
  auto delta = catalog::load_catalog_form("delta", 10001);
  std::vector<std::complex<double>> vals;
  double naive = 0.0;
  for (long n = 1; n <= 10000; ++n) {
    mpq_class t;
    REQUIRE(delta.integral->a(n).rational_value(&t));
    double v = std::abs(t.get_d()) / std::pow(double(n), 5.5);
    vals.push_back({v, 0.0});
    naive += v * std::pow(double(n), -1.1);
  }
  DirichletSeriesView view(std::move(vals));
  auto s = dirichlet::partial_sum(view, 1.1, 10000);
  CHECK(std::isfinite(s.real()));
  CHECK(s.real() == doctest::Approx(naive).epsilon(1e-12));
  // recorded regression value, frozen from the direct-summation oracle
  CHECK(s.real() == doctest::Approx(3.9358533613154472).epsilon(1e-9));
}

TEST_CASE("single-prime-support data reduces to the local identity") {
  const long k = 4, p = 2, M = 512;
  auto chi = DirichletCharacter::all_characters(4).at(1);
  auto twist = shimura_twist_character(chi, k, 4, 1);
  auto local = shimura::halfintegral_euler_series(CycNumber(3L), chi.evaluate(p).scaled(mpq_class(9)),
                                                  chi, twist.evaluate(p), p, k, 10);
  std::vector<CycNumber> b(M);
  long idx = 1;
  for (size_t nu = 0; nu < local.size() && idx <= M; ++nu, idx *= p) b[idx - 1] = local[nu];
  auto ctx = shimura::make_halfintegral_context(k, 4, chi, 1, b, "synthetic");
  auto L = shimura::lift(ctx, M);
  auto rep = dirichlet::verify_lift_partial_sums(ctx, L, 2.0 * k, M);
  CHECK(rep.pass);
  CHECK(rep.residual <= 1e-10);
  // the b partial sum IS the local series evaluated at X = p^{-s}
  double direct = 0.0;
  for (size_t nu = 0; nu < local.size(); ++nu)
    direct += local[nu].embed().real() * std::pow(double(p), -2.0 * k * double(nu));
  CHECK(std::abs(rep.b_sum.real() - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
}

TEST_CASE("lift-identity residual shrinks as the truncation doubles") {
  shimura::SyntheticEigenSpec spec;
  spec.k = 2;
  spec.N = 4;
  spec.t = 1;
  spec.chi = DirichletCharacter::all_characters(4).at(1);
  spec.a_t = CycNumber(1L);
  std::mt19937_64 rng(93);
  for (long p = 2; p <= 2048; ++p) {
    if (!wedgelab::hecke::is_prime(p)) continue;
    spec.lambdas[p] = spec.chi.evaluate(p).scaled(mpq_class(static_cast<long>(rng() % 5) - 2));
  }
  auto ctx = shimura::generate_synthetic_context(spec, 2048);
  auto L = shimura::lift(ctx, 2048);
  double prev = std::numeric_limits<double>::infinity();
  for (long M : {256L, 512L, 1024L, 2048L}) {
    auto rep = dirichlet::verify_lift_partial_sums(ctx, L, 2.0 * spec.k, M);
    CHECK(rep.pass);
    // monotone within tail noise: allow the smaller truncation's bound
    CHECK(rep.residual <= prev + rep.tail_bound);
    prev = rep.residual;
  }
}

TEST_CASE("view prefix caches") {
  std::vector<std::complex<double>> vals = {{1, 1}, {-2, 0}, {0, 3}};
  DirichletSeriesView v(std::move(vals));
  CHECK(v.prefix(2) == std::complex<double>(-1.0, 1.0));
  CHECK(v.prefix_abs(3) >= v.prefix_abs(2));  // |.| prefix nondecreasing
  CHECK(v.prefix(0) == std::complex<double>(0.0, 0.0));
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "wedgelab/wedge.hpp"

using namespace wedgelab::wedge;

TEST_CASE("membership: boundaries, the degenerate ray, and zero") {
  Wedge w(-M_PI / 4, M_PI / 4);
  CHECK(w.contains({1.0, 0.0}));
  CHECK(w.contains(std::polar(1.0, M_PI / 4)));  // boundary
  CHECK(w.contains(std::polar(2.0, -M_PI / 4)));
  CHECK(!w.contains({-1.0, 0.0}));
  CHECK(!w.contains({0.0, 1.0}));

  Wedge ray(0.0, 0.0);
  CHECK(ray.width() == 0.0);
  CHECK(ray.contains({5.0, 0.0}));
  CHECK(!ray.contains({-5.0, 0.0}));
  CHECK(ray.contains({0.0, 0.0}));
  CHECK(!ray.contains({0.0, 0.0}, /*strict_zero=*/true));
}

TEST_CASE("constructor accepts wrapped angles and rejects wide openings") {
  CHECK_NOTHROW(Wedge(3.0, 3.5));                 // crosses the branch cut
  CHECK_NOTHROW(Wedge(3.0, 3.0 + M_PI - 1e-9));
  CHECK_THROWS(Wedge(0.0, M_PI));                 // opening must be < pi
  CHECK_THROWS(Wedge(0.0, 4.0));
  Wedge w(3.0, 3.5);
  CHECK(w.contains(std::polar(1.0, 3.25)));
  CHECK(!w.contains(std::polar(1.0, 0.0)));
}

TEST_CASE("rotation normalization") {
  auto r = normalize_rotation(Wedge(-M_PI / 4, M_PI / 4));
  CHECK(r.phi == doctest::Approx(M_PI / 4));
  CHECK(r.gamma == doctest::Approx(std::sqrt(0.5)));
  CHECK(r.psi == doctest::Approx(0.0));

  double eps = 1e-3;
  auto r2 = normalize_rotation(Wedge(0.0, M_PI / 2 - eps));
  CHECK(r2.phi == doctest::Approx((M_PI / 2 - eps) / 2));
  CHECK(r2.psi == doctest::Approx(-(M_PI / 2 - eps) / 2));

  // rejection-sampled members satisfy Re(e^{i psi} z) >= gamma |z|
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> width(0.0, M_PI - 1e-6);
  std::uniform_real_distribution<double> radius(0.001, 1000.0);
  for (int i = 0; i < 10000; ++i) {
    double t1 = angle(rng);
    Wedge w2(t1, t1 + width(rng));
    auto nr = normalize_rotation(w2);
    std::uniform_real_distribution<double> inside(0.0, w2.width());
    std::complex<double> z = std::polar(radius(rng), w2.theta1() + inside(rng));
    CHECK((z * std::polar(1.0, nr.psi)).real() >= nr.gamma * std::abs(z) - 1e-12 * std::abs(z));
  }
}

TEST_CASE("scan: sign-change conventions") {
  Wedge w(-0.5, 0.5);
  // all-positive real sequence: no escapes, no changes
  std::vector<std::complex<double>> pos = {{1, 0}, {2, 0}, {0.5, 0}};
  auto rep = scan(pos, 1, w);
  CHECK(rep.escapes.empty());
  CHECK(rep.re_changes.empty());
  CHECK(!rep.first_escape.has_value());

  // alternating +-i: every index escapes, imaginary part flips every step
  std::vector<std::complex<double>> alt = {{0, 1}, {0, -1}, {0, 1}, {0, -1}};
  auto rep2 = scan(alt, 0, w);
  CHECK(rep2.escapes == std::vector<long>{0, 1, 2, 3});
  CHECK(rep2.im_changes == std::vector<long>{1, 2, 3});
  CHECK(rep2.first_escape.has_value());
  CHECK(*rep2.first_escape == 0);

  // zeros are skipped, not counted: 3, 0, -2 has one change, at the -2
  std::vector<std::complex<double>> zz = {{3, 0}, {0, 0}, {-2, 0}};
  auto rep3 = scan(zz, 10, w);
  CHECK(rep3.re_changes == std::vector<long>{12});
}

TEST_CASE("scan merge equals the scan of the concatenation") {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<int> small(-2, 2);
  Wedge w(-0.7, 0.6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::complex<double>> seq(40);
    for (auto& z : seq) z = {double(small(rng)), double(small(rng))};
    size_t cut = 1 + rng() % 38;
    auto whole = scan(seq, 5, w);
    auto left = scan(std::span<const std::complex<double>>(seq).subspan(0, cut), 5, w);
    auto right = scan(std::span<const std::complex<double>>(seq).subspan(cut), 5 + long(cut), w);
    auto merged = merge(left, right);
    CHECK(merged.escapes == whole.escapes);
    CHECK(merged.re_changes == whole.re_changes);
    CHECK(merged.im_changes == whole.im_changes);
    CHECK(merged.first_escape == whole.first_escape);
    CHECK(merged.re_last_sign == whole.re_last_sign);
    CHECK(merged.im_first_sign == whole.im_first_sign);
  }
  CHECK_THROWS(merge(scan(std::vector<std::complex<double>>{}, 0, w),
                     scan(std::vector<std::complex<double>>{}, 5, w)));
}

TEST_CASE("real sequences: escapes from a symmetric wedge are the negatives") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  Wedge w(-0.9, 0.9);
  std::vector<std::complex<double>> seq(500);
  std::vector<long> negatives;
  for (size_t i = 0; i < seq.size(); ++i) {
    seq[i] = {val(rng), 0.0};
    if (seq[i].real() < 0) negatives.push_back(long(i));
  }
  auto rep = scan(seq, 0, w);
  CHECK(rep.escapes == negatives);
}

TEST_CASE("scale and rotation invariance") {
  std::mt19937_64 rng(74);
  std::uniform_real_distribution<double> angle(-3.1, 3.1);
  std::uniform_real_distribution<double> width(0.0, M_PI - 1e-6);
  std::uniform_real_distribution<double> radius(1e-3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    double t1 = angle(rng);
    double wd = width(rng);
    Wedge w(t1, t1 + wd);
    double theta = angle(rng);
    // stay away from the boundary so float wrap cannot flip membership
    double delta = std::fmod(std::fmod(theta - t1, 2 * M_PI) + 2 * M_PI, 2 * M_PI);
    if (std::min({std::abs(delta - wd), delta, 2 * M_PI - delta}) < 1e-6) continue;
    std::complex<double> z = std::polar(radius(rng), theta);
    CHECK(w.contains(z) == w.contains(z * radius(rng)));
    double psi = angle(rng);
    CHECK(w.contains(z) == w.rotated(psi).contains(z * std::polar(1.0, psi)));
  }
}

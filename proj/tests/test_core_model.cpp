#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hetcorr/state.hpp"

using namespace hetcorr;
using std::numbers::pi;

namespace {
const double kHalfLn2 = 0.5 * std::log(2.0);

QuadratureState random_physical_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  QuadratureState s;
  // random pure squeezed state, rotated, with extra classical noise
  SqueezeParams sq{2.0 * u(rng), 2.0 * pi * u(rng)};
  s = apply_two_mode_squeeze(vacuum(), sq);
  const double extra = u(rng);  // >= 0 keeps det >= 1
  s.cov.xx += extra;
  s.cov.yy += extra * u(rng);
  s.mean = {2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0};
  return s;
}
}  // namespace

TEST_CASE("vacuum state") {
  const QuadratureState v = vacuum();
  CHECK(v.mean == std::complex<double>{0.0, 0.0});
  CHECK(v.cov.xx == 1.0);
  CHECK(v.cov.yy == 1.0);
  CHECK(v.cov.xy == 0.0);
  CHECK(v.cov.det() == doctest::Approx(1.0));
  for (double th : {0.0, 0.3, pi / 2, 2.0}) {
    CHECK(quadrature_variance(v, th) == doctest::Approx(1.0));
  }
}

TEST_CASE("two-mode squeeze on vacuum") {
  SUBCASE("r = 0 is the identity") {
    const QuadratureState s = apply_two_mode_squeeze(vacuum(), {0.0, 0.0});
    CHECK(s.cov.approx_equal(Cov2::identity(), 1e-15));
  }
  SUBCASE("r = ln2/2 gives cov diag(2, 1/2)") {
    const QuadratureState s = apply_two_mode_squeeze(vacuum(), {kHalfLn2, 0.0});
    CHECK(s.cov.xx == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.cov.yy == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.cov.xy == doctest::Approx(0.0));
  }
  SUBCASE("symplectic: det preserved for any r") {
    for (double r : {0.1, 0.5, 1.0, 3.0}) {
      const QuadratureState s = apply_two_mode_squeeze(vacuum(), {r, 0.4});
      CHECK(s.cov.det() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("negative r rejected") {
    CHECK_THROWS_AS(apply_two_mode_squeeze(vacuum(), {-0.1, 0.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("quadrature variance of the squeezed state") {
  const QuadratureState s = apply_two_mode_squeeze(vacuum(), {kHalfLn2, 0.0});
  CHECK(quadrature_variance(s, pi / 2) == doctest::Approx(0.5).epsilon(1e-12));
  // frozen oracle: (2 + 0.5)/2 by direct evaluation of the quadratic form
  CHECK(quadrature_variance(s, pi / 4) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("50-50 beamsplitter") {
  SUBCASE("mean mapping, first column") {
    QuadratureState a;
    a.mean = {1.0, 0.0};
    const auto [o1, o2] = beamsplitter_5050(a, vacuum());
    CHECK(o1.mean.real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(o1.mean.imag() == doctest::Approx(0.0));
    CHECK(o2.mean.real() == doctest::Approx(0.0));
    CHECK(o2.mean.imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("vacuum is invariant") {
    const auto [o1, o2] = beamsplitter_5050(vacuum(), vacuum());
    CHECK(o1.cov.approx_equal(Cov2::identity(), 1e-15));
    CHECK(o2.cov.approx_equal(Cov2::identity(), 1e-15));
  }
  SUBCASE("photon flux conserved") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const QuadratureState a = random_physical_state(rng);
      const QuadratureState b = random_physical_state(rng);
      const auto [o1, o2] = beamsplitter_5050(a, b);
      CHECK(std::norm(o1.mean) + std::norm(o2.mean) ==
            doctest::Approx(std::norm(a.mean) + std::norm(b.mean))
                .epsilon(1e-12));
    }
  }
  SUBCASE("applying the matrix twice matches its square") {
    // U^2 = i * [[0,1],[1,0]]: amplitudes swap and pick up a factor i
    QuadratureState a;
    a.mean = {0.3, -0.2};
    QuadratureState b;
    b.mean = {-1.1, 0.7};
    auto [o1, o2] = beamsplitter_5050(a, b);
    auto [p1, p2] = beamsplitter_5050(o1, o2);
    const std::complex<double> i{0.0, 1.0};
    CHECK(std::abs(p1.mean - i * b.mean) < 1e-12);
    CHECK(std::abs(p2.mean - i * a.mean) < 1e-12);
  }
}

TEST_CASE("attenuation") {
  SUBCASE("gamma = 1 leaves the state unchanged") {
    QuadratureState s = apply_two_mode_squeeze(vacuum(), {0.7, 0.0});
    s.mean = {0.5, 0.25};
    const QuadratureState out = attenuate(s, 1.0);
    CHECK(out.cov.approx_equal(s.cov, 1e-15));
    CHECK(out.mean == s.mean);
  }
  SUBCASE("gamma = 0 gives vacuum") {
    QuadratureState s = apply_two_mode_squeeze(vacuum(), {1.5, 0.3});
    s.mean = {2.0, -1.0};
    const QuadratureState out = attenuate(s, 0.0);
    CHECK(out.cov.approx_equal(Cov2::identity(), 1e-15));
    CHECK(out.mean == std::complex<double>{0.0, 0.0});
  }
  SUBCASE("gamma^2 = 0.5 mixes half vacuum into diag(0.5, 2)") {
    QuadratureState s;
    s.cov = Cov2::diagonal(0.5, 2.0);
    const QuadratureState out = attenuate(s, std::sqrt(0.5));
    CHECK(out.cov.xx == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(out.cov.yy == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("out-of-range gamma rejected") {
    CHECK_THROWS_AS(attenuate(vacuum(), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(attenuate(vacuum(), 1.1), std::invalid_argument);
  }
}

TEST_CASE("physicality preserved by all operations") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const QuadratureState s = random_physical_state(rng);
    REQUIRE(s.is_physical());
    CHECK(apply_two_mode_squeeze(s, {2.0 * u(rng), 2.0 * pi * u(rng)})
              .is_physical());
    CHECK(attenuate(s, u(rng)).is_physical());
    const auto [o1, o2] = beamsplitter_5050(s, random_physical_state(rng));
    CHECK(o1.is_physical());
    CHECK(o2.is_physical());
  }
}

TEST_CASE("squeeze followed by its inverse restores the covariance") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const QuadratureState s = random_physical_state(rng);
    const double r = 2.0 * u(rng);
    const double phase = 2.0 * pi * u(rng);
    // rotating the squeeze axis by pi/2 swaps e^r and e^-r
    const QuadratureState fwd = apply_two_mode_squeeze(s, {r, phase});
    const QuadratureState back =
        apply_two_mode_squeeze(fwd, {r, phase + pi});
    CHECK(back.cov.approx_equal(s.cov, 1e-10));
  }
}

TEST_CASE("attenuation contracts every quadrature toward vacuum") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const QuadratureState s = random_physical_state(rng);
    const double gamma = u(rng);
    const double theta = 2.0 * pi * u(rng);
    const double before = std::abs(quadrature_variance(s, theta) - 1.0);
    const double after =
        std::abs(quadrature_variance(attenuate(s, gamma), theta) - 1.0);
    CHECK(after <= before + 1e-12);
  }
}

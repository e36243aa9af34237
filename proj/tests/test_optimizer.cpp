#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hetcorr/optimizer.hpp"

using namespace hetcorr;
using std::numbers::pi;

TEST_CASE("feasibility of noise nulling") {
  CHECK(feasible({1.0, 0.0, {}}));
  CHECK(feasible({1.0, 0.125, {}}));
  CHECK_FALSE(feasible({1.0, 0.25, {}}));  // boundary is excluded
  CHECK(feasible({1.0, 0.2499, {}}));
  CHECK(feasible({10.0, 2.0, {}}));  // scales with bandwidth
  CHECK_FALSE(feasible({10.0, 2.5, {}}));
}

TEST_CASE("optimal squeeze parameter") {
  CHECK(optimal_r({1.0, 0.0, {}}) == doctest::Approx(0.0));
  CHECK(optimal_r({1.0, 0.125, {}}) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  SUBCASE("diverges toward the boundary") {
    CHECK(optimal_r({1.0, 0.2499, {}}) > 2.0);
    CHECK(optimal_r({1.0, 0.2499999, {}}) > optimal_r({1.0, 0.2499, {}}));
  }
  SUBCASE("infeasible budget raises the typed error") {
    CHECK_THROWS_AS(optimal_r({1.0, 0.25, {}}), InfeasibleBudget);
    CHECK_THROWS_AS(optimal_r({1.0, 0.4, {}}), InfeasibleBudget);
  }
  SUBCASE("strictly increasing in N_cl") {
    double prev = -1.0;
    for (double n = 0.0; n < 0.25; n += 0.01) {
      const double r = optimal_r({1.0, n, {}});
      CHECK(r > prev);
      prev = r;
    }
  }
}

TEST_CASE("total noise") {
  CHECK(total_noise({1.0, 0.1, {}}, 0.0, pi / 2) == doctest::Approx(0.1));
  SUBCASE("over-compensation beyond r* goes negative") {
    const NoiseBudget budget{1.0, 0.1, {}};
    const double r_star = optimal_r(budget);
    CHECK(total_noise(budget, r_star + 0.2, pi / 2) < 0.0);
    CHECK(total_noise(budget, r_star - 0.2, pi / 2) > 0.0);
  }
  SUBCASE("nulled at r* for random feasible budgets") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double bw = 0.1 + 10.0 * u(rng);
      const NoiseBudget budget{bw, 0.2499 * bw * u(rng), {}};
      REQUIRE(feasible(budget));
      CHECK(std::abs(total_noise(budget, optimal_r(budget), pi / 2)) <= 1e-12);
    }
  }
  SUBCASE("negative r rejected") {
    CHECK_THROWS_AS(total_noise({1.0, 0.1, {}}, -0.5, pi / 2),
                    std::invalid_argument);
  }
}

TEST_CASE("sweep over r") {
  const NoiseBudget budget{1.0, 0.125, {}};
  const double r_star = optimal_r(budget);
  SUBCASE("grid containing r* hits it exactly") {
    std::vector<double> grid{0.0, 0.1, 0.2, r_star, 0.5, 0.7};
    const SweepResult res = sweep_r(budget, grid, pi / 2);
    CHECK(res.rows[res.argmin].r == r_star);
    CHECK(res.rows[res.argmin].abs_total <= 1e-12);
  }
  SUBCASE("no classical noise puts the argmin at r = 0") {
    const SweepResult res =
        sweep_r({1.0, 0.0, {}}, {0.0, 0.1, 0.2, 0.3}, pi / 2);
    CHECK(res.argmin == 0);
  }
  SUBCASE("empty or unsorted grids rejected") {
    CHECK_THROWS_AS(sweep_r(budget, {}, pi / 2), std::invalid_argument);
    CHECK_THROWS_AS(sweep_r(budget, {0.2, 0.1}, pi / 2),
                    std::invalid_argument);
  }
}

TEST_CASE("frequency-dependent budget") {
  NoiseBudget budget;
  budget.bandwidth = 1.0;
  // N_cl(f) = 0.125 f / f0 with f0 = 100 Hz, tabulated at the ends
  budget.n_cl_table = {{0.0, 0.0}, {100.0, 0.125}};

  SUBCASE("piecewise-linear interpolation") {
    CHECK(budget.n_cl_at(50.0) == doctest::Approx(0.0625));
    CHECK(budget.n_cl_at(-10.0) == doctest::Approx(0.0));   // clamped
    CHECK(budget.n_cl_at(500.0) == doctest::Approx(0.125));  // clamped
  }
  SUBCASE("r*(f) increases with frequency") {
    std::vector<double> freqs;
    for (int i = 1; i <= 10; ++i) freqs.push_back(10.0 * i);
    const auto profile = optimal_r_profile(budget, freqs);
    double prev = -1.0;
    for (const auto& row : profile) {
      REQUIRE(row.is_feasible);
      CHECK(row.r_star > prev);
      prev = row.r_star;
    }
  }
  SUBCASE("infeasible bins are flagged, not clamped") {
    budget.n_cl_table = {{0.0, 0.0}, {100.0, 0.5}};
    const auto profile = optimal_r_profile(budget, {10.0, 90.0});
    CHECK(profile[0].is_feasible);
    CHECK_FALSE(profile[1].is_feasible);
    CHECK_FALSE(feasible(budget));
  }
  SUBCASE("flat optimal_r rejects tabulated budgets") {
    CHECK_THROWS_AS(optimal_r(budget), std::invalid_argument);
  }
  SUBCASE("table validation") {
    NoiseBudget bad;
    bad.n_cl_table = {{10.0, 0.1}, {5.0, 0.1}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    NoiseBudget neg;
    neg.n_cl_table = {{0.0, -0.1}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
  }
}

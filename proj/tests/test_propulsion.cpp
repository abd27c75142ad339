#include <doctest.h>

#include <cmath>
#include <random>

#include "g2u/errors.hpp"
#include "g2u/propulsion.hpp"
#include "test_support.hpp"

using namespace g2u;
using test::make_params;
using test::rel_err;

TEST_SUITE("propulsion") {

TEST_CASE("circular power") {
  const auto p = make_params();
  CHECK(rel_err(circular_power(100.0, 30.0, p), 163.2569) <= 1e-5);

  // centripetal term vanishes for huge radii
  CHECK(rel_err(circular_power(1e9, 30.0, p), straight_power(30.0, p)) <= 1e-9);

  // c2/V asymptote
  CHECK(circular_power(100.0, 1e-6, p) > 1e8);
}

TEST_CASE("optimal circular speed") {
  const auto p = make_params();
  CHECK(rel_err(optimal_circular_speed(100.0, p), 21.8861) <= 1e-5);
  CHECK(rel_err(optimal_circular_speed(1e9, p), 30.0) <= 1e-4);
  CHECK(optimal_circular_speed(50.0, p) < optimal_circular_speed(100.0, p));
  CHECK(optimal_circular_speed(100.0, p) < optimal_circular_speed(1000.0, p));
}

TEST_CASE("speed-optimal power beats every sampled speed") {
  const auto p = make_params();
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> log_r(std::log(1.0), std::log(1e5));
  std::uniform_real_distribution<double> speed(0.5, 200.0);
  for (int i = 0; i < 200; ++i) {
    const double r = std::exp(log_r(rng));
    const double v = speed(rng);
    CHECK(circular_power(r, optimal_circular_speed(r, p), p) <=
          circular_power(r, v, p) * (1.0 + 1e-14));
  }
}

TEST_CASE("minimum circular power: closed form, values, monotonicity") {
  const auto p = make_params();
  for (double r = 1.0; r <= 1e6; r *= 10.0) {
    CHECK(rel_err(min_circular_power(r, p),
                  circular_power(r, optimal_circular_speed(r, p), p)) <= 1e-12);
  }
  CHECK(rel_err(min_circular_power(100.0, p), 137.0731) <= 1e-5);
  CHECK(rel_err(min_circular_power(41.07, p), 200.0017) <= 1e-5);

  double prev = min_circular_power(1.0, p);
  for (double r = 2.0; r <= 1e6; r *= 2.0) {
    const double cur = min_circular_power(r, p);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("minimum radius") {
  auto p = make_params();
  CHECK(rel_err(min_radius(p), 0.7069665) <= 1e-6);
  CHECK(rel_err(min_circular_power(min_radius(p), p), p.uav_power_cap_w) <= 1e-9);

  p.uav_power_cap_w = 200.0;
  CHECK(rel_err(min_radius(p), 41.07075) <= 1e-6);
  CHECK(rel_err(min_circular_power(min_radius(p), p), 200.0) <= 1e-9);

  p.uav_power_cap_w = 100.0;  // below the level-flight minimum
  CHECK_THROWS_AS(min_radius(p), InfeasibleError);
}

TEST_CASE("straight power") {
  const auto p = make_params();
  CHECK(rel_err(straight_power(30.0, p), 100.002) <= 1e-6);
  const double v_opt = std::pow(p.c2 / p.c1, 0.25);
  CHECK(rel_err(v_opt, 39.48143) <= 1e-6);
  CHECK(rel_err(straight_power(v_opt, p), 113.9776) <= 1e-5);
}

TEST_CASE("straight leg energy") {
  const auto p = make_params();
  const double d = 2828.4271247461903;
  const double v_opt = std::pow(p.c2 / p.c1, 0.25);
  const double floor_j = 2.0 * d * std::sqrt(p.c1 * p.c2);
  CHECK(rel_err(straight_leg_energy(v_opt, d, p), floor_j) <= 1e-12);
  CHECK(rel_err(floor_j, 8165.292) <= 1e-6);

  // grid search cannot do better than the analytic minimizer
  for (double v = 5.0; v <= 200.0; v += 0.25)
    CHECK(straight_leg_energy(v, d, p) >= floor_j * (1.0 - 1e-14));

  CHECK(rel_err(straight_leg_energy(63.01, d, p), 1.20015e4) <= 1e-4);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> speed(1.0, 150.0);
  for (int i = 0; i < 100; ++i) {
    const double v = speed(rng);
    CHECK(rel_err(straight_leg_energy(v, d, p), d / v * straight_power(v, p)) <= 1e-13);
  }
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <random>

#include "g2u/channel.hpp"
#include "g2u/circular.hpp"
#include "g2u/errors.hpp"
#include "g2u/propulsion.hpp"
#include "test_support.hpp"

using namespace g2u;
using test::make_params;
using test::rel_err;

namespace {

// Every point this module emits must deliver the data target exactly.
void check_throughput(const CircularPoint& pt, const SystemParams& p) {
  const double bits = circular_throughput(p, pt.design.duration_s,
                                          pt.design.gt_power_w, pt.design.radius_m);
  CHECK(rel_err(bits, p.data_bits) <= 1e-6);
}

}  // namespace

TEST_SUITE("circular") {

TEST_CASE("radius from energy") {
  const auto quiet = make_params({.pc_w = 0.01, .sigma2_dbm = -110.0});
  const double r = radius_from_energy(2e4, 100.0, quiet);
  CHECK(rel_err(r, 41.07075) <= 1e-6);
  CHECK(rel_err(100.0 * min_circular_power(r, quiet), 2e4) <= 1e-9);

  // boundary: the whole cap spent -> minimum radius
  CHECK(rel_err(radius_from_energy(100.0 * quiet.uav_power_cap_w, 100.0, quiet),
                min_radius(quiet)) <= 1e-9);

  CHECK_THROWS_AS(radius_from_energy(100.0 * 99.0, 100.0, quiet), InfeasibleError);
  CHECK_THROWS_AS(radius_from_energy(100.0 * 1600.0, 100.0, quiet), InfeasibleError);
}

TEST_CASE("power from energy") {
  const auto quiet = make_params({.pc_w = 0.01, .sigma2_dbm = -110.0});
  const auto gp = power_from_energy(2e4, 100.0, quiet);
  CHECK(gp.within_cap);
  CHECK(rel_err(gp.watts, 7.362688e-4) <= 1e-6);
  CHECK(rel_err(circular_throughput(quiet, 100.0, gp.watts,
                                    radius_from_energy(2e4, 100.0, quiet)),
                quiet.data_bits) <= 1e-12);

  // long missions at a held power ratio need vanishing transmit power
  CHECK(power_from_energy(200.0 * 1e7, 1e7, quiet).watts < 1e-6);

  auto zero_data = quiet;
  zero_data.data_bits = 0.0;
  CHECK(power_from_energy(2e4, 100.0, zero_data).watts == 0.0);
}

TEST_CASE("terminal energy in closed form") {
  const auto quiet = make_params({.pc_w = 0.01, .sigma2_dbm = -110.0});
  CHECK(rel_err(gt_energy_given(2e4, 100.0, quiet), 1.073627) <= 1e-6);
  CHECK(rel_err(gt_energy_given(2e4, 100.0, quiet),
                100.0 * (power_from_energy(2e4, 100.0, quiet).watts +
                         quiet.circuit_power_w)) <= 1e-15);
  // more UAV energy at the same duration relieves the terminal
  CHECK(gt_energy_given(2.2e4, 100.0, quiet) < gt_energy_given(2e4, 100.0, quiet));
}

TEST_CASE("terminal-optimal extreme point") {
  const auto quiet = make_params({.sigma2_dbm = -110.0});
  const auto pt = gt_min_energy(quiet);
  CHECK(rel_err(pt.gt_energy_j, 3.60622) <= 1e-4);
  CHECK(rel_err(pt.uav_energy_j, 9.22131e4) <= 1e-4);
  CHECK(rel_err(pt.design.gt_power_w, 8.6611e-3) <= 1e-3);
  CHECK(rel_err(pt.design.duration_s, 61.4754) <= 1e-4);
  CHECK(pt.design.radius_m == min_radius(quiet));
  check_throughput(pt, quiet);

  // dense-grid oracle over the transmit power
  const double snr_per_watt =
      quiet.gamma0 / (quiet.altitude_m * quiet.altitude_m +
                      pt.design.radius_m * pt.design.radius_m);
  double grid_best = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    const double p1 = std::exp(std::log(1e-6) +
                               (std::log(0.5) - std::log(1e-6)) * i / 200000.0);
    const double rate = quiet.bandwidth_hz * std::log2(1.0 + snr_per_watt * p1);
    grid_best = std::min(grid_best,
                         quiet.data_bits * (p1 + quiet.circuit_power_w) / rate);
  }
  CHECK(rel_err(pt.gt_energy_j, grid_best) <= 1e-5);
  CHECK(pt.gt_energy_j <= grid_best * (1.0 + 1e-12));

  auto no_circuit = quiet;
  no_circuit.circuit_power_w = 0.0;
  CHECK_THROWS_AS(gt_min_energy(no_circuit), InfeasibleError);
}

TEST_CASE("uav-optimal extreme point") {
  const auto quiet = make_params({.pc_w = 0.01, .sigma2_dbm = -110.0});
  const auto pt = uav_min_energy(quiet);
  CHECK(pt.design.gt_power_w == quiet.gt_power_cap_w);
  CHECK(rel_err(pt.uav_energy_j, 5101.03) <= 1e-4);
  check_throughput(pt, quiet);

  // grid certificate: no sampled radius does better
  const double h_sq = quiet.altitude_m * quiet.altitude_m;
  const double rmin = min_radius(quiet);
  for (int i = 0; i <= 1000; ++i) {
    const double r = rmin * std::pow(1e6 / rmin, i / 1000.0);
    const double rate = quiet.bandwidth_hz *
        std::log2(1.0 + quiet.gt_power_cap_w * quiet.gamma0 / (h_sq + r * r));
    const double e2 = quiet.data_bits * min_circular_power(r, quiet) / rate;
    CHECK(pt.uav_energy_j <= e2 * (1.0 + 1e-9));
  }

  // boundary evaluation: at the minimum radius the objective is pinned by the cap
  const double rate_at_rmin = quiet.bandwidth_hz *
      std::log2(1.0 + quiet.gt_power_cap_w * quiet.gamma0 / (h_sq + rmin * rmin));
  const double obj_rmin = quiet.data_bits * min_circular_power(rmin, quiet) / rate_at_rmin;
  CHECK(pt.uav_energy_j <= obj_rmin);
}

TEST_CASE("frontier point: worked value and consistency with the extremes") {
  const auto quiet = make_params({.pc_w = 0.01, .sigma2_dbm = -110.0});
  const auto pt = pareto_point(2e4, quiet);
  CHECK(pt.gt_energy_j <= 1.0736269 * (1.0 + 1e-7));  // beats the 100 s design
  CHECK(rel_err(pt.uav_energy_j, 2e4) <= 1e-12);
  check_throughput(pt, quiet);

  // minimization certificate against random admissible durations
  std::mt19937 rng(42);
  const double t_lo = 2e4 / quiet.uav_power_cap_w;
  const double t_hi = 2e4 / min_circular_power(1e6, quiet);
  std::uniform_real_distribution<double> dur(t_lo, t_hi);
  for (int i = 0; i < 64; ++i) {
    const double t = dur(rng);
    const auto gp = power_from_energy(2e4, t, quiet);
    if (!gp.within_cap) continue;
    CHECK(pt.gt_energy_j <= gt_energy_given(2e4, t, quiet) * (1.0 + 1e-10));
  }

  const auto gt = gt_min_energy(quiet);
  const auto uav = uav_min_energy(quiet);
  CHECK(rel_err(pareto_point(gt.uav_energy_j, quiet).gt_energy_j, gt.gt_energy_j) <= 1e-4);
  CHECK(rel_err(pareto_point(uav.uav_energy_j, quiet).gt_energy_j, uav.gt_energy_j) <= 1e-4);
}

TEST_CASE("frontier sweep") {
  const auto params = make_params({.pc_w = 0.01});  // shipped-config calibration
  const auto curve = pareto_curve(params, 16);
  REQUIRE(curve.points.size() == 16);
  CHECK(curve.warnings.empty());
  for (size_t i = 0; i + 1 < curve.points.size(); ++i) {
    CHECK(curve.points[i].uav_energy_j < curve.points[i + 1].uav_energy_j);
    CHECK(curve.points[i + 1].gt_energy_j <= curve.points[i].gt_energy_j);
  }
  for (const auto& pt : curve.points) check_throughput(pt, params);

  const auto two = pareto_curve(params, 2);
  REQUIRE(two.points.size() == 2);
  CHECK(rel_err(two.points.front().gt_energy_j, uav_min_energy(params).gt_energy_j) <= 1e-4);
  CHECK(rel_err(two.points.back().gt_energy_j, gt_min_energy(params).gt_energy_j) <= 1e-4);

  // a lighter circuit keeps the whole frontier at or below the heavier one
  const auto heavy = make_params({.pc_w = 0.05});
  for (size_t i = 0; i < curve.points.size(); ++i) {
    const double e2 = curve.points[i].uav_energy_j;
    const auto low = pareto_point(e2, params);
    const auto high = pareto_point(e2, heavy);
    CHECK(low.gt_energy_j <= high.gt_energy_j * (1.0 + 1e-12));
  }
}

}  // TEST_SUITE

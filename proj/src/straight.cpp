#include "g2u/straight.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "g2u/channel.hpp"
#include "g2u/errors.hpp"
#include "g2u/propulsion.hpp"
#include "g2u/scalar_opt.hpp"

namespace g2u {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Speed implied by the throughput equality at transmit power p1.
double implied_speed(double p1, const StraightGeometry& geom, const SystemParams& params) {
  return params.bandwidth_hz * leg_log_rate(p1, geom, params) /
         (params.data_bits * kLn2);
}

// Shared scan for both extreme points: minimize `objective(p1, V(p1))` over
// transmit powers whose implied speed respects the propulsion cap.
template <class Objective>
StraightPoint extreme_point(const StraightGeometry& geom, const SystemParams& params,
                            Objective&& objective) {
  const double inf = std::numeric_limits<double>::infinity();
  const auto wrapped = [&](double log_p1) {
    const double p1 = std::exp(log_p1);
    const double v = implied_speed(p1, geom, params);
    if (!(v > 0.0) || straight_power(v, params) > params.uav_power_cap_w) return inf;
    return objective(p1, v);
  };

  MinResult res;
  try {
    res = minimize_1d(wrapped, SearchSpec{std::log(1e-12),
                                          std::log(params.gt_power_cap_w), 512,
                                          1e-12, 0.0, 300});
  } catch (const InfeasibleError&) {
    throw InfeasibleError(
        "straight extreme point: no transmit power satisfies both power caps");
  }

  const double p1 = std::exp(res.x);
  const double v = implied_speed(p1, geom, params);
  StraightPoint pt;
  pt.design = {v, p1,
               v >= std::pow(params.c2 / params.c1, 0.25) ? SpeedBranch::fast
                                                          : SpeedBranch::slow};
  pt.gt_energy_j = geom.length_m / v * (p1 + params.circuit_power_w);
  pt.uav_energy_j = straight_leg_energy(v, geom.length_m, params);
  return pt;
}

}  // namespace

const char* to_string(SpeedBranch b) {
  return b == SpeedBranch::fast ? "fast" : "slow";
}

StraightPoint gt_min_energy(const StraightGeometry& geom, const SystemParams& params) {
  return extreme_point(geom, params, [&](double p1, double v) {
    return geom.length_m / v * (p1 + params.circuit_power_w);
  });
}

StraightPoint uav_min_energy(const StraightGeometry& geom, const SystemParams& params) {
  return extreme_point(geom, params, [&](double, double v) {
    return straight_leg_energy(v, geom.length_m, params);
  });
}

SpeedRoots speeds_from_energy(double uav_energy_j, const StraightGeometry& geom,
                              const SystemParams& params) {
  const double d = geom.length_m;
  const double floor_j = 2.0 * d * std::sqrt(params.c1 * params.c2);
  if (uav_energy_j < floor_j * (1.0 - 1e-12))
    throw InfeasibleError("speeds_from_energy: below the minimum leg energy 2 D sqrt(c1 c2)");

  const double disc =
      std::max(0.0, uav_energy_j * uav_energy_j - 4.0 * params.c1 * params.c2 * d * d);
  const double s = std::sqrt(disc);
  const double fast_sq = (uav_energy_j + s) / (2.0 * d * params.c1);
  // Slow root via the root product c2/c1; the direct difference cancels badly
  // far above the energy floor.
  const double slow_sq = 2.0 * params.c2 * d / (uav_energy_j + s);
  return {std::sqrt(fast_sq), std::sqrt(slow_sq)};
}

StraightPoint pareto_point(double uav_energy_j, const StraightGeometry& geom,
                           const SystemParams& params) {
  const SpeedRoots roots = speeds_from_energy(uav_energy_j, geom, params);

  struct Candidate {
    double gt_energy;
    double p1;
    double v;
    SpeedBranch branch;
    bool ok = false;
  };
  Candidate cand[2];
  const SpeedBranch branches[2] = {SpeedBranch::fast, SpeedBranch::slow};
  const double speeds[2] = {roots.fast_mps, roots.slow_mps};

  for (int k = 0; k < 2; ++k) {
    const double v = speeds[k];
    if (straight_power(v, params) > params.uav_power_cap_w) continue;
    double p1;
    try {
      p1 = leg_log_rate_inverse(params.data_bits * v * kLn2 / params.bandwidth_hz,
                                geom, params);
    } catch (const InfeasibleError&) {
      continue;
    }
    if (p1 > params.gt_power_cap_w) continue;
    cand[k] = {geom.length_m / v * (p1 + params.circuit_power_w), p1, v, branches[k], true};
  }

  const Candidate* pick = nullptr;
  if (cand[0].ok && cand[1].ok) {
    const double tie = 1e-12 * std::fabs(cand[0].gt_energy);
    if (std::fabs(cand[0].gt_energy - cand[1].gt_energy) < tie)
      pick = &cand[1];  // tie: the slow root needs less peak propulsion power
    else
      pick = cand[0].gt_energy < cand[1].gt_energy ? &cand[0] : &cand[1];
  } else if (cand[0].ok) {
    pick = &cand[0];
  } else if (cand[1].ok) {
    pick = &cand[1];
  } else {
    throw InfeasibleError("pareto_point: both speed roots violate a power cap");
  }

  StraightPoint pt;
  pt.design = {pick->v, pick->p1, pick->branch};
  pt.gt_energy_j = pick->gt_energy;
  pt.uav_energy_j = uav_energy_j;
  return pt;
}

StraightCurve pareto_curve(const StraightGeometry& geom, const SystemParams& params,
                           int n_points) {
  if (n_points < 2) throw InfeasibleError("pareto_curve: need at least 2 points");

  const StraightPoint lo = uav_min_energy(geom, params);
  const StraightPoint hi = gt_min_energy(geom, params);

  StraightCurve curve;
  curve.geometry = geom;
  curve.params = params;
  curve.points.reserve(static_cast<size_t>(n_points));
  const double ratio = hi.uav_energy_j / lo.uav_energy_j;
  for (int i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / (n_points - 1);
    const double e2 = (i == n_points - 1) ? hi.uav_energy_j
                                          : lo.uav_energy_j * std::pow(ratio, frac);
    try {
      curve.points.push_back(pareto_point(e2, geom, params));
    } catch (const InfeasibleError& err) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "E2=%.6g J skipped: ", e2);
      curve.warnings.push_back(std::string(buf) + err.what());
    }
  }
  return curve;
}

}  // namespace g2u

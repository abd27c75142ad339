#include "g2u/circular.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "g2u/errors.hpp"
#include "g2u/propulsion.hpp"
#include "g2u/scalar_opt.hpp"

namespace g2u {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Beyond this radius the circle is numerically level flight; the duration
// window below excludes it to keep the r(E2,T) inversion away from its pole.
constexpr double kRadiusCeiling = 1e6;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

}  // namespace

double radius_from_energy(double uav_energy_j, double duration_s,
                          const SystemParams& params) {
  const double power = uav_energy_j / duration_s;
  if (!(power <= params.uav_power_cap_w * (1.0 + 1e-12)))
    throw InfeasibleError("radius_from_energy: implied propulsion power exceeds the UAV cap");
  static const double k = std::pow(3.0, -0.75) + std::pow(3.0, 0.25);
  const double q = std::pow(power / (k * std::pow(params.c2, 0.75)), 4.0);
  const double den = q - params.c1;
  if (!(den > 0.0))
    throw InfeasibleError(
        "radius_from_energy: implied propulsion power is at or below the level-flight minimum");
  return std::sqrt(params.c2 / den) / params.gravity_mps2;
}

GtPower power_from_energy(double uav_energy_j, double duration_s,
                          const SystemParams& params) {
  const double r = radius_from_energy(uav_energy_j, duration_s, params);
  const double dist_sq = params.altitude_m * params.altitude_m + r * r;
  const double growth =
      std::expm1(kLn2 * params.data_bits / (params.bandwidth_hz * duration_s));
  const double watts = dist_sq * growth / params.gamma0;
  return {watts, watts <= params.gt_power_cap_w};
}

double gt_energy_given(double uav_energy_j, double duration_s,
                       const SystemParams& params) {
  return duration_s *
         (power_from_energy(uav_energy_j, duration_s, params).watts +
          params.circuit_power_w);
}

CircularPoint gt_min_energy(const SystemParams& params) {
  if (params.circuit_power_w == 0.0)
    throw InfeasibleError(
        "gt_min_energy: with zero circuit power the optimum degenerates to vanishing "
        "transmit power and unbounded mission time");

  const double rmin = min_radius(params);
  const double snr_per_watt =
      params.gamma0 / (params.altitude_m * params.altitude_m + rmin * rmin);

  // The energy-per-bit ratio (p1 + Pc)/log2(1 + c p1) is quasiconvex; the sign
  // of its derivative is the sign of the strictly increasing function below,
  // so a stationary point is found by plain bisection.
  const auto slope_sign = [&](double p1) {
    const double w = 1.0 + snr_per_watt * p1;
    return log2_1p(snr_per_watt * p1) * w * kLn2 -
           (p1 + params.circuit_power_w) * snr_per_watt;
  };

  double p1;
  if (slope_sign(params.gt_power_cap_w) <= 0.0) {
    p1 = params.gt_power_cap_w;  // still descending at the cap
  } else {
    double lo = 0.0, hi = params.gt_power_cap_w;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (slope_sign(mid) < 0.0 ? lo : hi) = mid;
    }
    p1 = 0.5 * (lo + hi);
  }

  const double rate = params.bandwidth_hz * log2_1p(snr_per_watt * p1);
  const double duration = params.data_bits / rate;
  CircularPoint pt;
  pt.design = {duration, rmin, optimal_circular_speed(rmin, params), p1};
  pt.gt_energy_j = duration * (p1 + params.circuit_power_w);
  pt.uav_energy_j = duration * min_circular_power(rmin, params);
  return pt;
}

CircularPoint uav_min_energy(const SystemParams& params) {
  const double rmin = min_radius(params);
  const double h_sq = params.altitude_m * params.altitude_m;
  const double p1 = params.gt_power_cap_w;

  const auto energy_at = [&](double log_r) {
    const double r = std::exp(log_r);
    const double rate = params.bandwidth_hz * log2_1p(params.gamma0 * p1 / (h_sq + r * r));
    return params.data_bits * min_circular_power(r, params) / rate;
  };
  const auto res = minimize_1d(
      energy_at,
      SearchSpec{std::log(rmin), std::log(kRadiusCeiling), 512, 1e-12, 0.0, 300});

  const double r = std::exp(res.x);
  const double rate = params.bandwidth_hz * log2_1p(params.gamma0 * p1 / (h_sq + r * r));
  const double duration = params.data_bits / rate;
  CircularPoint pt;
  pt.design = {duration, r, optimal_circular_speed(r, params), p1};
  pt.gt_energy_j = duration * (p1 + params.circuit_power_w);
  pt.uav_energy_j = duration * min_circular_power(r, params);
  return pt;
}

CircularPoint pareto_point(double uav_energy_j, const SystemParams& params) {
  if (!(uav_energy_j > 0.0))
    throw InfeasibleError("pareto_point: UAV energy must be positive");

  const double t_lo = uav_energy_j / params.uav_power_cap_w;
  const double t_hi = uav_energy_j / min_circular_power(kRadiusCeiling, params);
  if (!(t_lo < t_hi))
    throw InfeasibleError("pareto_point: empty duration window for this UAV energy");

  const double inf = std::numeric_limits<double>::infinity();
  const double cap = params.gt_power_cap_w * (1.0 + 1e-9);
  const auto power_at = [&](double duration) {
    try {
      return power_from_energy(uav_energy_j, duration, params).watts;
    } catch (const InfeasibleError&) {
      return inf;
    }
  };

  // The transmit-power cap carves a sub-interval out of the duration window;
  // at the UAV-optimal extreme it shrinks to a single point, which a plain
  // grid scan misses. Find the power minimum first, then bisect the cap
  // crossings on each side.
  const MinResult pmin =
      minimize_1d(power_at, SearchSpec{t_lo, t_hi, 256, 1e-13, 0.0, 300});
  if (!(pmin.f <= cap))
    throw InfeasibleError(
        "pareto_point: no mission duration keeps the transmit power under the cap "
        "at this UAV energy");

  const auto crossing = [&](double feasible_t, double infeasible_t) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (feasible_t + infeasible_t);
      if (mid == feasible_t || mid == infeasible_t) break;
      (power_at(mid) <= cap ? feasible_t : infeasible_t) = mid;
    }
    return feasible_t;
  };
  const double t_a = power_at(t_lo) <= cap ? t_lo : crossing(pmin.x, t_lo);
  const double t_b = power_at(t_hi) <= cap ? t_hi : crossing(pmin.x, t_hi);

  const auto objective = [&](double duration) {
    const double watts = power_at(duration);
    if (!(watts <= cap)) return inf;
    return duration * (watts + params.circuit_power_w);
  };

  double best_t;
  if (t_b - t_a <= 1e-11 * t_b) {
    best_t = 0.5 * (t_a + t_b);
  } else {
    best_t = minimize_1d(objective, SearchSpec{t_a, t_b, 256, 1e-12, 0.0, 300}).x;
  }

  const double duration = best_t;
  const double r = radius_from_energy(uav_energy_j, duration, params);
  const GtPower gp = power_from_energy(uav_energy_j, duration, params);
  CircularPoint pt;
  pt.design = {duration, r, optimal_circular_speed(r, params), gp.watts};
  pt.gt_energy_j = duration * (gp.watts + params.circuit_power_w);
  pt.uav_energy_j = uav_energy_j;
  return pt;
}

CircularCurve pareto_curve(const SystemParams& params, int n_points) {
  if (n_points < 2) throw InfeasibleError("pareto_curve: need at least 2 points");

  const CircularPoint lo = uav_min_energy(params);
  const CircularPoint hi = gt_min_energy(params);

  CircularCurve curve;
  curve.params = params;
  curve.points.reserve(static_cast<size_t>(n_points));
  const double ratio = hi.uav_energy_j / lo.uav_energy_j;
  for (int i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / (n_points - 1);
    const double e2 = (i == n_points - 1) ? hi.uav_energy_j
                                          : lo.uav_energy_j * std::pow(ratio, frac);
    try {
      curve.points.push_back(pareto_point(e2, params));
    } catch (const InfeasibleError& err) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "E2=%.6g J skipped: ", e2);
      curve.warnings.push_back(std::string(buf) + err.what());
    }
  }
  return curve;
}

}  // namespace g2u

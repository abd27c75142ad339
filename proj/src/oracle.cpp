#include "g2u/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "g2u/channel.hpp"
#include "g2u/errors.hpp"
#include "g2u/propulsion.hpp"

namespace g2u {

namespace {

constexpr double kLn2 = 0.6931471805599453;

struct SimpsonState {
  const StraightGeometry* geom;
  RateContext ctx;
  double speed;
};

double integrand(const SimpsonState& st, double t) {
  const double z = st.geom->start_along_m + st.speed * t;
  return spectral_rate(st.ctx, z * z);
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const SimpsonState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  if (depth <= 0)
    throw NumericError("quad_straight_throughput: recursion depth exhausted "
                       "before reaching the tolerance");
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = integrand(st, lm);
  const double frm = integrand(st, rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double err = left + right - whole;
  if (std::fabs(err) <= 15.0 * tol) return left + right + err / 15.0;
  return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double quad_straight_throughput(double gt_power_w, double speed_mps,
                                const StraightGeometry& geom,
                                const SystemParams& params, const QuadSpec& spec) {
  if (!(speed_mps > 0.0))
    throw InfeasibleError("quad_straight_throughput: speed must be positive");
  if (spec.max_depth < 10 || !(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw NumericError("quad_straight_throughput: invalid QuadSpec");
  if (gt_power_w == 0.0) return 0.0;

  SimpsonState st{&geom,
                  RateContext{gt_power_w, params.gamma0, params.bandwidth_hz,
                              geom.eff_height_sq_m2},
                  speed_mps};
  const double duration = geom.length_m / speed_mps;

  // A coarse uniform pass sizes the tolerance; then each panel is refined
  // adaptively. The rate peaks near the closest approach, which the initial
  // panels may straddle arbitrarily.
  const int panels = 16;
  const double h = duration / panels;
  double coarse = 0.0;
  std::vector<double> f(panels * 2 + 1);
  for (int i = 0; i <= panels * 2; ++i) f[i] = integrand(st, 0.5 * h * i);
  for (int i = 0; i < panels; ++i)
    coarse += simpson(h * i, h * (i + 1), f[2 * i], f[2 * i + 1], f[2 * i + 2]);

  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::fabs(coarse)) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = h * i;
    const double b = h * (i + 1);
    const double whole = simpson(a, b, f[2 * i], f[2 * i + 1], f[2 * i + 2]);
    total += adapt(st, a, b, f[2 * i], f[2 * i + 1], f[2 * i + 2], whole, tol,
                   spec.max_depth);
  }
  return total;
}

double brute_pareto_circular(double uav_energy_j, const SystemParams& params,
                             int grid_n) {
  if (grid_n < 256) throw NumericError("brute_pareto_circular: grid_n must be >= 256");

  const double rmin = min_radius(params);
  const double t_lo = uav_energy_j / params.uav_power_cap_w;
  const double t_hi = uav_energy_j / min_circular_power(1e6, params);
  if (!(t_lo < t_hi))
    throw InfeasibleError("brute_pareto_circular: empty duration window");

  const double h_sq = params.altitude_m * params.altitude_m;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i) {
    const double duration = t_lo + (t_hi - t_lo) * i / (grid_n - 1);
    const double power = uav_energy_j / duration;
    if (power > params.uav_power_cap_w * (1 + 1e-12)) continue;

    // Radius by bisection on the monotone-decreasing speed-optimal power.
    double r_a = rmin, r_b = 1e6;
    if (min_circular_power(r_a, params) < power) continue;
    if (min_circular_power(r_b, params) > power) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (r_a + r_b);
      if (mid == r_a || mid == r_b) break;
      (min_circular_power(mid, params) > power ? r_a : r_b) = mid;
    }
    const double r = 0.5 * (r_a + r_b);

    // Transmit power by bisection on the rate; skip durations that cannot
    // deliver the data even at the cap.
    const double dist_sq = r * r;
    const RateContext cap_ctx{params.gt_power_cap_w, params.gamma0,
                              params.bandwidth_hz, h_sq};
    if (duration * spectral_rate(cap_ctx, dist_sq) < params.data_bits) continue;
    double p_a = 0.0, p_b = params.gt_power_cap_w;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (p_a + p_b);
      if (mid == p_a || mid == p_b) break;
      const RateContext ctx{mid, params.gamma0, params.bandwidth_hz, h_sq};
      (duration * spectral_rate(ctx, dist_sq) < params.data_bits ? p_a : p_b) = mid;
    }
    const double p1 = 0.5 * (p_a + p_b);
    best = std::min(best, duration * (p1 + params.circuit_power_w));
  }
  if (!std::isfinite(best))
    throw InfeasibleError("brute_pareto_circular: no feasible duration on the grid");
  return best;
}

double brute_pareto_straight(double uav_energy_j, const StraightGeometry& geom,
                             const SystemParams& params, int grid_n) {
  if (grid_n < 256) throw NumericError("brute_pareto_straight: grid_n must be >= 256");

  const double d = geom.length_m;
  const double floor_j = 2.0 * d * std::sqrt(params.c1 * params.c2);
  if (uav_energy_j < floor_j * (1.0 - 1e-12))
    throw InfeasibleError("brute_pareto_straight: below the minimum leg energy");

  // Locate the energy matches in each speed regime by bisection on the leg
  // energy (decreasing below the energy-optimal speed, increasing above), then
  // sample each neighborhood densely. Only speeds inside the energy band
  // contribute.
  const double v_opt = std::pow(params.c2 / params.c1, 0.25);
  const auto energy_at = [&](double v) { return straight_leg_energy(v, d, params); };

  std::vector<double> centers;
  if (uav_energy_j <= energy_at(v_opt)) {
    centers.push_back(v_opt);
  } else {
    double lo = v_opt, hi = v_opt;
    while (energy_at(hi) < uav_energy_j) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (energy_at(mid) < uav_energy_j ? lo : hi) = mid;
    }
    centers.push_back(0.5 * (lo + hi));  // fast regime
    lo = v_opt / 2;
    while (energy_at(lo) < uav_energy_j) lo /= 2.0;
    hi = v_opt;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (energy_at(mid) > uav_energy_j ? lo : hi) = mid;
    }
    centers.push_back(0.5 * (lo + hi));  // slow regime
  }

  const double band = 1e-4;  // relative leg-energy mismatch kept
  double best = std::numeric_limits<double>::infinity();
  const int per_center = grid_n / static_cast<int>(centers.size());
  for (const double vc : centers) {
    for (int i = 0; i < per_center; ++i) {
      const double v = vc * (1.0 + 2e-4 * (2.0 * i / (per_center - 1) - 1.0));
      if (std::fabs(energy_at(v) - uav_energy_j) > band * uav_energy_j) continue;
      if (straight_power(v, params) > params.uav_power_cap_w) continue;
      double p1;
      try {
        p1 = leg_log_rate_inverse(params.data_bits * v * kLn2 / params.bandwidth_hz,
                                  geom, params);
      } catch (const InfeasibleError&) {
        continue;
      }
      if (p1 > params.gt_power_cap_w) continue;
      best = std::min(best, d / v * (p1 + params.circuit_power_w));
    }
  }
  if (!std::isfinite(best))
    throw InfeasibleError("brute_pareto_straight: no feasible speed in the energy band");
  return best;
}

double fd_check_primitive(const SystemParams& params, const StraightGeometry& geom,
                          int samples) {
  if (samples < 100) throw NumericError("fd_check_primitive: samples must be >= 100");

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> along(geom.start_along_m,
                                               geom.start_along_m + geom.length_m);
  std::uniform_real_distribution<double> log_power(std::log(1e-5),
                                                   std::log(params.gt_power_cap_w));

  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double z = along(rng);
    const double p1 = std::exp(log_power(rng));
    const double h = 1e-3 * std::max(1.0, std::fabs(z));
    const double fd = (log_rate_primitive(z + h, p1, params.gamma0, geom.eff_height_sq_m2) -
                       log_rate_primitive(z - h, p1, params.gamma0, geom.eff_height_sq_m2)) /
                      (2.0 * h);
    const double exact =
        std::log1p(p1 * params.gamma0 / (geom.eff_height_sq_m2 + z * z));
    worst = std::max(worst, std::fabs(fd - exact) / std::fabs(exact));
  }
  return worst;
}

}  // namespace g2u

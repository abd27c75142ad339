#include "g2u/channel.hpp"

#include <cmath>

#include "g2u/errors.hpp"
#include "g2u/scalar_opt.hpp"

namespace g2u {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

double channel_gain(double horiz_dist_sq_m2, double altitude_m, double beta0) {
  return beta0 / (altitude_m * altitude_m + horiz_dist_sq_m2);
}

double spectral_rate(const RateContext& ctx, double horiz_dist_sq_m2) {
  const double snr =
      ctx.gt_power_w * ctx.gamma0 / (ctx.eff_height_sq_m2 + horiz_dist_sq_m2);
  return ctx.bandwidth_hz * std::log1p(snr) / kLn2;
}

double circular_throughput(const SystemParams& params, double duration_s,
                           double gt_power_w, double radius_m) {
  if (radius_m < 0.0)
    throw InfeasibleError("circular_throughput: radius must be nonnegative");
  const RateContext ctx{gt_power_w, params.gamma0, params.bandwidth_hz,
                        params.altitude_m * params.altitude_m};
  return duration_s * spectral_rate(ctx, radius_m * radius_m);
}

double log_rate_primitive(double along_m, double gt_power_w, double gamma0,
                          double eff_height_sq_m2) {
  const double a = gt_power_w * gamma0;
  const double h = std::sqrt(eff_height_sq_m2);
  const double s = std::sqrt(eff_height_sq_m2 + a);
  const double z = along_m;
  return z * std::log1p(a / (eff_height_sq_m2 + z * z)) -
         2.0 * h * std::atan(z / h) + 2.0 * s * std::atan(z / s);
}

double leg_log_rate(double gt_power_w, const StraightGeometry& geom,
                    const SystemParams& params) {
  const double z0 = geom.start_along_m;
  const double z1 = geom.start_along_m + geom.length_m;
  return log_rate_primitive(z1, gt_power_w, params.gamma0, geom.eff_height_sq_m2) -
         log_rate_primitive(z0, gt_power_w, params.gamma0, geom.eff_height_sq_m2);
}

double leg_log_rate_inverse(double target_m, const StraightGeometry& geom,
                            const SystemParams& params) {
  if (target_m < 0.0)
    throw InfeasibleError("leg_log_rate_inverse: target must be nonnegative");
  if (target_m == 0.0) return 0.0;

  constexpr double kPowerCeiling = 1e6;  // W
  double hi = 1e-9;
  while (leg_log_rate(hi, geom, params) < target_m) {
    hi *= 2.0;
    if (hi > kPowerCeiling)
      throw InfeasibleError("leg_log_rate_inverse: target not reachable below 1e6 W");
  }
  const auto g = [&](double p1) { return leg_log_rate(p1, geom, params); };
  return bisect_monotone(g, target_m, SearchSpec{0.0, hi, 8, 1e-12, 0.0, 200});
}

double straight_throughput(double gt_power_w, double speed_mps,
                           const StraightGeometry& geom, const SystemParams& params) {
  if (!(speed_mps > 0.0))
    throw InfeasibleError("straight_throughput: speed must be positive");
  return params.bandwidth_hz * leg_log_rate(gt_power_w, geom, params) /
         (speed_mps * kLn2);
}

}  // namespace g2u

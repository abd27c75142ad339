#include "g2u/propulsion.hpp"

#include <cmath>

#include "g2u/errors.hpp"

namespace g2u {

namespace {

// c1 + c2/(g^2 r^2): the effective cubic-drag coefficient on a circle.
double circ_coeff(double r, const SystemParams& p) {
  const double gr = p.gravity_mps2 * r;
  return p.c1 + p.c2 / (gr * gr);
}

double level_coeff() {
  static const double k = std::pow(3.0, -0.75) + std::pow(3.0, 0.25);
  return k;
}

}  // namespace

double circular_power(double radius_m, double speed_mps, const SystemParams& params) {
  const double a = circ_coeff(radius_m, params);
  return a * speed_mps * speed_mps * speed_mps + params.c2 / speed_mps;
}

double optimal_circular_speed(double radius_m, const SystemParams& params) {
  return std::pow(params.c2 / (3.0 * circ_coeff(radius_m, params)), 0.25);
}

double min_circular_power(double radius_m, const SystemParams& params) {
  return level_coeff() * std::pow(params.c2, 0.75) *
         std::pow(circ_coeff(radius_m, params), 0.25);
}

double min_radius(const SystemParams& params) {
  // Invert min_circular_power at the cap. The quotient is formed first and c1
  // subtracted once, so the difference is not ground through intermediate
  // rescalings when the cap sits just above the level-flight minimum.
  const double q = std::pow(
      params.uav_power_cap_w / (level_coeff() * std::pow(params.c2, 0.75)), 4.0);
  const double den = q - params.c1;
  if (!(den > 0.0))
    throw InfeasibleError("UAV power cap is at or below the level-flight minimum; "
                          "no circle radius is feasible");
  return std::sqrt(params.c2 / den) / params.gravity_mps2;
}

double straight_power(double speed_mps, const SystemParams& params) {
  return params.c1 * speed_mps * speed_mps * speed_mps + params.c2 / speed_mps;
}

double straight_leg_energy(double speed_mps, double leg_length_m,
                           const SystemParams& params) {
  const double v2 = speed_mps * speed_mps;
  return leg_length_m * (params.c1 * v2 + params.c2 / v2);
}

}  // namespace g2u

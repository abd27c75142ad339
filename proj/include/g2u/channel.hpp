#pragma once

#include "g2u/geometry.hpp"
#include "g2u/params.hpp"

namespace g2u {

// Line-of-sight channel with free-space path loss, plus the closed-form
// throughput integrals for both trajectory families.

// beta0 / (H^2 + horizontal distance^2).
double channel_gain(double horiz_dist_sq_m2, double altitude_m, double beta0);

// Everything the instantaneous rate depends on besides position.
struct RateContext {
  double gt_power_w;
  double gamma0;
  double bandwidth_hz;
  double eff_height_sq_m2;  // H^2 for circular flight, the leg constant otherwise
};

// B log2(1 + p1 gamma0 / (eff_height^2 + d^2)), bits/s.
double spectral_rate(const RateContext& ctx, double horiz_dist_sq_m2);

// Bits delivered over a mission of the given duration on a circle of radius
// r centered above the terminal. Rejects negative radii.
double circular_throughput(const SystemParams& params, double duration_s,
                           double gt_power_w, double radius_m);

// Antiderivative F of z -> ln(1 + p1 gamma0 / (eff_height^2 + z^2)), odd in z:
//   z ln(1 + p1 g0/(h^2+z^2)) - 2 h atan(z/h) + 2 s atan(z/s),  s^2 = h^2 + p1 g0.
double log_rate_primitive(double along_m, double gt_power_w, double gamma0,
                          double eff_height_sq_m2);

// Integral of ln(1 + SNR(z)) over the leg: F at the far end minus F at the
// start. Strictly increasing in the transmit power, zero at zero power.
double leg_log_rate(double gt_power_w, const StraightGeometry& geom,
                    const SystemParams& params);

// Transmit power reaching a given leg_log_rate value, by bracketed bisection
// on the monotone integral (relative tolerance 1e-10). Throws InfeasibleError
// when the target needs more than 1e6 W.
double leg_log_rate_inverse(double target_m, const StraightGeometry& geom,
                            const SystemParams& params);

// Bits delivered over the whole leg at constant speed: B * leg_log_rate / (V ln 2).
double straight_throughput(double gt_power_w, double speed_mps,
                           const StraightGeometry& geom, const SystemParams& params);

}  // namespace g2u

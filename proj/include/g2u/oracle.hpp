#pragma once

#include "g2u/geometry.hpp"
#include "g2u/params.hpp"

namespace g2u {

// Independent numerical validators for the closed forms. None of these call
// the closed-form throughput, the antiderivative-based leg integral inverse
// chain under test, or the frontier solvers; they are built from
// spectral_rate, the propulsion primitives, and leg_log_rate_inverse only.

struct QuadSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 48;
};

// Adaptive Simpson quadrature of the instantaneous rate along the leg,
// bits. Throws NumericError when max_depth is exhausted before the tolerance
// is met.
double quad_straight_throughput(double gt_power_w, double speed_mps,
                                const StraightGeometry& geom,
                                const SystemParams& params, const QuadSpec& spec);

// Brute-force frontier value at fixed UAV energy, circular flight: a uniform
// grid of grid_n durations; per duration, the radius is recovered by bisecting
// the monotone speed-optimal power and the transmit power by bisecting the
// rate, never through the closed-form inversions. Returns the minimal
// terminal energy. grid_n >= 256.
double brute_pareto_circular(double uav_energy_j, const SystemParams& params,
                             int grid_n);

// Brute-force frontier value, straight flight: a speed grid spanning both
// speed regimes refined around the energy matches, keeping speeds whose leg
// energy is within 0.01% of the target, transmit power from
// leg_log_rate_inverse, power caps enforced. grid_n >= 256.
double brute_pareto_straight(double uav_energy_j, const StraightGeometry& geom,
                             const SystemParams& params, int grid_n);

// Max relative deviation between a central difference of log_rate_primitive
// and its integrand over `samples` random (position, power) pairs drawn along
// the leg (fixed seed, step 1e-3 * max(1, |z|)). samples >= 100.
double fd_check_primitive(const SystemParams& params, const StraightGeometry& geom,
                          int samples);

}  // namespace g2u

#pragma once

#include <string>
#include <vector>

#include "g2u/params.hpp"

namespace g2u {

// One circular-flight operating point. Designs produced by this module always
// satisfy: radius >= min_radius, transmit power under the cap, speed equal to
// the power-optimal speed for the radius, and throughput equal to the data
// target (throughput slack never survives at the energy frontier: shrinking
// the mission time would lower both energies).
struct CircularDesign {
  double duration_s;
  double radius_m;
  double speed_mps;
  double gt_power_w;
};

struct CircularPoint {
  double gt_energy_j;   // duration * (transmit + circuit power)
  double uav_energy_j;  // duration * speed-optimal propulsion power
  CircularDesign design;
};

// Frontier points ordered by ascending UAV energy; gt_energy is non-increasing
// along the list. Grid values that turned out infeasible are reported in
// warnings rather than silently dropped.
struct CircularCurve {
  std::vector<CircularPoint> points;
  std::vector<std::string> warnings;
  SystemParams params;
};

// Terminal-optimal extreme: hover circle at the minimum radius, transmit power
// from the stationarity condition of the energy-per-bit ratio (bisection on
// its sign). Throws InfeasibleError when circuit power is zero - the optimum
// then degenerates to vanishing power and unbounded mission time.
CircularPoint gt_min_energy(const SystemParams& params);

// UAV-optimal extreme: transmit at the power cap, radius from a log-grid scan
// with golden-section refinement.
CircularPoint uav_min_energy(const SystemParams& params);

// Radius at which the speed-optimal circle consumes uav_energy over the given
// duration. Throws InfeasibleError when the implied power is outside
// (min_level_power, uav_power_cap].
double radius_from_energy(double uav_energy_j, double duration_s,
                          const SystemParams& params);

struct GtPower {
  double watts;
  bool within_cap;  // watts <= gt_power_cap
};

// Transmit power that delivers exactly the data target over the given duration
// at the radius implied by radius_from_energy.
GtPower power_from_energy(double uav_energy_j, double duration_s,
                          const SystemParams& params);

// Terminal energy of the (uav_energy, duration) design:
// duration * (power_from_energy + circuit power).
double gt_energy_given(double uav_energy_j, double duration_s,
                       const SystemParams& params);

// Frontier point at fixed UAV energy: minimizes gt_energy_given over the
// admissible duration window [E2/cap, E2/level-power), 256-point grid scan
// plus golden-section refinement. Durations whose implied transmit power
// exceeds the cap are discarded (clamping would break the throughput
// equality). Throws InfeasibleError when no duration is admissible.
CircularPoint pareto_point(double uav_energy_j, const SystemParams& params);

// pareto_point on n geometrically spaced UAV-energy values between the two
// extremes (n >= 2).
CircularCurve pareto_curve(const SystemParams& params, int n_points);

}  // namespace g2u

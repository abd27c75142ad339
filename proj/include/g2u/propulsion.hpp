#pragma once

#include "g2u/params.hpp"

namespace g2u {

// Fixed-wing propulsion power and energy for steady circular and straight
// flight. All functions are pure.

// Instantaneous power on a circle of radius r at speed V:
// (c1 + c2/(g^2 r^2)) V^3 + c2/V.
double circular_power(double radius_m, double speed_mps, const SystemParams& params);

// Speed minimizing circular_power at fixed radius.
double optimal_circular_speed(double radius_m, const SystemParams& params);

// circular_power at the optimal speed, in closed form.
double min_circular_power(double radius_m, const SystemParams& params);

// Smallest radius whose speed-optimal power fits under the UAV power cap.
// Throws InfeasibleError when the cap is below the level-flight minimum.
double min_radius(const SystemParams& params);

// Steady straight flight: c1 V^3 + c2/V.
double straight_power(double speed_mps, const SystemParams& params);

// Energy to cover a leg of given length at constant speed,
// D (c1 V^2 + c2/V^2); minimized at V = (c2/c1)^(1/4) with value 2 D sqrt(c1 c2).
double straight_leg_energy(double speed_mps, double leg_length_m,
                           const SystemParams& params);

}  // namespace g2u

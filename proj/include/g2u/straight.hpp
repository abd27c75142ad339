#pragma once

#include <string>
#include <vector>

#include "g2u/geometry.hpp"
#include "g2u/params.hpp"

namespace g2u {

// Two constant speeds produce the same leg energy; the branch records which
// root realized a point.
enum class SpeedBranch { fast, slow };

const char* to_string(SpeedBranch b);

struct StraightDesign {
  double speed_mps;
  double gt_power_w;
  SpeedBranch branch;
};

struct StraightPoint {
  double gt_energy_j;   // (length/speed) * (transmit + circuit power)
  double uav_energy_j;  // length * (c1 V^2 + c2/V^2)
  StraightDesign design;
};

struct StraightCurve {
  std::vector<StraightPoint> points;
  std::vector<std::string> warnings;
  StraightGeometry geometry;
  SystemParams params;
};

// Speed is eliminated through the throughput equality: at transmit power p1
// the leg delivers the data target only at V(p1) = B * leg_log_rate(p1) / (Q ln 2).
// Both extremes scan p1 on a log grid (golden-section refined) subject to
// p1 <= gt cap and straight_power(V(p1)) <= uav cap.
StraightPoint gt_min_energy(const StraightGeometry& geom, const SystemParams& params);
StraightPoint uav_min_energy(const StraightGeometry& geom, const SystemParams& params);

struct SpeedRoots {
  double fast_mps;
  double slow_mps;
};

// The two speeds with straight_leg_energy equal to uav_energy. The slow root
// is computed from the root product to avoid cancellation; the discriminant is
// floored at zero so energies at the double root survive round-off.
// Throws InfeasibleError below the minimum leg energy 2 D sqrt(c1 c2).
SpeedRoots speeds_from_energy(double uav_energy_j, const StraightGeometry& geom,
                              const SystemParams& params);

// Frontier point at fixed UAV energy: evaluates both speed roots, drops the
// infeasible ones (power caps), returns the smaller terminal energy with its
// branch. An exact tie reports the slow branch (lower peak propulsion power).
// Throws InfeasibleError when both branches are infeasible.
StraightPoint pareto_point(double uav_energy_j, const StraightGeometry& geom,
                           const SystemParams& params);

// pareto_point on n geometrically spaced UAV-energy values between the
// extremes (n >= 2). Per-point branch and transmit power are retained so the
// power-versus-energy profile can be reconstructed from the curve.
StraightCurve pareto_curve(const StraightGeometry& geom, const SystemParams& params,
                           int n_points);

}  // namespace g2u

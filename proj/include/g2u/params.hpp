#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace g2u {

using Vec2 = std::array<double, 2>;

// All physical and link-budget constants of one mission, in linear SI units
// (W, m, Hz, bits, s, J). Decibel values appear only at the config boundary.
// Immutable after construction; safe to share across threads.
struct SystemParams {
  double altitude_m;        // UAV flight altitude H
  double bandwidth_hz;      // uplink bandwidth B
  double noise_w;           // receiver noise power
  double beta0;             // channel gain at 1 m reference distance, linear
  double gamma0;            // beta0 / noise_w, m^2/W
  double circuit_power_w;   // constant circuit power of the ground terminal
  double gt_power_cap_w;    // max transmit power of the ground terminal
  double uav_power_cap_w;   // max propulsion power of the UAV
  double c1;                // propulsion coefficient, c1*V^3 is watts
  double c2;                // propulsion coefficient, c2/V is watts
  double gravity_mps2;      // gravitational acceleration
  double data_bits;         // data volume the UAV must collect
};

// Infimum of level-flight propulsion power, (3^(-3/4)+3^(1/4)) c1^(1/4) c2^(3/4).
// Any speed-optimal trajectory, circular or straight, needs at least this much.
double min_level_power(const SystemParams& params);

// Throws ConfigError naming the violated inequality:
// positivity of all fields (circuit power may be zero), gamma0 consistency,
// and uav_power_cap_w > min_level_power (otherwise no circle is flyable).
void validate(const SystemParams& params);

// Parses a flat `key = value` document ('#' starts a comment).
// Required keys: H_m, B_Hz, sigma2_dBm, beta0_dB, Pc_W, P1max_W, P2max_W,
// c1, c2, Q_bits. Optional: g_mps2 (default 9.8), qA_m, qB_m.
// dB/dBm values are converted to linear SI; gamma0 is derived.
SystemParams parse_config(std::string_view text);

// Endpoints of a straight flight leg, when the config provides
// qA_m / qB_m as comma-separated pairs.
struct LegEndpoints {
  Vec2 start_m;
  Vec2 end_m;
};

// std::nullopt when both keys are absent; throws ConfigError when only one is
// present or a pair is malformed.
std::optional<LegEndpoints> parse_leg_endpoints(std::string_view text);

// Inverse of parse_config up to floating-point round trip; leg endpoints are
// appended when given.
std::string serialize(const SystemParams& params,
                      const std::optional<LegEndpoints>& leg = std::nullopt);

}  // namespace g2u

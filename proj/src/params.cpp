#include "g2u/params.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "g2u/errors.hpp"

namespace g2u {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_number(std::string_view key, std::string_view value) {
  const std::string v(trim(value));
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || !std::isfinite(x))
    throw ConfigError("non-numeric value for key '" + std::string(key) + "': '" + v + "'");
  return x;
}

Vec2 to_pair(std::string_view key, std::string_view value) {
  const std::string v(trim(value));
  const auto comma = v.find(',');
  if (comma == std::string::npos)
    throw ConfigError("key '" + std::string(key) + "' expects a comma-separated pair, got '" + v + "'");
  return {to_number(key, std::string_view(v).substr(0, comma)),
          to_number(key, std::string_view(v).substr(comma + 1))};
}

std::map<std::string, std::string, std::less<>> parse_lines(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key(trim(s.substr(0, eq)));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'");
    kv.emplace(key, std::string(trim(s.substr(eq + 1))));
  }
  return kv;
}

const char* const kKnownKeys[] = {"H_m",     "B_Hz", "sigma2_dBm", "beta0_dB",
                                  "Pc_W",    "P1max_W", "P2max_W", "c1",
                                  "c2",      "g_mps2",  "Q_bits",  "qA_m",
                                  "qB_m"};

double require(const std::map<std::string, std::string, std::less<>>& kv,
               std::string_view key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("missing required key '" + std::string(key) + "'");
  return to_number(key, it->second);
}

std::string format_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double min_level_power(const SystemParams& params) {
  static const double k = std::pow(3.0, -0.75) + std::pow(3.0, 0.25);
  return k * std::pow(params.c1, 0.25) * std::pow(params.c2, 0.75);
}

void validate(const SystemParams& p) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError(std::string(name) + " must be > 0, got " + format_full(v));
  };
  positive(p.altitude_m, "H_m");
  positive(p.bandwidth_hz, "B_Hz");
  positive(p.noise_w, "noise power");
  positive(p.beta0, "beta0");
  positive(p.gamma0, "gamma0");
  positive(p.gt_power_cap_w, "P1max_W");
  positive(p.uav_power_cap_w, "P2max_W");
  positive(p.c1, "c1");
  positive(p.c2, "c2");
  positive(p.gravity_mps2, "g_mps2");
  positive(p.data_bits, "Q_bits");
  if (!(p.circuit_power_w >= 0.0) || !std::isfinite(p.circuit_power_w))
    throw ConfigError("Pc_W must be >= 0, got " + format_full(p.circuit_power_w));

  const double expected = p.beta0 / p.noise_w;
  if (std::fabs(p.gamma0 - expected) > 1e-12 * expected)
    throw ConfigError("gamma0 = " + format_full(p.gamma0) +
                      " violates gamma0 = beta0/sigma2 = " + format_full(expected));

  const double level = min_level_power(p);
  if (!(p.uav_power_cap_w > level))
    throw ConfigError("P2max_W = " + format_full(p.uav_power_cap_w) +
                      " violates P2max > (3^(-3/4)+3^(1/4)) c1^(1/4) c2^(3/4) = " +
                      format_full(level));
}

SystemParams parse_config(std::string_view text) {
  const auto kv = parse_lines(text);
  for (const auto& [key, value] : kv) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown key '" + key + "'");
  }

  SystemParams p{};
  p.altitude_m = require(kv, "H_m");
  p.bandwidth_hz = require(kv, "B_Hz");
  const double sigma2_dbm = require(kv, "sigma2_dBm");
  const double beta0_db = require(kv, "beta0_dB");
  p.noise_w = 1e-3 * std::pow(10.0, sigma2_dbm / 10.0);
  p.beta0 = std::pow(10.0, beta0_db / 10.0);
  p.gamma0 = p.beta0 / p.noise_w;
  p.circuit_power_w = require(kv, "Pc_W");
  p.gt_power_cap_w = require(kv, "P1max_W");
  p.uav_power_cap_w = require(kv, "P2max_W");
  p.c1 = require(kv, "c1");
  p.c2 = require(kv, "c2");
  p.gravity_mps2 = kv.count("g_mps2") ? to_number("g_mps2", kv.at("g_mps2")) : 9.8;
  p.data_bits = require(kv, "Q_bits");

  validate(p);
  return p;
}

std::optional<LegEndpoints> parse_leg_endpoints(std::string_view text) {
  const auto kv = parse_lines(text);
  const bool have_a = kv.count("qA_m") > 0;
  const bool have_b = kv.count("qB_m") > 0;
  if (!have_a && !have_b) return std::nullopt;
  if (have_a != have_b)
    throw ConfigError("qA_m and qB_m must be given together");
  return LegEndpoints{to_pair("qA_m", kv.at("qA_m")), to_pair("qB_m", kv.at("qB_m"))};
}

std::string serialize(const SystemParams& p, const std::optional<LegEndpoints>& leg) {
  std::string out;
  const auto put = [&out](const char* key, double v) {
    out += key;
    out += " = ";
    out += format_full(v);
    out += '\n';
  };
  put("H_m", p.altitude_m);
  put("B_Hz", p.bandwidth_hz);
  put("sigma2_dBm", 10.0 * std::log10(p.noise_w / 1e-3));
  put("beta0_dB", 10.0 * std::log10(p.beta0));
  put("Pc_W", p.circuit_power_w);
  put("P1max_W", p.gt_power_cap_w);
  put("P2max_W", p.uav_power_cap_w);
  put("c1", p.c1);
  put("c2", p.c2);
  put("g_mps2", p.gravity_mps2);
  put("Q_bits", p.data_bits);
  if (leg) {
    out += "qA_m = " + format_full(leg->start_m[0]) + "," + format_full(leg->start_m[1]) + "\n";
    out += "qB_m = " + format_full(leg->end_m[0]) + "," + format_full(leg->end_m[1]) + "\n";
  }
  return out;
}

}  // namespace g2u

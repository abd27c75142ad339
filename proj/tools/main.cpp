// Command-line front end: load a mission config, compute extreme points or a
// full energy trade-off sweep, write plot-ready CSV.
//
// Exit codes: 0 success, 2 config error, 3 infeasible problem,
// 4 validation failure, 1 anything else.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "g2u/channel.hpp"
#include "g2u/circular.hpp"
#include "g2u/errors.hpp"
#include "g2u/geometry.hpp"
#include "g2u/oracle.hpp"
#include "g2u/params.hpp"
#include "g2u/propulsion.hpp"
#include "g2u/straight.hpp"

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Loaded {
  g2u::SystemParams params;
  std::optional<g2u::StraightGeometry> geometry;
};

Loaded load(const std::string& path, std::optional<double> pc_override,
            std::optional<double> q_override) {
  std::ifstream in(path);
  if (!in) throw g2u::ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  Loaded loaded{g2u::parse_config(text), std::nullopt};
  if (pc_override) loaded.params.circuit_power_w = *pc_override;
  if (q_override) loaded.params.data_bits = *q_override;
  g2u::validate(loaded.params);

  if (const auto leg = g2u::parse_leg_endpoints(text))
    loaded.geometry =
        g2u::make_geometry(leg->start_m, leg->end_m, loaded.params.altitude_m);
  return loaded;
}

const g2u::StraightGeometry& need_geometry(const Loaded& loaded) {
  if (!loaded.geometry)
    throw g2u::ConfigError("this command needs a straight leg: add qA_m and qB_m "
                           "to the config");
  return *loaded.geometry;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw g2u::ConfigError("cannot open output file '" + path + "'");
  out << content;
}

std::string circular_csv(const g2u::CircularCurve& curve, const std::string& note) {
  std::string csv = "# circular energy trade-off; " + note + "\n";
  csv += "# columns: UAV energy [J], terminal energy [J], mission time [s], "
         "radius [m], speed [m/s], transmit power [W]\n";
  csv += "E2_J,E1_J,T_s,r_m,V_mps,p1_W\n";
  for (const auto& pt : curve.points) {
    csv += num(pt.uav_energy_j) + "," + num(pt.gt_energy_j) + "," +
           num(pt.design.duration_s) + "," + num(pt.design.radius_m) + "," +
           num(pt.design.speed_mps) + "," + num(pt.design.gt_power_w) + "\n";
  }
  return csv;
}

std::string straight_csv(const g2u::StraightCurve& curve, const std::string& note) {
  std::string csv = "# straight-leg energy trade-off; " + note + "\n";
  csv += "# columns: UAV energy [J], terminal energy [J], speed [m/s], "
         "transmit power [W], speed branch, mission time [s]\n";
  csv += "E2_J,E1_J,V_mps,p1_W,branch,T_s\n";
  for (const auto& pt : curve.points) {
    csv += num(pt.uav_energy_j) + "," + num(pt.gt_energy_j) + "," +
           num(pt.design.speed_mps) + "," + num(pt.design.gt_power_w) + "," +
           g2u::to_string(pt.design.branch) + "," +
           num(curve.geometry.length_m / pt.design.speed_mps) + "\n";
  }
  return csv;
}

// Summaries share stdout with the CSV only when the CSV goes to a file;
// otherwise they move to stderr so piped data stays clean.
std::ostream& info_stream(const std::string& out_path) {
  return (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
}

void print_circular_point(std::ostream& os, const char* label,
                          const g2u::CircularPoint& pt) {
  os << label << ": E1=" << num(pt.gt_energy_j)
     << " J  E2=" << num(pt.uav_energy_j) << " J  (T="
     << num(pt.design.duration_s) << " s, r=" << num(pt.design.radius_m)
     << " m, V=" << num(pt.design.speed_mps) << " m/s, p1="
     << num(pt.design.gt_power_w) << " W)\n";
}

void print_straight_point(std::ostream& os, const char* label,
                          const g2u::StraightPoint& pt,
                          const g2u::StraightGeometry& geom) {
  os << label << ": E1=" << num(pt.gt_energy_j)
     << " J  E2=" << num(pt.uav_energy_j) << " J  (V="
     << num(pt.design.speed_mps) << " m/s, p1=" << num(pt.design.gt_power_w)
     << " W, branch=" << g2u::to_string(pt.design.branch)
     << ", T=" << num(geom.length_m / pt.design.speed_mps) << " s)\n";
}

void print_warnings(std::ostream& os, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) os << "warning: " << w << "\n";
}

// Oracle cross-checks of the closed forms on the loaded config; returns the
// number of failed checks.
int run_validation(const Loaded& loaded) {
  const auto& params = loaded.params;
  const auto& geom = need_geometry(loaded);
  int failures = 0;
  const auto report = [&failures](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << what << "\n";
    if (!ok) ++failures;
  };

  {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> power(1e-6, params.gt_power_cap_w);
    std::uniform_real_distribution<double> speed(5.0, 100.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double p1 = power(rng);
      const double v = speed(rng);
      const double closed = g2u::straight_throughput(p1, v, geom, params);
      const double quad =
          g2u::quad_straight_throughput(p1, v, geom, params, g2u::QuadSpec{});
      worst = std::max(worst, std::fabs(closed - quad) / quad);
    }
    report(worst <= 1e-7, "closed-form throughput vs adaptive quadrature, 50 samples "
                          "(max rel err " + num(worst) + ")");
  }
  {
    const double worst = g2u::fd_check_primitive(params, geom, 1000);
    report(worst <= 1e-6, "rate antiderivative vs finite differences, 1000 samples "
                          "(max rel err " + num(worst) + ")");
  }
  {
    double worst = 0.0;
    for (double r = 1.0; r <= 1e6; r *= 10.0) {
      const double a = g2u::min_circular_power(r, params);
      const double b = g2u::circular_power(r, g2u::optimal_circular_speed(r, params), params);
      worst = std::max(worst, std::fabs(a - b) / b);
    }
    report(worst <= 1e-12, "closed-form minimum circular power vs direct evaluation "
                           "(max rel err " + num(worst) + ")");
  }
  {
    const auto lo = g2u::uav_min_energy(params);
    const auto hi = g2u::gt_min_energy(params);
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
      const double e2 =
          lo.uav_energy_j * std::pow(hi.uav_energy_j / lo.uav_energy_j, i / 4.0);
      const double fast = g2u::pareto_point(e2, params).gt_energy_j;
      const double brute = g2u::brute_pareto_circular(e2, params, 4096);
      worst = std::max(worst, std::fabs(fast - brute) / brute);
    }
    report(worst <= 1e-4, "circular frontier vs brute-force duration grid "
                          "(max rel err " + num(worst) + ")");
  }
  {
    const auto lo = g2u::uav_min_energy(geom, params);
    const auto hi = g2u::gt_min_energy(geom, params);
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
      const double e2 =
          lo.uav_energy_j * std::pow(hi.uav_energy_j / lo.uav_energy_j, i / 4.0);
      const double fast = g2u::pareto_point(e2, geom, params).gt_energy_j;
      const double brute = g2u::brute_pareto_straight(e2, geom, params, 4096);
      worst = std::max(worst, std::fabs(fast - brute) / brute);
    }
    report(worst <= 1e-4, "straight frontier vs brute-force speed grid "
                          "(max rel err " + num(worst) + ")");
  }
  {
    std::mt19937 rng(42);
    const double floor_j =
        2.0 * geom.length_m * std::sqrt(params.c1 * params.c2);
    std::uniform_real_distribution<double> factor(0.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double e2 = floor_j * std::pow(10.0, factor(rng));
      const auto roots = g2u::speeds_from_energy(e2, geom, params);
      for (double v : {roots.fast_mps, roots.slow_mps}) {
        const double back = g2u::straight_leg_energy(v, geom.length_m, params);
        worst = std::max(worst, std::fabs(back - e2) / e2);
      }
    }
    report(worst <= 1e-9, "speed roots reproduce the leg energy, 100 samples "
                          "(max rel err " + num(worst) + ")");
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy trade-off between a ground terminal and a fixed-wing UAV "
               "collecting its data"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "-";
  int n_points = 64;
  std::optional<double> pc_override;
  std::optional<double> q_override;

  const auto add_common = [&](CLI::App* cmd, bool with_points) {
    cmd->add_option("--config", config_path, "mission config file")->required();
    cmd->add_option("--out", out_path, "output CSV path ('-' for stdout)");
    if (with_points)
      cmd->add_option("--points", n_points, "sweep size")->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--pc", pc_override, "override circuit power [W]");
    cmd->add_option("--q-bits", q_override, "override data volume [bits]");
  };

  auto* circ_ext = app.add_subcommand("circular-extremes",
                                      "extreme points of the circular trade-off");
  auto* circ_par = app.add_subcommand("circular-pareto",
                                      "sweep the circular trade-off frontier");
  auto* str_ext = app.add_subcommand("straight-extremes",
                                     "extreme points of the straight-leg trade-off");
  auto* str_par = app.add_subcommand("straight-pareto",
                                     "sweep the straight-leg trade-off frontier");
  auto* validate = app.add_subcommand("validate",
                                      "cross-check closed forms against numerical oracles");
  add_common(circ_ext, false);
  add_common(circ_par, true);
  add_common(str_ext, false);
  add_common(str_par, true);
  add_common(validate, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const Loaded loaded = load(config_path, pc_override, q_override);
    const auto& params = loaded.params;

    std::ostream& info = info_stream(out_path);
    if (circ_ext->parsed()) {
      const auto gt = g2u::gt_min_energy(params);
      const auto uav = g2u::uav_min_energy(params);
      print_circular_point(info, "terminal-optimal", gt);
      print_circular_point(info, "uav-optimal     ", uav);
      if (out_path != "-") {
        g2u::CircularCurve curve{{uav, gt}, {}, params};
        write_file(out_path, circular_csv(curve, "extreme points only"));
      }
    } else if (circ_par->parsed()) {
      const auto curve = g2u::pareto_curve(params, n_points);
      print_circular_point(info, "terminal-optimal", curve.points.back());
      print_circular_point(info, "uav-optimal     ", curve.points.front());
      print_warnings(info, curve.warnings);
      char note[64];
      std::snprintf(note, sizeof note, "geometric E2 grid, n=%d", n_points);
      write_file(out_path, circular_csv(curve, note));
      if (out_path != "-")
        std::cout << "wrote " << curve.points.size() << " rows to " << out_path << "\n";
    } else if (str_ext->parsed()) {
      const auto& geom = need_geometry(loaded);
      const auto gt = g2u::gt_min_energy(geom, params);
      const auto uav = g2u::uav_min_energy(geom, params);
      print_straight_point(info, "terminal-optimal", gt, geom);
      print_straight_point(info, "uav-optimal     ", uav, geom);
      if (out_path != "-") {
        g2u::StraightCurve curve{{uav, gt}, {}, geom, params};
        write_file(out_path, straight_csv(curve, "extreme points only"));
      }
    } else if (str_par->parsed()) {
      const auto& geom = need_geometry(loaded);
      const auto curve = g2u::pareto_curve(geom, params, n_points);
      print_straight_point(info, "terminal-optimal", curve.points.back(), geom);
      print_straight_point(info, "uav-optimal     ", curve.points.front(), geom);
      print_warnings(info, curve.warnings);
      char note[64];
      std::snprintf(note, sizeof note, "geometric E2 grid, n=%d", n_points);
      write_file(out_path, straight_csv(curve, note));
      if (out_path != "-")
        std::cout << "wrote " << curve.points.size() << " rows to " << out_path << "\n";
    } else if (validate->parsed()) {
      const int failures = run_validation(loaded);
      if (failures > 0) {
        std::cerr << failures << " validation check(s) failed\n";
        return 4;
      }
      std::cout << "all validation checks passed\n";
    }
  } catch (const g2u::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const g2u::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

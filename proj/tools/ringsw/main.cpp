#include "ringsw/control/plan.hpp"
#include "ringsw/errors.hpp"
#include "ringsw/harness/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;

std::array<bool, ringsw::device::kNumPorts> parse_bitmap(const std::string& s) {
  if (s.size() != ringsw::device::kNumPorts)
    throw ringsw::ConfigError("bitmap must have exactly 8 digits, e.g. 00100000");
  std::array<bool, ringsw::device::kNumPorts> bitmap{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw ringsw::ConfigError("bitmap digits must be 0 or 1");
    bitmap[i] = s[i] == '1';
  }
  return bitmap;
}

ringsw::harness::ExperimentConfig load_or_default(const std::string& config_path) {
  if (config_path.empty()) return ringsw::harness::ExperimentConfig{};
  return ringsw::harness::load_config(config_path);
}

nlohmann::ordered_json plan_to_json(const ringsw::control::SwitchPlan& plan) {
  nlohmann::ordered_json doc;
  doc["rings"] = nlohmann::ordered_json::array();
  for (const auto& r : plan.rings) {
    nlohmann::ordered_json ring;
    ring["ring"] = r.ring;
    ring["role"] = r.role == ringsw::control::RingRole::kDrop ? "drop" : "parked";
    ring["target_resonance_nm"] = r.target_resonance_nm;
    ring["shift_nm"] = r.shift_nm;
    ring["voltage_v"] = r.voltage_v;
    ring["detuning_ghz"] = r.detuning_ghz;
    ring["drop_fraction"] = r.drop_fraction;
    doc["rings"].push_back(std::move(ring));
  }
  doc["power_mw"] = plan.total_power_mw;
  doc["fj_per_bit"] = plan.energy_fj_per_bit;
  doc["bitrate_gbps"] = plan.bitrate_gbps;
  doc["reconfiguration_latency_us"] = plan.reconfiguration_latency_us;
  return doc;
}

void print_plan_table(const ringsw::control::SwitchPlan& plan, double dac_step_mv) {
  std::printf("ring  role    target_nm    shift_nm   voltage_v  detune_ghz  drop\n");
  for (const auto& r : plan.rings) {
    double v = r.voltage_v;
    if (dac_step_mv > 0.0) v = std::round(v * 1000.0 / dac_step_mv) * dac_step_mv / 1000.0;
    std::printf("%4d  %-6s  %9.4f  %10.6f  %10.6f  %10.3f  %.4f\n", r.ring,
                r.role == ringsw::control::RingRole::kDrop ? "drop" : "parked",
                r.target_resonance_nm, r.shift_nm, v, r.detuning_ghz, r.drop_fraction);
  }
  std::printf("total power: %.6f mW   energy: %.6f fJ/bit   latency: %.1f us\n",
              plan.total_power_mw, plan.energy_fj_per_bit, plan.reconfiguration_latency_us);
}

int cmd_plan(const std::string& config_path, double wavelength_nm, const std::string& bitmap,
             double bitrate_gbps, const std::string& out_path, double dac_step_mv) {
  const auto cfg = load_or_default(config_path);
  ringsw::control::RouteRequest req;
  req.input_wavelength_nm = wavelength_nm;
  req.route_bitmap = parse_bitmap(bitmap);
  req.bitrate_gbps = bitrate_gbps;
  const auto device = cfg.device_for_band(wavelength_nm);

  ringsw::control::SwitchPlan plan;
  try {
    plan = ringsw::control::plan_route(req, device, cfg.planner);
  } catch (const ringsw::InfeasiblePlanError& e) {
    std::fprintf(stderr, "infeasible plan: %s\n", e.what());
    return kExitInfeasible;
  }

  print_plan_table(plan, dac_step_mv);
  const std::string json = plan_to_json(plan).dump(2) + "\n";
  if (out_path.empty()) {
    std::fputs(json.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ringsw::IoError("cannot open output file for writing: " + out_path);
    out << json;
    if (!out) throw ringsw::IoError("write failed: " + out_path);
  }
  return kExitOk;
}

int cmd_device(const std::string& config_path, double band_nm, double start_nm,
               double stop_nm, double resolution_pm, double wavelength_nm,
               const std::string& bitmap, const std::string& out_path) {
  const auto cfg = load_or_default(config_path);
  const auto device = cfg.device_for_band(band_nm);

  std::vector<ringsw::device::RingState> states;
  if (!bitmap.empty()) {
    ringsw::control::RouteRequest req;
    req.input_wavelength_nm = wavelength_nm > 0.0 ? wavelength_nm : band_nm;
    req.route_bitmap = parse_bitmap(bitmap);
    try {
      states = ringsw::control::plan_route(req, device, cfg.planner).to_states(device);
    } catch (const ringsw::InfeasiblePlanError& e) {
      std::fprintf(stderr, "infeasible plan: %s\n", e.what());
      return kExitInfeasible;
    }
  } else {
    for (const auto& r : device.rings) states.push_back(ringsw::device::make_state(r, 0.0));
  }

  const auto dump =
      ringsw::device::dump_spectrum(device, states, resolution_pm, start_nm, stop_nm);
  if (out_path.empty()) {
    ringsw::device::write_spectrum_csv(dump, std::cout);
    if (!std::cout) throw ringsw::IoError("write to stdout failed");
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ringsw::IoError("cannot open output file for writing: " + out_path);
    ringsw::device::write_spectrum_csv(dump, out);
    if (!out) throw ringsw::IoError("write failed: " + out_path);
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& mode_flag,
              const std::string& out_path, const std::string& format_flag,
              std::uint64_t seed, bool seed_given) {
  auto cfg = load_or_default(config_path);
  if (!mode_flag.empty()) cfg.sweep.mode = ringsw::harness::parse_sweep_mode(mode_flag);
  if (seed_given) cfg.sweep.seed = seed;
  const auto format = ringsw::harness::parse_output_format(format_flag);

  const auto result = ringsw::harness::run_sweep(cfg);
  ringsw::harness::emit_results(result, format, out_path);
  if (!ringsw::harness::has_feasible_row(result)) {
    std::fprintf(stderr, "sweep produced no feasible rows\n");
    return kExitInfeasible;
  }
  std::size_t passed = 0;
  std::size_t feasible = 0;
  for (const auto& r : result.rows) {
    if (r.infeasible) continue;
    ++feasible;
    if (r.fec_pass) ++passed;
  }
  std::fprintf(stderr, "sweep done: %zu rows, %zu/%zu fec_pass, output %s\n",
               result.rows.size(), passed, feasible, out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"8-port micro-ring switch simulator"};
  app.require_subcommand(1);

  std::string config_path;

  auto* plan_cmd = app.add_subcommand("plan", "compute a switch plan");
  plan_cmd->add_option("--config", config_path, "experiment config file (INI)");
  double wavelength_nm = 1552.0;
  std::string bitmap = "10000000";
  double bitrate_gbps = 120.0;
  std::string plan_out;
  double dac_step_mv = 0.0;
  plan_cmd->add_option("--wavelength", wavelength_nm, "input wavelength (nm)")->required();
  plan_cmd->add_option("--bitmap", bitmap, "route bitmap, e.g. 00100000")->required();
  plan_cmd->add_option("--bitrate", bitrate_gbps, "bitrate for energy accounting (Gb/s)");
  plan_cmd->add_option("--out", plan_out, "write plan JSON to this path");
  plan_cmd->add_option("--dac-step-mv", dac_step_mv,
                       "display voltages quantized to this DAC step (mV)");

  auto* device_cmd = app.add_subcommand("device", "dump per-port spectra as CSV");
  device_cmd->add_option("--config", config_path, "experiment config file (INI)");
  double band_nm = 1552.0;
  double start_nm = 1528.0;
  double stop_nm = 1568.0;
  double resolution_pm = 1.44;
  double plan_wavelength_nm = 0.0;
  std::string device_bitmap;
  std::string device_out;
  device_cmd->add_option("--band", band_nm, "band selecting the default calibration (nm)");
  device_cmd->add_option("--start", start_nm, "start wavelength (nm)");
  device_cmd->add_option("--stop", stop_nm, "stop wavelength (nm)");
  device_cmd->add_option("--resolution-pm", resolution_pm, "grid resolution (pm)");
  device_cmd->add_option("--wavelength", plan_wavelength_nm,
                         "input wavelength for --bitmap (nm)");
  device_cmd->add_option("--bitmap", device_bitmap, "apply a switch plan before dumping");
  device_cmd->add_option("--out", device_out, "output CSV path (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "run an EVM sweep");
  sweep_cmd->add_option("--config", config_path, "experiment config file (INI)");
  std::string mode_flag;
  std::string sweep_out;
  std::string format_flag = "csv";
  std::uint64_t seed = 0;
  sweep_cmd->add_option("--mode", mode_flag, "unicast|multicast|bidirectional|baseline");
  sweep_cmd->add_option("--out", sweep_out, "output path")->required();
  sweep_cmd->add_option("--format", format_flag, "csv|json");
  auto* seed_opt = sweep_cmd->add_option("--seed", seed, "master RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (plan_cmd->parsed())
      return cmd_plan(config_path, wavelength_nm, bitmap, bitrate_gbps, plan_out,
                      dac_step_mv);
    if (device_cmd->parsed())
      return cmd_device(config_path, band_nm, start_nm, stop_nm, resolution_pm,
                        plan_wavelength_nm, device_bitmap, device_out);
    if (sweep_cmd->parsed())
      return cmd_sweep(config_path, mode_flag, sweep_out, format_flag, seed,
                       seed_opt->count() > 0);
  } catch (const ringsw::IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const ringsw::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}

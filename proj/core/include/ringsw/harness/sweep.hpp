#pragma once

#include "ringsw/harness/config.hpp"

#include <string>
#include <vector>

namespace ringsw::harness {

struct SweepRow {
  double wavelength_nm = 0.0;
  SweepMode mode = SweepMode::kUnicast;  // baseline reference rows carry kBaseline
  int ring = 0;                          // 0 for baseline rows
  device::Direction direction = device::Direction::kForward;
  int subchannel = 0;  // 1..n_sub
  bool infeasible = false;
  std::string note;  // planner diagnostic for infeasible rows
  double evm_percent = 0.0;
  double ber = 0.0;
  bool fec_pass = false;
  double power_mw = 0.0;
  double fj_per_bit = 0.0;
  double rx_power_dbm = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // canonical order
  SweepMode mode = SweepMode::kUnicast;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  double reconfiguration_latency_us = 0.0;
};

SweepResult run_unicast_sweep(const ExperimentConfig& cfg);
SweepResult run_multicast_sweep(const ExperimentConfig& cfg);
SweepResult run_bidirectional_sweep(const ExperimentConfig& cfg);
SweepResult run_baseline_sweep(const ExperimentConfig& cfg);
SweepResult run_sweep(const ExperimentConfig& cfg);  // dispatch on cfg.sweep.mode

bool has_feasible_row(const SweepResult& result);

enum class OutputFormat { kCsv, kJson };
OutputFormat parse_output_format(const std::string& s);  // throws ConfigError

// Byte-stable serializations: fixed column order, EVM to 2 decimals, BER in
// scientific notation with 3 significant digits.
std::string format_csv(const SweepResult& result);
std::string format_json(const SweepResult& result);

// Writes the chosen serialization; throws IoError with path context.
void emit_results(const SweepResult& result, OutputFormat format, const std::string& path);

}  // namespace ringsw::harness

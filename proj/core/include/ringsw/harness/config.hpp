#pragma once

#include "ringsw/control/plan.hpp"
#include "ringsw/phy/channel.hpp"
#include "ringsw/phy/superchannel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ringsw::harness {

enum class SweepMode { kUnicast, kMulticast, kBidirectional, kBaseline };

std::string to_string(SweepMode mode);
SweepMode parse_sweep_mode(const std::string& s);  // throws ConfigError

struct MulticastGroup {
  double wavelength_nm = 0.0;
  std::vector<int> rings;  // 2 or 3 members, 1..8
};

struct SweepSettings {
  SweepMode mode = SweepMode::kUnicast;
  std::vector<double> wavelengths_nm = {1539.0, 1552.0, 1563.0};
  std::vector<int> rings = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<MulticastGroup> groups = {
      {1539.0, {1, 2, 3}}, {1552.0, {4, 5}}, {1563.0, {6, 7, 8}}};
  std::uint64_t seed = 1;
  std::size_t symbols_per_point = 1u << 15;
  double bitrate_gbps = 120.0;  // energy accounting
  // Passband narrowing applied to simultaneously tuned rings in multicast.
  double multicast_bw_factor = 0.93;
  bool include_baseline = true;
  int threads = 0;  // 0 = hardware concurrency
};

struct ExperimentConfig {
  // When false, the device for each sweep wavelength is the per-band default
  // calibration; an explicit [device] ring table overrides it for all bands.
  bool device_overridden = false;
  device::DeviceSpec device = device::DeviceSpec::default_device();
  phy::SuperchannelSpec superchannel;
  phy::FiberSpec fiber;
  double decorrelation_fiber_m = 10.0;
  phy::NoiseSpec noise;
  double lo_freq_error_ghz = 0.2;
  double adc_rate_gsa = 50.0;
  control::PlannerConfig planner;
  SweepSettings sweep;

  void validate() const;  // throws ConfigError
  device::DeviceSpec device_for_band(double band_nm) const;
};

// INI-style file with sections [device], [superchannel], [fiber], [noise],
// [sweep]; keys documented in the README. Unknown keys or malformed values
// throw ConfigError with line context.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text, const std::string& origin = "<string>");

// Stable digest of every semantic field, reported in sweep metadata.
std::uint64_t config_hash(const ExperimentConfig& cfg);

}  // namespace ringsw::harness

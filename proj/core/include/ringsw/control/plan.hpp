#pragma once

#include "ringsw/device/cascade.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ringsw::control {

struct RouteRequest {
  double input_wavelength_nm = 0.0;
  std::array<bool, device::kNumPorts> route_bitmap{};  // bit k-1 => port k
  double bitrate_gbps = 120.0;

  int popcount() const;
  void validate() const;  // 1 <= popcount <= 3, wavelength in band limits
};

struct PlannerConfig {
  // Minimum spectral clearance between a parked resonance and the input
  // wavelength, wrap-aware. Chosen below the 1.27 nm ring pitch (~160 GHz) so
  // already-clear neighbors park at zero bias, which is what makes the
  // near-zero tuning energy operating points reachable.
  double guard_band_ghz = 150.0;
  double band_min_nm = 1528.0;
  double band_max_nm = 1568.0;
  double equalization_tolerance = 1e-6;
  // Optional deterministic per-port ripple (dB) emulating non-ideal drop
  // equalization; 0 keeps the ideal model.
  double imbalance_db = 0.0;
  double reconfiguration_latency_us = 10.0;
};

enum class RingRole { kDrop, kParked };

struct RingPlan {
  int ring = 0;  // 1..8
  RingRole role = RingRole::kParked;
  double target_resonance_nm = 0.0;
  double shift_nm = 0.0;
  double voltage_v = 0.0;
  double detuning_ghz = 0.0;   // signed offset of the resonance from the input wavelength (DROP rings)
  double drop_fraction = 0.0;  // fraction of device input power dropped at this port (lossless core)
};

struct MulticastSolution {
  std::vector<double> detunings_ghz;    // cascade order, signed
  std::vector<double> port_fractions;   // same order
};

struct SwitchPlan {
  std::vector<RingPlan> rings;  // size 8, cascade order
  double total_power_mw = 0.0;
  double energy_fj_per_bit = 0.0;
  double bitrate_gbps = 0.0;
  double reconfiguration_latency_us = 0.0;
  std::optional<MulticastSolution> multicast;

  std::vector<device::RingState> to_states(const device::DeviceSpec& spec) const;
  bool selects_port(int port) const;
};

// Unicast planner: aligns the selected ring's resonance with the input
// wavelength modulo FSR and parks every other ring with guard-band clearance,
// with minimal total tuning power. Throws std::invalid_argument on a bitmap
// with popcount != 1 and InfeasiblePlanError when out of tuning range.
SwitchPlan plan_unicast(const RouteRequest& req, const device::DeviceSpec& spec,
                        const PlannerConfig& cfg = {});

// Multicast planner for 2 or 3 ports: detunes the selected rings so each port
// drops an equal fraction (peak/k) of the input, parks the rest, and picks the
// power-minimal side/wrap for every detuning.
SwitchPlan plan_multicast(const RouteRequest& req, const device::DeviceSpec& spec,
                          const PlannerConfig& cfg = {});

// Dispatch on popcount.
SwitchPlan plan_route(const RouteRequest& req, const device::DeviceSpec& spec,
                      const PlannerConfig& cfg = {});

// Inverts the 2nd-order thermo-optic polynomial (positive root).
double shift_to_voltage(const device::RingSpec& spec, double shift_nm);

struct EnergyReport {
  double total_power_mw = 0.0;
  double energy_fj_per_bit = 0.0;
};

EnergyReport plan_energy(const SwitchPlan& plan, const device::DeviceSpec& spec,
                         double bitrate_gbps);

struct VerifyThresholds {
  // Band-mean leakage of unselected ports. The single-pole drop tail at the
  // 1.27 nm ring pitch bounds this near -12 dB, so the default is modest.
  double crosstalk_db = -10.0;
  double imbalance_db = 2.0;
};

struct VerifyReport {
  double selected_insertion_loss_db = 0.0;  // worst selected port, couplings included
  double worst_crosstalk_db = -300.0;       // worst unselected port, lossless core
  double imbalance_db = 0.0;                // selected-port max-min spread
  bool crosstalk_ok = true;
  bool imbalance_ok = true;
};

// Applies the plan to the device model and integrates per-port power over the
// signal band.
VerifyReport verify_plan(const SwitchPlan& plan, const device::DeviceSpec& spec,
                         double band_center_nm, double band_width_ghz,
                         const VerifyThresholds& thresholds = {});

}  // namespace ringsw::control

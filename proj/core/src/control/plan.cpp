#include "ringsw/control/plan.hpp"

#include "ringsw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ringsw::control {
namespace {

double mod_pos(double x, double m) {
  double r = std::fmod(x, m);
  if (r < 0.0) r += m;
  return r;
}

void finalize_energy(SwitchPlan& plan, const device::DeviceSpec& spec, double bitrate_gbps) {
  double shift_sum = 0.0;
  for (const auto& rp : plan.rings) shift_sum += rp.shift_nm;
  plan.total_power_mw = shift_sum / spec.tuning_efficiency_nm_per_mw;
  plan.bitrate_gbps = bitrate_gbps;
  // mW / (Gb/s) = pJ/bit.
  plan.energy_fj_per_bit = plan.total_power_mw / bitrate_gbps * 1e3;
}

// Minimal red shift that parks the ring at least guard_nm away (mod FSR) from
// the input wavelength. Returns 0 when already clear.
double parked_shift(const device::RingSpec& ring, double input_nm, double guard_nm) {
  const double fsr = ring.fsr_nm;
  const double d = mod_pos(ring.zero_bias_resonance_nm - input_nm, fsr);
  const bool blocked = d < guard_nm || d > fsr - guard_nm;
  if (!blocked) return 0.0;
  return mod_pos(guard_nm - d, fsr);
}

RingPlan make_ring_plan(const device::RingSpec& ring, RingRole role, double shift_nm,
                        double input_nm) {
  RingPlan rp;
  rp.ring = ring.index;
  rp.role = role;
  rp.shift_nm = shift_nm;
  rp.target_resonance_nm = ring.zero_bias_resonance_nm + shift_nm;
  rp.voltage_v = shift_to_voltage(ring, shift_nm);
  // Signed detuning of the (wrapped) resonance from the input wavelength.
  double d = mod_pos(rp.target_resonance_nm - input_nm, ring.fsr_nm);
  if (d > ring.fsr_nm / 2.0) d -= ring.fsr_nm;
  rp.detuning_ghz = units::span_ghz(d, input_nm);
  return rp;
}

}  // namespace

int RouteRequest::popcount() const {
  int n = 0;
  for (bool b : route_bitmap) n += b ? 1 : 0;
  return n;
}

void RouteRequest::validate() const {
  const int n = popcount();
  if (n < 1 || n > 3)
    throw std::invalid_argument("route request: bitmap popcount must be 1..3");
  if (bitrate_gbps <= 0.0)
    throw std::invalid_argument("route request: bitrate must be positive");
}

std::vector<device::RingState> SwitchPlan::to_states(const device::DeviceSpec& spec) const {
  std::vector<device::RingState> states;
  states.reserve(rings.size());
  for (std::size_t i = 0; i < rings.size(); ++i)
    states.push_back(device::make_state(spec.rings[i], rings[i].voltage_v));
  return states;
}

bool SwitchPlan::selects_port(int port) const {
  if (port < 1 || port > device::kNumPorts) return false;
  return rings[port - 1].role == RingRole::kDrop;
}

double shift_to_voltage(const device::RingSpec& spec, double shift_nm) {
  if (shift_nm < 0.0 || shift_nm >= spec.fsr_nm)
    throw std::invalid_argument("ring " + std::to_string(spec.index) +
                                ": shift must lie in [0, FSR)");
  if (shift_nm > spec.max_shift_nm() + 1e-12)
    throw InfeasiblePlanError("ring " + std::to_string(spec.index) + ": shift " +
                              std::to_string(shift_nm) + " nm exceeds tuning range");
  const double c2 = spec.thermo_c2_nm_per_v2;
  const double c1 = spec.thermo_c1_nm_per_v;
  double v = 0.0;
  if (c2 < 1e-15) {
    if (c1 < 1e-15) {
      if (shift_nm > 0.0)
        throw InfeasiblePlanError("ring " + std::to_string(spec.index) +
                                  ": no thermo-optic response");
      v = 0.0;
    } else {
      v = shift_nm / c1;
    }
  } else {
    v = (-c1 + std::sqrt(c1 * c1 + 4.0 * c2 * shift_nm)) / (2.0 * c2);
  }
  if (v > spec.max_voltage_v + 1e-12)
    throw InfeasiblePlanError("ring " + std::to_string(spec.index) +
                              ": required bias exceeds max voltage");
  return std::min(v, spec.max_voltage_v);
}

SwitchPlan plan_unicast(const RouteRequest& req, const device::DeviceSpec& spec,
                        const PlannerConfig& cfg) {
  req.validate();
  if (req.popcount() != 1)
    throw std::invalid_argument("plan_unicast: bitmap must select exactly one port");
  if (req.input_wavelength_nm < cfg.band_min_nm || req.input_wavelength_nm > cfg.band_max_nm)
    throw std::invalid_argument("plan_unicast: wavelength outside device band");

  const double guard_nm = units::span_nm(cfg.guard_band_ghz, req.input_wavelength_nm);

  SwitchPlan plan;
  plan.reconfiguration_latency_us = cfg.reconfiguration_latency_us;
  plan.rings.reserve(device::kNumPorts);
  for (int i = 0; i < device::kNumPorts; ++i) {
    const device::RingSpec& ring = spec.rings[i];
    if (req.route_bitmap[i]) {
      const double shift = mod_pos(req.input_wavelength_nm - ring.zero_bias_resonance_nm,
                                   ring.fsr_nm);
      RingPlan rp = make_ring_plan(ring, RingRole::kDrop, shift, req.input_wavelength_nm);
      rp.drop_fraction = ring.peak_drop_efficiency;
      plan.rings.push_back(rp);
    } else {
      const double shift = parked_shift(ring, req.input_wavelength_nm, guard_nm);
      plan.rings.push_back(make_ring_plan(ring, RingRole::kParked, shift,
                                          req.input_wavelength_nm));
    }
  }
  finalize_energy(plan, spec, req.bitrate_gbps);
  return plan;
}

SwitchPlan plan_multicast(const RouteRequest& req, const device::DeviceSpec& spec,
                          const PlannerConfig& cfg) {
  req.validate();
  const int k = req.popcount();
  if (k < 2 || k > 3)
    throw std::invalid_argument("plan_multicast: bitmap must select 2 or 3 ports");
  if (req.input_wavelength_nm < cfg.band_min_nm || req.input_wavelength_nm > cfg.band_max_nm)
    throw std::invalid_argument("plan_multicast: wavelength outside device band");

  std::vector<int> selected;  // 0-based, cascade order
  for (int i = 0; i < device::kNumPorts; ++i)
    if (req.route_bitmap[i]) selected.push_back(i);

  double peak_ref = 1.0;
  for (int i : selected) peak_ref = std::min(peak_ref, spec.rings[i].peak_drop_efficiency);

  // Equal per-port split of the unicast reference drop: q = peak/k. The last
  // ring in cascade order takes the largest stage fraction.
  const double q = peak_ref / static_cast<double>(k);
  MulticastSolution sol;
  std::vector<double> stage_fraction(selected.size());
  double remaining = 1.0;
  for (std::size_t s = 0; s < selected.size(); ++s) {
    double port_target = q;
    if (cfg.imbalance_db > 0.0) {
      const double ripple = (s % 2 == 0 ? 0.5 : -0.5) * cfg.imbalance_db;
      port_target = q * std::pow(10.0, ripple / 10.0);
    }
    const double p = port_target / remaining;
    const double peak = spec.rings[selected[s]].peak_drop_efficiency;
    if (p > peak + cfg.equalization_tolerance)
      throw InfeasiblePlanError(
          "plan_multicast: ring " + std::to_string(selected[s] + 1) +
          " would need drop fraction " + std::to_string(p) +
          " above its peak efficiency " + std::to_string(peak));
    stage_fraction[s] = std::min(p, peak);
    sol.port_fractions.push_back(port_target);
    remaining -= port_target;
  }

  const double guard_nm = units::span_nm(cfg.guard_band_ghz, req.input_wavelength_nm);
  SwitchPlan plan;
  plan.reconfiguration_latency_us = cfg.reconfiguration_latency_us;
  std::size_t sel_pos = 0;
  for (int i = 0; i < device::kNumPorts; ++i) {
    const device::RingSpec& ring = spec.rings[i];
    if (!req.route_bitmap[i]) {
      plan.rings.push_back(make_ring_plan(ring, RingRole::kParked,
                                          parked_shift(ring, req.input_wavelength_nm, guard_nm),
                                          req.input_wavelength_nm));
      continue;
    }
    const double p = stage_fraction[sel_pos];
    const double peak = ring.peak_drop_efficiency;
    // Lorentzian inversion: |Hd|^2 = peak / (1 + (2 d / bw)^2) = p. The
    // device model's FSR-periodic detuning deviates from the Lorentzian by
    // <0.5% at these offsets, well inside the equalization tolerance.
    const double delta_ghz = 0.5 * ring.bw_3db_ghz * std::sqrt(std::max(peak / p - 1.0, 0.0));
    const double delta_nm = units::span_nm(delta_ghz, req.input_wavelength_nm);
    // Symmetric Lorentzian: either side works; take the power-minimal shift.
    const double shift_plus =
        mod_pos(req.input_wavelength_nm + delta_nm - ring.zero_bias_resonance_nm, ring.fsr_nm);
    const double shift_minus =
        mod_pos(req.input_wavelength_nm - delta_nm - ring.zero_bias_resonance_nm, ring.fsr_nm);
    const double shift = std::min(shift_plus, shift_minus);
    RingPlan rp = make_ring_plan(ring, RingRole::kDrop, shift, req.input_wavelength_nm);
    rp.drop_fraction = sol.port_fractions[sel_pos];
    plan.rings.push_back(rp);
    sol.detunings_ghz.push_back(rp.detuning_ghz);
    ++sel_pos;
  }
  plan.multicast = std::move(sol);
  finalize_energy(plan, spec, req.bitrate_gbps);
  return plan;
}

SwitchPlan plan_route(const RouteRequest& req, const device::DeviceSpec& spec,
                      const PlannerConfig& cfg) {
  return req.popcount() == 1 ? plan_unicast(req, spec, cfg) : plan_multicast(req, spec, cfg);
}

EnergyReport plan_energy(const SwitchPlan& plan, const device::DeviceSpec& spec,
                         double bitrate_gbps) {
  if (bitrate_gbps <= 0.0) throw std::invalid_argument("plan_energy: bitrate must be positive");
  EnergyReport rep;
  double shift_sum = 0.0;
  for (const auto& rp : plan.rings) shift_sum += rp.shift_nm;
  rep.total_power_mw = shift_sum / spec.tuning_efficiency_nm_per_mw;
  rep.energy_fj_per_bit = rep.total_power_mw / bitrate_gbps * 1e3;
  return rep;
}

VerifyReport verify_plan(const SwitchPlan& plan, const device::DeviceSpec& spec,
                         double band_center_nm, double band_width_ghz,
                         const VerifyThresholds& thresholds) {
  constexpr int kGridPoints = 257;
  std::vector<double> grid(kGridPoints);
  const double f0 = units::freq_ghz(band_center_nm);
  for (int i = 0; i < kGridPoints; ++i)
    grid[i] = f0 + band_width_ghz * (static_cast<double>(i) / (kGridPoints - 1) - 0.5);

  // Crosstalk is a property of the switching core; evaluate it with coupling
  // losses stripped so the -dB numbers are relative to the chip input.
  device::DeviceSpec core = spec;
  core.input_coupling_loss_db = 0.0;
  core.per_port_coupling_loss_db = 0.0;

  const auto states = plan.to_states(spec);
  VerifyReport rep;
  double sel_min_db = 1e9, sel_max_db = -1e9;
  double worst_loss_db = -1e9;
  for (int port = 1; port <= device::kNumPorts; ++port) {
    const auto lossy = device::device_port_response(spec, states, port, grid,
                                                    device::Direction::kForward);
    const auto clean = device::device_port_response(core, states, port, grid,
                                                    device::Direction::kForward);
    double mean_lossy = 0.0, mean_clean = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      mean_lossy += std::norm(lossy.h[i]);
      mean_clean += std::norm(clean.h[i]);
    }
    mean_lossy /= static_cast<double>(grid.size());
    mean_clean /= static_cast<double>(grid.size());
    if (plan.selects_port(port)) {
      const double il = -units::lin_to_db(mean_lossy);
      worst_loss_db = std::max(worst_loss_db, il);
      const double p_db = units::lin_to_db(mean_clean);
      sel_min_db = std::min(sel_min_db, p_db);
      sel_max_db = std::max(sel_max_db, p_db);
    } else {
      rep.worst_crosstalk_db = std::max(rep.worst_crosstalk_db, units::lin_to_db(mean_clean));
    }
  }
  rep.selected_insertion_loss_db = worst_loss_db;
  rep.imbalance_db = (sel_max_db > sel_min_db) ? sel_max_db - sel_min_db : 0.0;
  rep.crosstalk_ok = rep.worst_crosstalk_db <= thresholds.crosstalk_db;
  rep.imbalance_ok = rep.imbalance_db <= thresholds.imbalance_db;
  return rep;
}

}  // namespace ringsw::control

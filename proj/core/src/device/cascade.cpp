#include "ringsw/device/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ringsw::device {

void DeviceSpec::validate() const {
  if (rings.size() != kNumPorts)
    throw std::invalid_argument("device: expected exactly 8 rings");
  for (const auto& r : rings) r.validate();
  for (std::size_t i = 1; i < rings.size(); ++i) {
    if (rings[i].zero_bias_resonance_nm <= rings[i - 1].zero_bias_resonance_nm)
      throw std::invalid_argument("device: zero-bias resonances must be strictly increasing");
  }
  if (tuning_efficiency_nm_per_mw <= 0.0)
    throw std::invalid_argument("device: tuning efficiency must be positive");
  if (heater_resistance_ohm <= 0.0)
    throw std::invalid_argument("device: heater resistance must be positive");
}

DeviceSpec DeviceSpec::default_device(double band_nm) {
  // Per-band 3-dB bandwidth calibration tables (GHz).
  static constexpr std::array<double, 8> kBw1539 = {79, 81, 83, 80, 82, 81, 79, 83};
  static constexpr std::array<double, 8> kBw1552 = {76, 77, 79, 76, 78, 77, 76, 79};
  static constexpr std::array<double, 8> kBw1563 = {84, 86, 86, 85, 86, 85, 84, 86};
  static constexpr std::array<double, 8> kBwGeneric = {80, 85, 83, 76, 85, 82, 84, 86};

  const std::array<double, 8>* bw = &kBwGeneric;
  if (band_nm != 0.0) {
    const double d39 = std::abs(band_nm - 1539.0);
    const double d52 = std::abs(band_nm - 1552.0);
    const double d63 = std::abs(band_nm - 1563.0);
    if (d39 <= d52 && d39 <= d63)
      bw = &kBw1539;
    else if (d52 <= d63)
      bw = &kBw1552;
    else
      bw = &kBw1563;
  }

  DeviceSpec dev;
  dev.rings.resize(kNumPorts);
  for (int i = 0; i < kNumPorts; ++i) {
    RingSpec& r = dev.rings[i];
    r.index = i + 1;
    r.zero_bias_resonance_nm = 1531.00 + 1.27 * i;
    r.fsr_nm = 13.0;
    r.bw_3db_ghz = (*bw)[i];
    // 0.266 nm/mW into a 600 ohm heater: shift = 0.266 * 1000 * V^2 / 600.
    r.thermo_c2_nm_per_v2 = 0.266 * 1000.0 / 600.0;
    r.thermo_c1_nm_per_v = 0.0;
    r.max_voltage_v = 6.0;
    r.peak_drop_efficiency = 0.95;
    r.through_extinction_floor_db = -25.0;
  }
  dev.validate();
  return dev;
}

PortResponse device_port_response(const DeviceSpec& spec,
                                  const std::vector<RingState>& states, int port,
                                  const std::vector<double>& freq_grid_ghz,
                                  Direction direction) {
  if (states.size() != spec.rings.size())
    throw std::invalid_argument("device_port_response: incomplete ring states");
  if (port != kThroughPort && (port < 1 || port > kNumPorts))
    throw std::domain_error("device_port_response: unknown port " + std::to_string(port));

  const double coupling_db = spec.input_coupling_loss_db + spec.per_port_coupling_loss_db;
  const double coupling_amp = std::pow(10.0, -coupling_db / 20.0);

  PortResponse resp;
  resp.port = port;
  resp.freq_ghz = freq_grid_ghz;
  resp.h.resize(freq_grid_ghz.size());

  const int last = (port == kThroughPort) ? kNumPorts : port;
  for (std::size_t fi = 0; fi < freq_grid_ghz.size(); ++fi) {
    const double f = freq_grid_ghz[fi];
    std::complex<double> h = 1.0;
    auto element = [&](int ring_idx, bool is_drop) {
      const RingSpec& rs = spec.rings[ring_idx];
      const RingState& st = states[ring_idx];
      return is_drop ? drop_response(st, rs, f) : through_response(st, rs, f);
    };
    // The device is a reciprocal linear cascade: the reverse transfer is the
    // product of the same ring factors. Accumulate both directions in cascade
    // order so they also round identically.
    (void)direction;
    for (int j = 0; j < last - 1; ++j) h *= element(j, false);
    h *= element(last - 1, port != kThroughPort);
    resp.h[fi] = h * coupling_amp;
  }
  return resp;
}

SpectrumDump dump_spectrum(const DeviceSpec& spec, const std::vector<RingState>& states,
                           double resolution_pm, double start_nm, double stop_nm) {
  if (resolution_pm <= 0.0)
    throw std::invalid_argument("dump_spectrum: resolution must be positive");
  if (stop_nm <= start_nm)
    throw std::invalid_argument("dump_spectrum: empty wavelength range");

  SpectrumDump dump;
  dump.resolution_pm = resolution_pm;
  const double step_nm = resolution_pm * 1e-3;
  const auto n = static_cast<std::size_t>(std::floor((stop_nm - start_nm) / step_nm)) + 1;
  dump.wavelength_nm.resize(n);
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    dump.wavelength_nm[i] = start_nm + step_nm * static_cast<double>(i);
    grid[i] = units::freq_ghz(dump.wavelength_nm[i]);
  }
  for (int port = 0; port <= kNumPorts; ++port) {
    const PortResponse r = device_port_response(
        spec, states, port == 0 ? kThroughPort : port, grid, Direction::kForward);
    auto& out = dump.power_db[port];
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = units::lin_to_db(std::norm(r.h[i]));
  }
  return dump;
}

void write_spectrum_csv(const SpectrumDump& dump, std::ostream& os) {
  os << "wavelength_nm,port,power_db\n";
  char buf[96];
  for (int port = 0; port <= kNumPorts; ++port) {
    for (std::size_t i = 0; i < dump.wavelength_nm.size(); ++i) {
      if (port == 0)
        std::snprintf(buf, sizeof(buf), "%.5f,thru,%.4f\n", dump.wavelength_nm[i],
                      dump.power_db[port][i]);
      else
        std::snprintf(buf, sizeof(buf), "%.5f,%d,%.4f\n", dump.wavelength_nm[i], port,
                      dump.power_db[port][i]);
      os << buf;
    }
  }
}

}  // namespace ringsw::device

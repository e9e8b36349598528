#pragma once

#include "ringsw/device/ring.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace ringsw::device {

inline constexpr int kThroughPort = 0;
inline constexpr int kNumPorts = 8;

enum class Direction { kForward, kReverse };

// The 1x8 cascade: ring order equals propagation order from the input port.
struct DeviceSpec {
  std::vector<RingSpec> rings;
  double input_coupling_loss_db = 10.0;
  double per_port_coupling_loss_db = 10.0;
  double tuning_efficiency_nm_per_mw = 0.266;
  double heater_resistance_ohm = 600.0;

  void validate() const;

  // Default calibration: ring 1 at 1531.00 nm, 1.27 nm spacing, FSR 13 nm,
  // 20 dB fiber-to-fiber excess loss. band_nm in {1539, 1552, 1563} selects
  // the per-band 3-dB bandwidth table; any other value uses the generic table.
  static DeviceSpec default_device(double band_nm = 0.0);
};

// Complex amplitude transfer of one output port on a frequency grid.
struct PortResponse {
  int port = kThroughPort;  // 1..8, or kThroughPort
  std::vector<double> freq_ghz;  // absolute frequency
  cvec h;
};

// Whole-device transfer at the selected port. FORWARD: input coupling, the
// through responses of all rings earlier in the cascade, the drop response of
// the selected ring, port coupling. REVERSE traverses the cascade backwards;
// element models are reciprocal so the two directions agree pointwise.
PortResponse device_port_response(const DeviceSpec& spec,
                                  const std::vector<RingState>& states, int port,
                                  const std::vector<double>& freq_grid_ghz,
                                  Direction direction);

struct SpectrumDump {
  std::vector<double> wavelength_nm;
  // power_db[0] = through port, power_db[k] = drop port k.
  std::array<std::vector<double>, kNumPorts + 1> power_db;
  double resolution_pm = 1.44;
};

// Tabulated per-port power spectra over [start, stop] nm at the given
// resolution (default 1.44 pm).
SpectrumDump dump_spectrum(const DeviceSpec& spec, const std::vector<RingState>& states,
                           double resolution_pm, double start_nm, double stop_nm);

// CSV rows: wavelength_nm,port,power_db ("thru" for the through port).
void write_spectrum_csv(const SpectrumDump& dump, std::ostream& os);

}  // namespace ringsw::device

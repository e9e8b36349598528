#pragma once

#include "ringsw/units.hpp"

#include <complex>
#include <vector>

namespace ringsw::device {

// Static geometry and calibration of a single ring.
struct RingSpec {
  int index = 0;  // 1..8, cascade order from the input port
  double zero_bias_resonance_nm = 0.0;
  double fsr_nm = 13.0;
  double bw_3db_ghz = 80.0;
  double thermo_c2_nm_per_v2 = 0.44333;  // red shift = c2*V^2 + c1*V
  double thermo_c1_nm_per_v = 0.0;
  double max_voltage_v = 6.0;
  double peak_drop_efficiency = 0.95;
  double through_extinction_floor_db = -25.0;

  // Admissible 3-dB bandwidth window enforced by validate().
  static constexpr double kMinBw_ghz = 50.0;
  static constexpr double kMaxBw_ghz = 120.0;

  void validate() const;  // throws std::invalid_argument

  double fsr_ghz() const {
    return units::span_ghz(fsr_nm, zero_bias_resonance_nm);
  }
  // Largest reachable red shift at max bias.
  double max_shift_nm() const {
    return thermo_c2_nm_per_v2 * max_voltage_v * max_voltage_v +
           thermo_c1_nm_per_v * max_voltage_v;
  }
};

// Applied bias and the resulting resonance position.
struct RingState {
  double voltage_v = 0.0;
  double effective_resonance_nm = 0.0;
};

// Red shift (nm) at the given heater bias; throws std::domain_error naming the
// ring when the voltage is out of [0, max_voltage].
double resonance_shift(const RingSpec& spec, double voltage_v);

RingState make_state(const RingSpec& spec, double voltage_v);

struct ThermoFit {
  double c2 = 0.0;
  double c1 = 0.0;
  double residual_rms_nm = 0.0;
};

struct ThermoSample {
  double voltage_v;
  double shift_nm;
};

// Zero-intercept least-squares fit of shift = c2*V^2 + c1*V.
// Throws FitError on fewer than 3 samples or a rank-deficient design.
ThermoFit fit_thermo_optic(const std::vector<ThermoSample>& samples);

// FSR-periodic pole detuning variable at an absolute frequency (GHz):
// 2*delta/bw near the closest resonance image (wrapped in the wavelength
// domain, where the FSR is constant), diverging at the +-FSR/2 wrap so the
// responses stay continuous there. detuning_for_pole is the inverse on the
// principal branch: the frequency offset (GHz) from a resonance near at_nm
// that produces pole variable x.
double pole_detuning(const RingState& state, const RingSpec& spec, double freq_ghz);
double detuning_for_pole(const RingSpec& spec, double x, double at_nm);

// Lorentzian drop-port amplitude at absolute frequency freq_ghz:
// H = sqrt(peak) / (1 + j*x) with the FSR-periodic detuning x above.
std::complex<double> drop_response(const RingState& state, const RingSpec& spec,
                                   double freq_ghz);

// Energy complement of the drop response in notch form (eps + jx)/(1 + jx),
// with eps^2 bounded below by the extinction floor.
std::complex<double> through_response(const RingState& state, const RingSpec& spec,
                                      double freq_ghz);

}  // namespace ringsw::device

#include "ringsw/device/ring.hpp"

#include "ringsw/errors.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace ringsw::device {

void RingSpec::validate() const {
  const std::string tag = "ring " + std::to_string(index) + ": ";
  if (fsr_nm <= 0.0) throw std::invalid_argument(tag + "fsr must be positive");
  if (bw_3db_ghz < kMinBw_ghz || bw_3db_ghz > kMaxBw_ghz)
    throw std::invalid_argument(tag + "bw_3db outside admissible range");
  if (thermo_c2_nm_per_v2 < 0.0 || thermo_c1_nm_per_v < 0.0)
    throw std::invalid_argument(tag + "thermo coefficients must be nonnegative");
  if (peak_drop_efficiency <= 0.0 || peak_drop_efficiency > 1.0)
    throw std::invalid_argument(tag + "peak_drop_efficiency must be in (0, 1]");
  if (zero_bias_resonance_nm <= 0.0)
    throw std::invalid_argument(tag + "zero_bias_resonance must be positive");
  if (max_voltage_v <= 0.0)
    throw std::invalid_argument(tag + "max_voltage must be positive");
}

double resonance_shift(const RingSpec& spec, double voltage_v) {
  if (voltage_v < 0.0 || voltage_v > spec.max_voltage_v) {
    throw std::domain_error("ring " + std::to_string(spec.index) +
                            ": voltage " + std::to_string(voltage_v) +
                            " V outside [0, " + std::to_string(spec.max_voltage_v) + "]");
  }
  return spec.thermo_c2_nm_per_v2 * voltage_v * voltage_v +
         spec.thermo_c1_nm_per_v * voltage_v;
}

RingState make_state(const RingSpec& spec, double voltage_v) {
  RingState s;
  s.voltage_v = voltage_v;
  s.effective_resonance_nm = spec.zero_bias_resonance_nm + resonance_shift(spec, voltage_v);
  return s;
}

ThermoFit fit_thermo_optic(const std::vector<ThermoSample>& samples) {
  if (samples.size() < 3) throw FitError("fit_thermo_optic: need at least 3 samples");
  std::set<double> voltages;
  for (const auto& s : samples) {
    voltages.insert(s.voltage_v);
    if (s.shift_nm < 0.0) throw FitError("fit_thermo_optic: negative shift sample");
    if (s.voltage_v == 0.0 && s.shift_nm != 0.0)
      throw FitError("fit_thermo_optic: nonzero shift at zero bias");
  }
  if (voltages.size() < 3) throw FitError("fit_thermo_optic: need 3 distinct voltages");

  // Normal equations for shift = c2*V^2 + c1*V (intercept forced to zero).
  double s4 = 0, s3 = 0, s2 = 0, b2 = 0, b1 = 0;
  for (const auto& s : samples) {
    const double v = s.voltage_v;
    const double v2 = v * v;
    s4 += v2 * v2;
    s3 += v2 * v;
    s2 += v2;
    b2 += v2 * s.shift_nm;
    b1 += v * s.shift_nm;
  }
  const double det = s4 * s2 - s3 * s3;
  const double scale = std::max(s4 * s2, 1e-300);
  if (std::abs(det) < 1e-12 * scale) throw FitError("fit_thermo_optic: rank-deficient design");

  ThermoFit fit;
  fit.c2 = (b2 * s2 - b1 * s3) / det;
  fit.c1 = (s4 * b1 - s3 * b2) / det;

  double ss = 0.0;
  for (const auto& s : samples) {
    const double r = s.shift_nm - (fit.c2 * s.voltage_v * s.voltage_v + fit.c1 * s.voltage_v);
    ss += r * r;
  }
  fit.residual_rms_nm = std::sqrt(ss / static_cast<double>(samples.size()));
  return fit;
}

namespace {

double wrap_to_half_fsr(double delta, double period) {
  double d = std::fmod(delta + 0.5 * period, period);
  if (d < 0.0) d += period;
  return d - 0.5 * period;
}

}  // namespace

double pole_detuning(const RingState& state, const RingSpec& spec, double freq_ghz) {
  // The resonance comb repeats every fsr_nm in wavelength, so the detuning is
  // wrapped in the wavelength domain (matching how routes are planned modulo
  // the FSR) and the remainder converted to a local frequency offset. The tan
  // mapping makes the single-pole response periodic: x = 2*delta/bw is its
  // small-detuning limit, and the response stays continuous across the
  // +-FSR/2 wrap (the drop amplitude goes to zero there instead of jumping).
  // The scale is anchored so |x| = 1 exactly at delta = +-bw/2, keeping the
  // half-power width equal to the configured bandwidth.
  const double lam = units::wavelength_nm(freq_ghz);
  const double dl = wrap_to_half_fsr(lam - state.effective_resonance_nm, spec.fsr_nm);
  const double delta_ghz = units::span_ghz(-dl, lam);
  const double fsr_ghz = units::span_ghz(spec.fsr_nm, lam);
  return std::tan(std::numbers::pi * delta_ghz / fsr_ghz) /
         std::tan(std::numbers::pi * spec.bw_3db_ghz / (2.0 * fsr_ghz));
}

double detuning_for_pole(const RingSpec& spec, double x, double at_nm) {
  // Inverse of pole_detuning on the principal branch, local to at_nm.
  const double fsr_ghz = units::span_ghz(spec.fsr_nm, at_nm);
  return (fsr_ghz / std::numbers::pi) *
         std::atan(x * std::tan(std::numbers::pi * spec.bw_3db_ghz / (2.0 * fsr_ghz)));
}

std::complex<double> drop_response(const RingState& state, const RingSpec& spec,
                                   double freq_ghz) {
  const double x = pole_detuning(state, spec, freq_ghz);
  return std::sqrt(spec.peak_drop_efficiency) / std::complex<double>(1.0, x);
}

std::complex<double> through_response(const RingState& state, const RingSpec& spec,
                                      double freq_ghz) {
  const double x = pole_detuning(state, spec, freq_ghz);
  const double floor_lin =
      std::isinf(spec.through_extinction_floor_db) && spec.through_extinction_floor_db < 0
          ? 0.0
          : units::db_to_lin(spec.through_extinction_floor_db);
  // Notch form (eps + jx)/(1 + jx): magnitude 1 - peak/(1+x^2) as for a
  // lossless add-drop filter, but the numerator zero keeps the phase swing
  // localized around resonance instead of jumping by pi at the half-FSR wrap.
  const double eps = std::sqrt(std::max(1.0 - spec.peak_drop_efficiency, floor_lin));
  return std::complex<double>(eps, x) / std::complex<double>(1.0, x);
}

}  // namespace ringsw::device

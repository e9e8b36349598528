#include "ringsw/phy/channel.hpp"

#include "ringsw/dsp/resample.hpp"
#include "ringsw/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringsw::phy {

OpticalField propagate_fiber(const OpticalField& in, const FiberSpec& fiber) {
  if (in.samples.empty()) throw std::invalid_argument("propagate_fiber: empty field");
  OpticalField out = in;

  const double d_si = fiber.dispersion_ps_nm_km * 1e-6;  // s/m^2
  const double lambda_m = in.center_wavelength_nm() * 1e-9;
  const double length_m = fiber.length_km * 1e3;
  const double k = std::numbers::pi * d_si * lambda_m * lambda_m * length_m / units::kC_m_s;

  cvec spec = fft(in.samples);
  const auto freqs = fft_freqs_ghz(spec.size(), in.sample_rate_ghz);
  const double att = std::pow(10.0, -fiber.attenuation_db_km * fiber.length_km / 20.0);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double f_hz = freqs[i] * 1e9;
    spec[i] *= att * std::polar(1.0, k * f_hz * f_hz);
  }
  out.samples = ifft(spec);
  return out;
}

OpticalField amplify(const OpticalField& in, double target_power_dbm, double nf_db,
                     Rng& rng) {
  const double ms = in.mean_square();
  if (ms <= 0.0) throw std::invalid_argument("amplify: zero-power input");
  OpticalField out = in;

  const double gain = units::dbm_to_mw(target_power_dbm - in.power_ref_dbm) / ms;
  if (gain < 1.0) {
    // Attenuation needs no amplifier; plain VOA, no added noise.
    out.set_power_dbm(target_power_dbm);
    return out;
  }
  const double g_amp = std::sqrt(gain);
  for (auto& v : out.samples) v *= g_amp;

  // Single-polarization ASE: PSD = (G-1) * NF/2 * h*nu, expressed in the
  // field's normalized power units.
  const double psd_w_hz = (gain - 1.0) * 0.5 * units::db_to_lin(nf_db) *
                          units::photon_energy_j(in.center_wavelength_nm());
  const double ref_w = units::dbm_to_mw(in.power_ref_dbm) * 1e-3;
  const double ase_ms = psd_w_hz * in.sample_rate_ghz * 1e9 / ref_w;
  const double sigma = std::sqrt(ase_ms / 2.0);
  for (auto& v : out.samples) v += rng.cgaussian(sigma);
  return out;
}

OpticalField add_noise_floor(const OpticalField& in, double psd_dbm_per_ghz, Rng& rng) {
  OpticalField out = in;
  const double noise_mw = units::dbm_to_mw(psd_dbm_per_ghz) * in.sample_rate_ghz;
  const double ms = noise_mw / units::dbm_to_mw(in.power_ref_dbm);
  const double sigma = std::sqrt(ms / 2.0);
  for (auto& v : out.samples) v += rng.cgaussian(sigma);
  return out;
}

OpticalField apply_switch(const OpticalField& in, const device::DeviceSpec& spec,
                          const control::SwitchPlan& plan, int port,
                          device::Direction direction) {
  if (!plan.selects_port(port))
    throw std::invalid_argument("apply_switch: port " + std::to_string(port) +
                                " is not selected by the plan");
  const auto states = plan.to_states(spec);

  cvec field = fft(in.samples);
  auto freqs = fft_freqs_ghz(field.size(), in.sample_rate_ghz);
  for (auto& f : freqs) f += in.center_freq_ghz;
  const auto resp = device::device_port_response(spec, states, port, freqs, direction);
  for (std::size_t i = 0; i < field.size(); ++i) field[i] *= resp.h[i];

  OpticalField out = in;
  out.samples = ifft(field);
  return out;
}

BasebandStream coherent_receive(const OpticalField& in, double lo_freq_ghz,
                                double lo_linewidth_khz, double freq_offset_ghz,
                                double adc_rate_ghz, Rng& rng) {
  if (in.samples.empty()) throw std::invalid_argument("coherent_receive: empty field");
  if (adc_rate_ghz <= 0.0) throw std::invalid_argument("coherent_receive: bad ADC rate");
  const double fs = in.sample_rate_ghz;
  const double delta = lo_freq_ghz - in.center_freq_ghz;
  if (std::abs(delta) > fs / 2.0)
    throw std::domain_error("coherent_receive: LO outside the sampled band");

  // Residual offset models the LO frequency error left after coarse tuning.
  const double w = 2.0 * std::numbers::pi * (delta + freq_offset_ghz) / fs;
  const double inc_sigma =
      std::sqrt(2.0 * std::numbers::pi * lo_linewidth_khz * 1e-6 / fs);

  cvec mixed(in.samples.size());
  double lo_phase = 0.0;
  for (std::size_t t = 0; t < in.samples.size(); ++t) {
    mixed[t] = in.samples[t] * std::polar(1.0, -(w * static_cast<double>(t) + lo_phase));
    if (inc_sigma > 0.0) lo_phase += rng.gaussian(inc_sigma);
  }

  BasebandStream out;
  out.rate_ghz = adc_rate_ghz;
  out.samples = dsp::resample(mixed, fs, adc_rate_ghz);
  return out;
}

}  // namespace ringsw::phy

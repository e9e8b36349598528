#include "ringsw/phy/superchannel.hpp"

#include "ringsw/dsp/evm.hpp"
#include "ringsw/dsp/rrc.hpp"
#include "ringsw/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringsw::phy {
namespace {

// Tone flatness profile (dB, cyclic); spread of the first six entries is
// 4.0 dB, inside the 3-5 dB window. Edge tones are the weakest, as is
// typical for a gain-switched comb.
constexpr double kToneProfileDb[8] = {-3.0, -1.2, 0.0, -0.4, -1.8, -4.0, -1.5, -3.0};

}  // namespace

void OpticalField::set_power_dbm(double target_dbm) {
  const double ms = mean_square();
  if (ms <= 0.0) return;
  const double target_lin = units::dbm_to_mw(target_dbm - power_ref_dbm);
  const double g = std::sqrt(target_lin / ms);
  for (auto& v : samples) v *= g;
}

std::vector<cvec> generate_comb(const SuperchannelSpec& spec, const NoiseSpec& noise,
                                std::size_t n_samples, Rng& rng) {
  if (spec.n_sub < 1) throw std::invalid_argument("generate_comb: need n_sub >= 1");
  const double fs = spec.sample_rate_ghz();
  const double ts = 1.0 / fs;

  // Shared master phase-noise walk (injection-locked comb).
  std::vector<double> phase(n_samples, 0.0);
  const double inc_var = 2.0 * std::numbers::pi * noise.master_linewidth_khz * 1e-6 / fs;
  if (inc_var > 0.0) {
    const double sigma = std::sqrt(inc_var);
    double acc = 0.0;
    for (std::size_t t = 0; t < n_samples; ++t) {
      phase[t] = acc;
      acc += rng.gaussian(sigma);
    }
  }

  // Normalize tone powers to sum to one.
  std::vector<double> tone_power(spec.n_sub);
  double sum = 0.0;
  for (int i = 0; i < spec.n_sub; ++i) {
    tone_power[i] = units::db_to_lin(kToneProfileDb[i % 8]);
    sum += tone_power[i];
  }
  for (auto& p : tone_power) p /= sum;

  const double rbw_ghz =
      units::span_ghz(spec.ocnr_rbw_pm * 1e-3, spec.center_wavelength_nm);
  const double ocnr_lin = std::isinf(spec.ocnr_db) ? 0.0 : units::db_to_lin(spec.ocnr_db);

  // The noise floors of all tones overlap, so the local floor an OSA would
  // measure is their sum. Sizing the aggregate floor off the weakest tone
  // makes the configured OCNR the worst-case measured value across tones.
  double min_power = tone_power[0];
  for (double p : tone_power) min_power = std::min(min_power, p);
  const double total_psd = ocnr_lin > 0.0 ? min_power / (ocnr_lin * rbw_ghz) : 0.0;

  std::vector<cvec> tones(spec.n_sub);
  for (int i = 0; i < spec.n_sub; ++i) {
    const double amp = std::sqrt(tone_power[i]);
    const double w = 2.0 * std::numbers::pi * spec.sub_offset_ghz(i) * ts;
    double noise_sigma = 0.0;
    if (total_psd > 0.0) {
      const double psd = total_psd * tone_power[i];  // tone's share of the floor, per GHz
      noise_sigma = std::sqrt(psd * fs / 2.0);
    }
    tones[i].resize(n_samples);
    for (std::size_t t = 0; t < n_samples; ++t) {
      const double ph = w * static_cast<double>(t) + phase[t];
      std::complex<double> v{amp * std::cos(ph), amp * std::sin(ph)};
      if (noise_sigma > 0.0) v += rng.cgaussian(noise_sigma);
      tones[i][t] = v;
    }
  }
  return tones;
}

cvec subchannel_symbols(const std::vector<std::uint8_t>& bits, const SuperchannelSpec& spec,
                        int sub_index, std::size_t n_symbols) {
  const std::size_t per_sub = n_symbols * 2;
  if (bits.size() != per_sub * static_cast<std::size_t>(spec.n_sub))
    throw std::invalid_argument("subchannel bits: count mismatch");
  std::vector<std::uint8_t> chunk(bits.begin() + sub_index * per_sub,
                                  bits.begin() + (sub_index + 1) * per_sub);
  return dsp::map_qpsk(chunk);
}

std::vector<cvec> modulate_subchannels(const std::vector<cvec>& tones,
                                       const std::vector<std::uint8_t>& bits,
                                       const SuperchannelSpec& spec,
                                       double odd_delay_samples) {
  if (static_cast<int>(tones.size()) != spec.n_sub)
    throw std::invalid_argument("modulate_subchannels: tone count mismatch");
  const std::size_t n_samples = tones[0].size();
  const int sps = spec.sim_samples_per_symbol;
  const std::size_t n_symbols = n_samples / sps;
  if (n_symbols * static_cast<std::size_t>(sps) != n_samples)
    throw std::invalid_argument("modulate_subchannels: sample count not a symbol multiple");
  if (bits.size() != static_cast<std::size_t>(spec.n_sub) * n_symbols * 2)
    throw std::invalid_argument("modulate_subchannels: bit count mismatch");

  std::vector<cvec> subs(spec.n_sub);
  for (int i = 0; i < spec.n_sub; ++i) {
    const cvec symbols = subchannel_symbols(bits, spec, i, n_symbols);
    cvec wave(n_samples, {0.0, 0.0});
    for (std::size_t k = 0; k < n_symbols; ++k) wave[k * sps] = symbols[k];
    wave = dsp::apply_sqrt_raised_cosine(wave, spec.sample_rate_ghz(), spec.baud_gbaud,
                                         spec.rolloff);
    if (i % 2 == 1 && odd_delay_samples != 0.0)
      wave = fractional_delay(wave, odd_delay_samples);
    double ms = 0.0;
    for (const auto& v : wave) ms += std::norm(v);
    ms /= static_cast<double>(n_samples);
    const double g = ms > 0.0 ? 1.0 / std::sqrt(ms) : 1.0;
    subs[i].resize(n_samples);
    for (std::size_t t = 0; t < n_samples; ++t) subs[i][t] = wave[t] * g * tones[i][t];
  }
  return subs;
}

double decorrelation_delay_samples(double delay_fiber_m, double group_index,
                                   double sample_rate_ghz) {
  if (delay_fiber_m < 0.0) throw std::invalid_argument("decorrelate: negative delay");
  const double delay_s = delay_fiber_m * group_index / units::kC_m_s;
  return delay_s * sample_rate_ghz * 1e9;
}

OpticalField combine_subchannels(const std::vector<cvec>& subs,
                                 const SuperchannelSpec& spec) {
  if (subs.empty()) throw std::invalid_argument("combine_subchannels: empty");
  OpticalField f;
  f.sample_rate_ghz = spec.sample_rate_ghz();
  f.center_freq_ghz = units::freq_ghz(spec.center_wavelength_nm);
  f.power_ref_dbm = 0.0;
  f.samples.assign(subs[0].size(), {0.0, 0.0});
  for (const auto& s : subs) {
    if (s.size() != f.samples.size())
      throw std::invalid_argument("combine_subchannels: length mismatch");
    for (std::size_t t = 0; t < s.size(); ++t) f.samples[t] += s[t];
  }
  return f;
}

}  // namespace ringsw::phy

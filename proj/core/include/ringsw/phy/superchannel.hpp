#pragma once

#include "ringsw/phy/field.hpp"
#include "ringsw/rng.hpp"

#include <cstdint>
#include <vector>

namespace ringsw::phy {

struct SuperchannelSpec {
  int n_sub = 6;
  double spacing_ghz = 12.5;
  double baud_gbaud = 10.0;
  double rolloff = 0.001;
  double center_wavelength_nm = 1552.0;
  double ocnr_db = 50.0;          // per tone, in a 1.44 pm RBW
  double ocnr_rbw_pm = 1.44;
  int sim_samples_per_symbol = 16;

  double sample_rate_ghz() const { return baud_gbaud * sim_samples_per_symbol; }
  double occupied_bandwidth_ghz() const {
    return n_sub * spacing_ghz + baud_gbaud * (1.0 + rolloff);
  }
  // Baseband offset of subchannel i (0-based).
  double sub_offset_ghz(int i) const {
    return (static_cast<double>(i) - 0.5 * (n_sub - 1)) * spacing_ghz;
  }
  double bits_per_symbol() const { return 2.0; }  // QPSK
  double aggregate_rate_gbps(int n = 0) const {
    return (n > 0 ? n : n_sub) * baud_gbaud * bits_per_symbol();
  }
};

struct NoiseSpec {
  double master_linewidth_khz = 100.0;
  double lo_linewidth_khz = 80.0;
  double edfa_nf_db = 5.0;
  double target_received_dbm = -25.0;
  // Equivalent receiver-side noise floor applied at the -25 dBm operating
  // point; dominates the sweep noise budget.
  double rx_noise_psd_dbm_per_ghz = -64.0;
  std::uint64_t seed = 1;
};

// Phase-locked comb tones: deterministic flatness profile (3-5 dB window),
// one shared Wiener phase-noise process (injection locking), per-tone white
// noise floor set by the OCNR at the configured RBW. Tone powers sum to 1.
std::vector<cvec> generate_comb(const SuperchannelSpec& spec, const NoiseSpec& noise,
                                std::size_t n_samples, Rng& rng);

// Independent Gray-mapped QPSK per subchannel, root-raised-cosine shaped.
// bits.size() must equal n_sub * n_symbols * 2 where n_symbols =
// n_samples / sim_samples_per_symbol. Each returned stream is tone * shaped
// unit-power payload. odd_delay_samples decorrelates odd-indexed payloads
// (circular shift of the baseband wave, applied before the tone so the comb
// phase-noise trajectory stays continuous).
std::vector<cvec> modulate_subchannels(const std::vector<cvec>& tones,
                                       const std::vector<std::uint8_t>& bits,
                                       const SuperchannelSpec& spec,
                                       double odd_delay_samples = 0.0);

// Propagation delay of a decorrelation fiber patch, in samples.
double decorrelation_delay_samples(double delay_fiber_m, double group_index,
                                   double sample_rate_ghz);

OpticalField combine_subchannels(const std::vector<cvec>& subs,
                                 const SuperchannelSpec& spec);

// QPSK symbol stream of subchannel i implied by the bit block layout above.
cvec subchannel_symbols(const std::vector<std::uint8_t>& bits, const SuperchannelSpec& spec,
                        int sub_index, std::size_t n_symbols);

}  // namespace ringsw::phy

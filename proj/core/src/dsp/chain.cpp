#include "ringsw/dsp/chain.hpp"

#include "ringsw/dsp/resample.hpp"
#include "ringsw/dsp/rrc.hpp"
#include "ringsw/dsp/timing.hpp"
#include "ringsw/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace ringsw::dsp {

DspResult run_dsp_chain(const cvec& rx, double rx_rate_ghz, const cvec& tx_symbols,
                        const DspConfig& cfg) {
  if (tx_symbols.empty()) throw std::invalid_argument("run_dsp_chain: empty payload");

  const double fs = cfg.baud_ghz * cfg.samples_per_symbol;
  cvec x = resample(rx, rx_rate_ghz, fs);
  if (x.size() != tx_symbols.size() * static_cast<std::size_t>(cfg.samples_per_symbol))
    throw std::invalid_argument("run_dsp_chain: sample count does not match payload length");

  // The offset estimate runs on a matched-filtered copy (adjacent channels
  // suppressed) but the correction is applied before the in-place matched
  // filter so the shifted band edge is never clipped.
  DspResult res;
  const auto foc = estimate_frequency_offset(matched_filter(x, cfg.rolloff, cfg.baud_ghz, fs),
                                             fs, cfg.foc_search_ghz);
  res.freq_offset_ghz = foc.offset_ghz;
  res.foc_low_confidence = foc.low_confidence;
  x = remove_frequency_offset(x, foc.offset_ghz, fs);
  x = matched_filter(x, cfg.rolloff, cfg.baud_ghz, fs);

  // Deskew against the known shaped payload (composite raised cosine). Only
  // the sub-symbol residual is corrected here: whole-symbol lag is resolved by
  // the final cyclic alignment, and a large circular shift would rotate the
  // receiver phase-noise wrap discontinuity into the middle of the block.
  {
    cvec ref(x.size(), {0.0, 0.0});
    for (std::size_t k = 0; k < tx_symbols.size(); ++k)
      ref[k * cfg.samples_per_symbol] = tx_symbols[k];
    cvec R = fft(ref);
    const auto freqs = fft_freqs_ghz(R.size(), fs);
    for (std::size_t i = 0; i < R.size(); ++i)
      R[i] *= raised_cosine_freq(freqs[i], cfg.baud_ghz, cfg.rolloff);
    const double d = estimate_delay_samples(x, ifft(R));
    const double sps = static_cast<double>(cfg.samples_per_symbol);
    const double residual = d - sps * std::round(d / sps);
    x = fractional_delay(x, -residual);
  }

  const auto eq = adaptive_equalize(x, cfg.equalizer);
  res.equalizer_converged = eq.converged;

  const auto cpr = carrier_phase_recover(eq.symbols, cfg.cpr);
  res.cycle_slips = cpr.cycle_slips;

  auto aligned = align_to_reference(cpr.symbols, tx_symbols);
  res.cycle_slips += resolve_phase_ambiguity(aligned.aligned, tx_symbols, cfg.realign_block);
  res.symbols_used = aligned.aligned.size();
  res.evm_percent = compute_evm_percent(aligned.aligned, tx_symbols, cfg.min_symbols);
  res.ber_estimate = evm_to_ber(res.evm_percent);
  res.fec_pass = fec_pass(res.evm_percent);
  return res;
}

}  // namespace ringsw::dsp

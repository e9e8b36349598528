#pragma once

#include "ringsw/dsp/carrier.hpp"
#include "ringsw/dsp/equalizer.hpp"
#include "ringsw/dsp/evm.hpp"

namespace ringsw::dsp {

struct DspConfig {
  double baud_ghz = 10.0;
  double rolloff = 0.001;
  int samples_per_symbol = 2;  // after the DSP-side resample
  double foc_search_ghz = 1.0;  // frequency-offset search window, +- GHz
  EqualizerConfig equalizer;
  CprConfig cpr;
  std::size_t min_symbols = 1000;
  std::size_t realign_block = 1024;  // pi/2 ambiguity resolution granularity
};

struct DspResult {
  double evm_percent = 0.0;
  double ber_estimate = 0.0;
  bool fec_pass = false;
  std::size_t symbols_used = 0;
  double freq_offset_ghz = 0.0;
  bool foc_low_confidence = false;
  int cycle_slips = 0;
  bool equalizer_converged = false;
};

// Offline receiver chain: resample to 2 samples/symbol, matched filter,
// coarse frequency-offset compensation, adaptive equalization, carrier phase
// recovery, deskew/alignment against the known payload, EVM and BER.
DspResult run_dsp_chain(const cvec& rx, double rx_rate_ghz, const cvec& tx_symbols,
                        const DspConfig& cfg = {});

}  // namespace ringsw::dsp

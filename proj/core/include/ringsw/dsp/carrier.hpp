#pragma once

#include "ringsw/units.hpp"

namespace ringsw::dsp {

struct FreqOffsetEstimate {
  double offset_ghz = 0.0;
  double resolution_ghz = 0.0;  // FFT bin width / 4
  bool low_confidence = false;  // two spectral peaks within 3 dB
};

// 4th-power spectral-peak frequency offset estimator for QPSK. The estimate
// wraps at +-rate/8 (the 4x line aliases at +-rate/2). max_offset_ghz > 0
// limits the peak search to |offset| <= max_offset_ghz; the 4th power also
// raises lines at 4*offset +- baud (residual clock tones), so the search
// window should stay below baud/4 and above the oscillator tolerance.
FreqOffsetEstimate estimate_frequency_offset(const cvec& x, double rate_ghz,
                                             double max_offset_ghz = 0.0);

// Multiplies by exp(-j 2 pi f t), i.e. removes a +f offset.
cvec remove_frequency_offset(const cvec& x, double offset_ghz, double rate_ghz);

struct CprConfig {
  int window = 64;  // sliding 4th-power averaging window, symbols
};

struct CprResult {
  cvec symbols;
  int cycle_slips = 0;  // unwrapped block-to-block jumps > pi/4
};

// Viterbi-Viterbi carrier phase recovery with sliding-window averaging and
// phase unwrapping. The residual pi/2 ambiguity is left to the downstream
// reference alignment.
CprResult carrier_phase_recover(const cvec& symbols, const CprConfig& cfg = {});

}  // namespace ringsw::dsp

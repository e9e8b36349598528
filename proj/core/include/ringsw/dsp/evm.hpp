#pragma once

#include "ringsw/units.hpp"

#include <cstdint>

namespace ringsw::dsp {

// Gray-mapped QPSK, unit symbol energy. Two bits per symbol: (b0, b1) select
// the I/Q signs.
cvec map_qpsk(const std::vector<std::uint8_t>& bits);
cvec qpsk_decisions(const cvec& symbols);

struct Alignment {
  std::size_t lag = 0;  // cyclic shift applied to the received stream
  cvec aligned;
};

// Cyclic max-correlation alignment of the received stream against the known
// reference (handles equalizer delay and the pi/2 ambiguity together with the
// complex scale inside compute_evm).
Alignment align_to_reference(const cvec& received, const cvec& reference);

// Blockwise resolution of the residual pi/2 constellation ambiguity against
// the known reference: each block is rotated by the quadrant that best matches
// the reference, so a mid-stream carrier cycle slip corrupts at most one
// block. Returns the number of block-to-block rotation changes.
int resolve_phase_ambiguity(cvec& received, const cvec& reference, std::size_t block = 1024);

// RMS EVM (%) after optimal global complex (phase + gain) alignment,
// normalized to the RMS reference constellation power.
double compute_evm_percent(const cvec& received, const cvec& reference,
                           std::size_t min_symbols = 1000);

// QPSK Gaussian-noise mapping BER = 0.5 * erfc(1 / (sqrt(2) * EVM_rms)).
double evm_to_ber(double evm_percent);

inline constexpr double kFecEvmLimitPercent = 38.0;
inline bool fec_pass(double evm_percent) { return evm_percent <= kFecEvmLimitPercent; }

}  // namespace ringsw::dsp

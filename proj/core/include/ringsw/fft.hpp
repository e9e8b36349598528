#pragma once

#include "ringsw/units.hpp"

#include <cstddef>

namespace ringsw {

// Unscaled forward DFT.
cvec fft(const cvec& x);
// Inverse DFT scaled by 1/N so ifft(fft(x)) == x.
cvec ifft(const cvec& x);

// Baseband frequency of each FFT bin for an n-point transform at fs (GHz).
// Bins follow FFT order: [0, fs/n, ..., -fs/n].
std::vector<double> fft_freqs_ghz(std::size_t n, double fs_ghz);

// Circularly delay x by delay_samples (may be fractional) via a frequency
// domain phase ramp.
cvec fractional_delay(const cvec& x, double delay_samples);

}  // namespace ringsw

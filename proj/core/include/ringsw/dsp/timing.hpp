#pragma once

#include "ringsw/units.hpp"

namespace ringsw::dsp {

// Cyclic cross-correlation delay estimate of x against a known reference
// waveform, with parabolic sub-sample interpolation around the peak.
double estimate_delay_samples(const cvec& x, const cvec& reference);

// Removes the estimated delay (max-correlation deskew against the known
// transmitted waveform).
cvec deskew(const cvec& x, const cvec& reference);

}  // namespace ringsw::dsp

#pragma once

#include "ringsw/units.hpp"

namespace ringsw::dsp {

// Band-limited rate conversion on the cyclic sample grid: the spectrum is
// truncated (down) or zero-padded (up) in the frequency domain. Content above
// the target Nyquist is removed entirely, which is the anti-alias contract.
// Tones below both Nyquist rates keep frequency and amplitude.
cvec resample(const cvec& x, double from_rate_ghz, double to_rate_ghz);

}  // namespace ringsw::dsp

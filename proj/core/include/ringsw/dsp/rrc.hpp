#pragma once

#include "ringsw/units.hpp"

#include <vector>

namespace ringsw::dsp {

// Raised-cosine Nyquist spectrum, normalized to RC(0) = 1.
double raised_cosine_freq(double f_ghz, double baud_ghz, double rolloff);

// Root-raised-cosine filtering on the cyclic grid via the analytic frequency
// response. Transmitter pulse shaping and the receiver matched filter both use
// this, so the composite is an exact raised cosine and satisfies the Nyquist
// ISI criterion bin-exactly.
cvec apply_sqrt_raised_cosine(const cvec& x, double fs_ghz, double baud_ghz, double rolloff);

// Matched filter for a stream at >= 2 samples/symbol.
inline cvec matched_filter(const cvec& x, double rolloff, double baud_ghz, double fs_ghz) {
  return apply_sqrt_raised_cosine(x, fs_ghz, baud_ghz, rolloff);
}

// Analytic time-domain RRC taps (unit symbol period, peak-normalized energy
// handled by the caller). Singularities at t=0 and |t|=T/(4*beta) use the
// closed-form limits; rolloff 0 degenerates to sinc.
std::vector<double> rrc_taps(int span_symbols, int sps, double rolloff);

}  // namespace ringsw::dsp

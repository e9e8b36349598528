#pragma once

#include "ringsw/units.hpp"

namespace ringsw::dsp {

struct EqualizerConfig {
  int taps = 15;  // odd, T/2 spaced
  double cma_step = 1e-2;  // normalized (NLMS-style) step sizes
  double dd_step = 1e-2;
  int cma_passes = 2;
  int dd_passes = 1;
  double dd_phase_gain = 0.05;  // carrier tracking loop inside the DD stage
  std::size_t training_symbols = 256;
  double convergence_modulus_var = 0.3;
};

struct EqualizerResult {
  cvec symbols;  // symbol-rate output
  cvec taps;
  bool converged = false;
  double modulus_variance = 0.0;
};

// Single-polarization fractionally spaced equalizer: constant-modulus
// adaptation (QPSK has unit modulus) followed by decision-directed LMS with a
// first-order carrier phase tracker. Input is at 2 samples/symbol; the data is
// treated as cyclic. Non-convergence is reported, not fatal.
EqualizerResult adaptive_equalize(const cvec& x_2sps, const EqualizerConfig& cfg = {});

}  // namespace ringsw::dsp

#include "ringsw/dsp/equalizer.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ringsw::dsp {
namespace {

std::complex<double> qpsk_decision(std::complex<double> y) {
  const double a = 1.0 / std::sqrt(2.0);
  return {y.real() >= 0.0 ? a : -a, y.imag() >= 0.0 ? a : -a};
}

}  // namespace

EqualizerResult adaptive_equalize(const cvec& x_2sps, const EqualizerConfig& cfg) {
  if (cfg.taps < 1 || cfg.taps % 2 == 0)
    throw std::invalid_argument("adaptive_equalize: tap count must be odd");
  const std::size_t n_sym = x_2sps.size() / 2;
  if (n_sym < cfg.training_symbols)
    throw std::invalid_argument("adaptive_equalize: fewer samples than training length");

  // Normalize to unit mean power so the CMA modulus target is 1.
  double p = 0.0;
  for (const auto& v : x_2sps) p += std::norm(v);
  p /= static_cast<double>(x_2sps.size());
  const double g = p > 0.0 ? 1.0 / std::sqrt(2.0 * p) : 1.0;  // symbol instants carry ~2x mean power
  cvec x(x_2sps.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = x_2sps[i] * g;

  const int t = cfg.taps;
  const int c = t / 2;
  cvec w(t, {0.0, 0.0});
  w[c] = 1.0;
  const auto n = static_cast<long long>(x.size());
  auto tap_input = [&](std::size_t k, int m) {
    long long idx = 2 * static_cast<long long>(k) + c - m;
    idx %= n;
    if (idx < 0) idx += n;
    return x[static_cast<std::size_t>(idx)];
  };
  auto filter_out = [&](std::size_t k) {
    std::complex<double> y = 0.0;
    for (int m = 0; m < t; ++m) y += w[m] * tap_input(k, m);
    return y;
  };

  // Updates are normalized by the instantaneous tap-vector power so a deep
  // in-band notch (heavy amplitude distortion) degrades gracefully instead of
  // blowing up the weights.
  auto input_power = [&](std::size_t k) {
    double u = 0.0;
    for (int m = 0; m < t; ++m) u += std::norm(tap_input(k, m));
    return u + 1e-12;
  };

  for (int pass = 0; pass < cfg.cma_passes; ++pass) {
    for (std::size_t k = 0; k < n_sym; ++k) {
      const std::complex<double> y = filter_out(k);
      const std::complex<double> e = y * (std::norm(y) - 1.0);
      const double mu = cfg.cma_step / input_power(k);
      for (int m = 0; m < t; ++m) w[m] -= mu * e * std::conj(tap_input(k, m));
    }
  }

  double theta = 0.0;
  for (int pass = 0; pass < cfg.dd_passes; ++pass) {
    for (std::size_t k = 0; k < n_sym; ++k) {
      const std::complex<double> z = filter_out(k);
      const std::complex<double> rot{std::cos(theta), std::sin(theta)};
      const std::complex<double> y = z * std::conj(rot);
      const std::complex<double> d = qpsk_decision(y);
      const std::complex<double> e = z - d * rot;
      const double mu = cfg.dd_step / input_power(k);
      for (int m = 0; m < t; ++m) w[m] -= mu * e * std::conj(tap_input(k, m));
      theta += cfg.dd_phase_gain * std::arg(y * std::conj(d));
    }
  }

  EqualizerResult res;
  res.symbols.resize(n_sym);
  double mean_mod = 0.0;
  for (std::size_t k = 0; k < n_sym; ++k) {
    res.symbols[k] = filter_out(k);
    mean_mod += std::norm(res.symbols[k]);
  }
  mean_mod /= static_cast<double>(n_sym);
  double var = 0.0;
  for (const auto& y : res.symbols) {
    const double d = std::norm(y) - mean_mod;
    var += d * d;
  }
  var /= static_cast<double>(n_sym);
  res.modulus_variance = var;
  const bool adapted = cfg.cma_step > 0.0 || cfg.dd_step > 0.0;
  res.converged = adapted && var < cfg.convergence_modulus_var;
  res.taps = w;
  return res;
}

}  // namespace ringsw::dsp

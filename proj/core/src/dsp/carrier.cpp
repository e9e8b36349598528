#include "ringsw/dsp/carrier.hpp"

#include "ringsw/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringsw::dsp {

FreqOffsetEstimate estimate_frequency_offset(const cvec& x, double rate_ghz,
                                             double max_offset_ghz) {
  if (x.size() < 8) throw std::invalid_argument("estimate_frequency_offset: too few samples");
  cvec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto v = x[i];
    z[i] = v * v * v * v;
  }
  const cvec Z = fft(z);
  const auto freqs = fft_freqs_ghz(x.size(), rate_ghz);
  const double f4_max = max_offset_ghz > 0.0 ? 4.0 * max_offset_ghz : rate_ghz;
  std::size_t peak = 0;
  double peak_p = -1.0;
  for (std::size_t i = 0; i < Z.size(); ++i) {
    if (std::abs(freqs[i]) > f4_max) continue;
    const double p = std::norm(Z[i]);
    if (p > peak_p) {
      peak_p = p;
      peak = i;
    }
  }
  FreqOffsetEstimate est;
  est.offset_ghz = freqs[peak] / 4.0;
  est.resolution_ghz = rate_ghz / static_cast<double>(x.size()) / 4.0;
  // Second distinct peak within 3 dB => ambiguous.
  const auto n = static_cast<long long>(Z.size());
  double second = 0.0;
  for (std::size_t i = 0; i < Z.size(); ++i) {
    if (std::abs(freqs[i]) > f4_max) continue;
    long long d = std::llabs(static_cast<long long>(i) - static_cast<long long>(peak));
    d = std::min(d, n - d);
    if (d < 3) continue;
    second = std::max(second, std::norm(Z[i]));
  }
  est.low_confidence = second >= 0.5 * peak_p;
  return est;
}

cvec remove_frequency_offset(const cvec& x, double offset_ghz, double rate_ghz) {
  cvec y(x.size());
  const double w = 2.0 * std::numbers::pi * offset_ghz / rate_ghz;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ph = -w * static_cast<double>(i);
    y[i] = x[i] * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return y;
}

CprResult carrier_phase_recover(const cvec& symbols, const CprConfig& cfg) {
  if (cfg.window < 1) throw std::invalid_argument("carrier_phase_recover: window must be >= 1");
  const std::size_t n = symbols.size();
  if (n == 0) throw std::invalid_argument("carrier_phase_recover: empty input");

  // Sliding sum of s^4 via prefix sums. The window is clamped to the block
  // (one-sided at the edges) rather than cyclic: the end-to-start junction of
  // a simulated block carries a phase-noise discontinuity that a wrapped
  // window would smear into both edges.
  cvec prefix(n + 1, {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = symbols[i];
    prefix[i + 1] = prefix[i] + v * v * v * v;
  }
  const long long w = cfg.window;
  const long long half = w / 2;

  CprResult res;
  res.symbols.resize(n);
  const double quarter = std::numbers::pi / 2.0;
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t i = 0; i < n; ++i) {
    const long long lo = std::max<long long>(0, static_cast<long long>(i) - half);
    const long long hi = std::min<long long>(static_cast<long long>(n),
                                             static_cast<long long>(i) + (w - half));
    const std::complex<double> acc = prefix[static_cast<std::size_t>(hi)] -
                                     prefix[static_cast<std::size_t>(lo)];
    // QPSK: s^4 = -1 * e^{j4phi}.
    double theta = std::arg(-acc) / 4.0;
    if (have_prev) {
      const double steps = std::round((theta - prev) / quarter);
      theta -= steps * quarter;
      if (std::abs(theta - prev) > std::numbers::pi / 4.0) ++res.cycle_slips;
    }
    prev = theta;
    have_prev = true;
    res.symbols[i] = symbols[i] * std::complex<double>(std::cos(theta), -std::sin(theta));
  }
  return res;
}

}  // namespace ringsw::dsp

#include "ringsw/dsp/rrc.hpp"

#include "ringsw/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringsw::dsp {

double raised_cosine_freq(double f_ghz, double baud_ghz, double rolloff) {
  const double af = std::abs(f_ghz);
  const double half = 0.5 * baud_ghz;
  if (rolloff <= 0.0) return af <= half ? 1.0 : 0.0;
  const double f1 = half * (1.0 - rolloff);
  const double f2 = half * (1.0 + rolloff);
  if (af <= f1) return 1.0;
  if (af >= f2) return 0.0;
  const double t = (af - f1) / (baud_ghz * rolloff);
  return 0.5 * (1.0 + std::cos(std::numbers::pi * t));
}

cvec apply_sqrt_raised_cosine(const cvec& x, double fs_ghz, double baud_ghz, double rolloff) {
  if (fs_ghz < 2.0 * baud_ghz)
    throw std::invalid_argument("apply_sqrt_raised_cosine: need >= 2 samples/symbol");
  cvec X = fft(x);
  const auto freqs = fft_freqs_ghz(x.size(), fs_ghz);
  for (std::size_t i = 0; i < X.size(); ++i)
    X[i] *= std::sqrt(raised_cosine_freq(freqs[i], baud_ghz, rolloff));
  return ifft(X);
}

std::vector<double> rrc_taps(int span_symbols, int sps, double rolloff) {
  if (span_symbols < 1 || sps < 1) throw std::invalid_argument("rrc_taps: bad span/sps");
  const int half = span_symbols * sps / 2;
  std::vector<double> taps(2 * half + 1);
  const double pi = std::numbers::pi;
  const double b = rolloff;
  for (int i = -half; i <= half; ++i) {
    const double t = static_cast<double>(i) / sps;  // in symbol periods
    double v;
    if (i == 0) {
      v = 1.0 - b + 4.0 * b / pi;
    } else if (b > 0.0 && std::abs(std::abs(t) - 1.0 / (4.0 * b)) < 1e-9) {
      v = (b / std::sqrt(2.0)) *
          ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * b)) +
           (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * b)));
    } else if (b <= 0.0) {
      v = std::sin(pi * t) / (pi * t);
    } else {
      const double num = std::sin(pi * t * (1.0 - b)) +
                         4.0 * b * t * std::cos(pi * t * (1.0 + b));
      const double den = pi * t * (1.0 - std::pow(4.0 * b * t, 2));
      v = num / den;
    }
    taps[i + half] = v;
  }
  return taps;
}

}  // namespace ringsw::dsp

#include "ringsw/dsp/resample.hpp"

#include "ringsw/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace ringsw::dsp {

cvec resample(const cvec& x, double from_rate_ghz, double to_rate_ghz) {
  if (from_rate_ghz <= 0.0 || to_rate_ghz <= 0.0)
    throw std::invalid_argument("resample: rates must be positive");
  if (from_rate_ghz == to_rate_ghz) return x;
  const auto n = static_cast<double>(x.size());
  const auto m = static_cast<std::size_t>(std::llround(n * to_rate_ghz / from_rate_ghz));
  if (m < 2) throw std::invalid_argument("resample: output too short");

  const cvec X = fft(x);
  cvec Y(m, {0.0, 0.0});
  const std::size_t keep = std::min(x.size(), m);
  const std::size_t pos = (keep + 1) / 2;  // DC plus positive bins
  const std::size_t neg = keep - pos;
  for (std::size_t i = 0; i < pos; ++i) Y[i] = X[i];
  for (std::size_t i = 1; i <= neg; ++i) Y[m - i] = X[x.size() - i];
  const double scale = static_cast<double>(m) / n;
  for (auto& v : Y) v *= scale;
  return ifft(Y);
}

}  // namespace ringsw::dsp

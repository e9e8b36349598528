#include "ringsw/dsp/timing.hpp"

#include "ringsw/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace ringsw::dsp {

double estimate_delay_samples(const cvec& x, const cvec& reference) {
  if (x.size() != reference.size() || x.empty())
    throw std::invalid_argument("estimate_delay_samples: size mismatch");
  const std::size_t n = x.size();
  const cvec X = fft(x);
  const cvec S = fft(reference);
  cvec prod(n);
  for (std::size_t i = 0; i < n; ++i) prod[i] = X[i] * std::conj(S[i]);
  const cvec corr = ifft(prod);  // corr[l] = sum_m x[m+l] conj(ref[m])

  std::size_t best = 0;
  double best_p = -1.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double p = std::norm(corr[l]);
    if (p > best_p) {
      best_p = p;
      best = l;
    }
  }
  // Parabolic interpolation on |corr|^2 around the peak.
  const double pm = std::norm(corr[(best + n - 1) % n]);
  const double pp = std::norm(corr[(best + 1) % n]);
  double frac = 0.0;
  const double denom = pm - 2.0 * best_p + pp;
  if (std::abs(denom) > 1e-30) frac = 0.5 * (pm - pp) / denom;
  if (frac > 0.5) frac = 0.5;
  if (frac < -0.5) frac = -0.5;

  // x[m] = ref[m - d] peaks corr at l = d. Report a symmetric signed delay.
  double lag = static_cast<double>(best) + frac;
  if (lag > static_cast<double>(n) / 2.0) lag -= static_cast<double>(n);
  return lag;
}

cvec deskew(const cvec& x, const cvec& reference) {
  const double d = estimate_delay_samples(x, reference);
  return fractional_delay(x, -d);
}

}  // namespace ringsw::dsp

#include "ringsw/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ringsw {
namespace {

std::mutex g_plan_mutex;

// FFTW planning is not thread safe; execution on distinct buffers is.
// Plans are cached per (size, direction) against internal scratch buffers and
// executed via the new-array interface.
struct CachedPlan {
  fftw_plan plan{nullptr};
  fftw_complex* in{nullptr};
  fftw_complex* out{nullptr};
};

CachedPlan& plan_for(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, CachedPlan> cache;
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CachedPlan p;
  p.in = fftw_alloc_complex(n);
  p.out = fftw_alloc_complex(n);
  p.plan = fftw_plan_dft_1d(static_cast<int>(n), p.in, p.out, sign, FFTW_ESTIMATE);
  if (!p.plan) throw std::runtime_error("fftw plan creation failed");
  return cache.emplace(key, p).first->second;
}

cvec transform(const cvec& x, int sign) {
  if (x.empty()) throw std::invalid_argument("fft: empty input");
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    plan = plan_for(x.size(), sign).plan;
  }
  fftw_complex* in = fftw_alloc_complex(x.size());
  fftw_complex* out = fftw_alloc_complex(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    in[i][0] = x[i].real();
    in[i][1] = x[i].imag();
  }
  fftw_execute_dft(plan, in, out);
  cvec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = {out[i][0], out[i][1]};
  }
  fftw_free(in);
  fftw_free(out);
  return y;
}

}  // namespace

cvec fft(const cvec& x) { return transform(x, FFTW_FORWARD); }

cvec ifft(const cvec& x) {
  cvec y = transform(x, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : y) v *= scale;
  return y;
}

std::vector<double> fft_freqs_ghz(std::size_t n, double fs_ghz) {
  std::vector<double> f(n);
  const double df = fs_ghz / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<long long>(i);
    const long long half = static_cast<long long>(n) / 2;
    const long long kk = (k <= (static_cast<long long>(n) - 1) / 2) ? k : k - static_cast<long long>(n);
    (void)half;
    f[i] = df * static_cast<double>(kk);
  }
  return f;
}

cvec fractional_delay(const cvec& x, double delay_samples) {
  if (delay_samples == 0.0) return x;
  cvec X = fft(x);
  const std::size_t n = x.size();
  const auto freqs = fft_freqs_ghz(n, 1.0);  // normalized cycles/sample
  for (std::size_t i = 0; i < n; ++i) {
    const double phase = -2.0 * std::numbers::pi * freqs[i] * delay_samples;
    X[i] *= std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return ifft(X);
}

}  // namespace ringsw

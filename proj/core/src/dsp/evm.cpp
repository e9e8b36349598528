#include "ringsw/dsp/evm.hpp"

#include "ringsw/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringsw::dsp {

cvec map_qpsk(const std::vector<std::uint8_t>& bits) {
  if (bits.size() % 2 != 0) throw std::invalid_argument("map_qpsk: odd bit count");
  const double a = 1.0 / std::sqrt(2.0);
  cvec out(bits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {bits[2 * i] ? -a : a, bits[2 * i + 1] ? -a : a};
  }
  return out;
}

cvec qpsk_decisions(const cvec& symbols) {
  const double a = 1.0 / std::sqrt(2.0);
  cvec out(symbols.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {symbols[i].real() >= 0.0 ? a : -a, symbols[i].imag() >= 0.0 ? a : -a};
  }
  return out;
}

Alignment align_to_reference(const cvec& received, const cvec& reference) {
  if (received.size() != reference.size() || received.empty())
    throw std::invalid_argument("align_to_reference: size mismatch");
  const cvec R = fft(received);
  const cvec S = fft(reference);
  cvec prod(R.size());
  for (std::size_t i = 0; i < R.size(); ++i) prod[i] = R[i] * std::conj(S[i]);
  const cvec corr = ifft(prod);  // corr[l] = sum_m r[m+l] conj(s[m])
  std::size_t best = 0;
  double best_p = -1.0;
  for (std::size_t l = 0; l < corr.size(); ++l) {
    const double p = std::norm(corr[l]);
    if (p > best_p) {
      best_p = p;
      best = l;
    }
  }
  Alignment a;
  a.lag = best;
  a.aligned.resize(received.size());
  for (std::size_t i = 0; i < received.size(); ++i)
    a.aligned[i] = received[(i + best) % received.size()];
  return a;
}

int resolve_phase_ambiguity(cvec& received, const cvec& reference, std::size_t block) {
  if (received.size() != reference.size())
    throw std::invalid_argument("resolve_phase_ambiguity: size mismatch");
  if (block == 0) throw std::invalid_argument("resolve_phase_ambiguity: zero block size");
  static const std::complex<double> kQuadrants[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int slips = 0;
  int prev = 0;
  bool have_prev = false;
  for (std::size_t start = 0; start < received.size(); start += block) {
    const std::size_t stop = std::min(start + block, received.size());
    std::complex<double> c = 0.0;
    for (std::size_t i = start; i < stop; ++i) c += received[i] * std::conj(reference[i]);
    int best = 0;
    double best_re = -1e300;
    for (int k = 0; k < 4; ++k) {
      const double re = (c * std::conj(kQuadrants[k])).real();
      if (re > best_re) {
        best_re = re;
        best = k;
      }
    }
    if (have_prev && best != prev) ++slips;
    prev = best;
    have_prev = true;
    const std::complex<double> rot = std::conj(kQuadrants[best]);
    for (std::size_t i = start; i < stop; ++i) received[i] *= rot;
  }
  return slips;
}

double compute_evm_percent(const cvec& received, const cvec& reference,
                           std::size_t min_symbols) {
  if (received.size() != reference.size())
    throw std::invalid_argument("compute_evm: size mismatch");
  if (received.size() < min_symbols)
    throw std::invalid_argument("compute_evm: too few symbols");

  std::complex<double> num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < received.size(); ++i) {
    num += reference[i] * std::conj(received[i]);
    den += std::norm(received[i]);
  }
  const std::complex<double> alpha = den > 0.0 ? num / den : std::complex<double>(1.0);

  double err = 0.0, ref_p = 0.0;
  for (std::size_t i = 0; i < received.size(); ++i) {
    err += std::norm(alpha * received[i] - reference[i]);
    ref_p += std::norm(reference[i]);
  }
  if (ref_p <= 0.0) throw std::invalid_argument("compute_evm: zero reference power");
  return 100.0 * std::sqrt(err / ref_p);
}

double evm_to_ber(double evm_percent) {
  if (evm_percent <= 0.0) return 0.0;
  const double e = evm_percent / 100.0;
  return 0.5 * std::erfc(1.0 / (std::sqrt(2.0) * e));
}

}  // namespace ringsw::dsp

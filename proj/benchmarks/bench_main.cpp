#include "ringsw/control/plan.hpp"
#include "ringsw/dsp/chain.hpp"
#include "ringsw/dsp/equalizer.hpp"
#include "ringsw/fft.hpp"
#include "ringsw/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ringsw;

void BM_DevicePortResponse(benchmark::State& state) {
  const auto spec = device::DeviceSpec::default_device(1552.0);
  std::vector<device::RingState> states;
  for (const auto& r : spec.rings) states.push_back(device::make_state(r, 1.0));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> freqs(n);
  const double f0 = units::freq_ghz(1552.0);
  for (std::size_t i = 0; i < n; ++i)
    freqs[i] = f0 - 50.0 + 100.0 * static_cast<double>(i) / static_cast<double>(n);
  for (auto _ : state) {
    auto resp = device::device_port_response(spec, states, 3, freqs,
                                             device::Direction::kForward);
    benchmark::DoNotOptimize(resp.h.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(BM_DevicePortResponse)->Arg(1024)->Arg(16384);

void BM_Fft(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  cvec x(n);
  for (auto& v : x) v = rng.cgaussian(1.0);
  for (auto _ : state) {
    auto y = fft(x);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}
BENCHMARK(BM_Fft)->Arg(1 << 14)->Arg(1 << 19);

void BM_Equalizer(benchmark::State& state) {
  Rng rng(11);
  const std::size_t n_sym = 4096;
  std::vector<std::uint8_t> bits(n_sym * 2);
  for (auto& b : bits) b = rng.bit() ? 1 : 0;
  const cvec syms = dsp::map_qpsk(bits);
  cvec x(n_sym * 2);
  for (std::size_t i = 0; i < n_sym; ++i) {
    x[2 * i] = syms[i] + rng.cgaussian(0.05);
    x[2 * i + 1] = 0.5 * (syms[i] + syms[(i + 1) % n_sym]) + rng.cgaussian(0.05);
  }
  for (auto _ : state) {
    auto out = dsp::adaptive_equalize(x, dsp::EqualizerConfig{});
    benchmark::DoNotOptimize(out.symbols.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n_sym);
}
BENCHMARK(BM_Equalizer);

void BM_PlanUnicast(benchmark::State& state) {
  const auto spec = device::DeviceSpec::default_device(1552.0);
  Rng rng(3);
  for (auto _ : state) {
    control::RouteRequest req;
    req.input_wavelength_nm = 1530.0 + 35.0 * rng.uniform();
    req.route_bitmap[rng.raw() % 8] = true;
    auto plan = control::plan_unicast(req, spec);
    benchmark::DoNotOptimize(plan.total_power_mw);
  }
}
BENCHMARK(BM_PlanUnicast);

}  // namespace

BENCHMARK_MAIN();

// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero when any criterion fails.

#include "ringsw/control/plan.hpp"
#include "ringsw/device/cascade.hpp"
#include "ringsw/dsp/carrier.hpp"
#include "ringsw/dsp/equalizer.hpp"
#include "ringsw/dsp/evm.hpp"
#include "ringsw/dsp/rrc.hpp"
#include "ringsw/errors.hpp"
#include "ringsw/harness/sweep.hpp"
#include "ringsw/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

using namespace ringsw;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %2d (%s): %s%s%s\n", index, name.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1

void check_spectra() {
  const auto dev = device::DeviceSpec::default_device();
  std::vector<device::RingState> states;
  for (const auto& r : dev.rings) states.push_back(device::make_state(r, 0.0));
  const auto dump = device::dump_spectrum(dev, states, 1.44, 1515.0, 1568.0);

  bool pass = true;
  std::string detail;
  auto fail = [&](const std::string& why) {
    if (pass) detail = why;
    pass = false;
  };

  // Peak wavelength and interpolated 3-dB width of one drop passband.
  auto measure = [&](int port, double around_nm) {
    const auto& p = dump.power_db[port];
    std::size_t peak = 0;
    double best = -1e9;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (std::abs(dump.wavelength_nm[i] - around_nm) > 0.5) continue;
      if (p[i] > best) {
        best = p[i];
        peak = i;
      }
    }
    const double half = best - 10.0 * std::log10(2.0);
    auto cross = [&](int dir) {
      std::size_t i = peak;
      while (p[i] > half) i += dir;
      // Linear interpolation between the straddling samples.
      const double t = (p[i - dir] - half) / (p[i - dir] - p[i]);
      return dump.wavelength_nm[i - dir] +
             t * (dump.wavelength_nm[i] - dump.wavelength_nm[i - dir]);
    };
    struct {
      double peak_nm, peak_db, width_nm;
    } m{dump.wavelength_nm[peak], best, cross(+1) - cross(-1)};
    return m;
  };

  // Widths are measured per ring with the other rings made transparent; in
  // the full cascade the upstream through notches tilt each passband and
  // reshape its 3 dB points by up to ~1 GHz, which is a cascade property, not
  // a statement about the ring itself.
  const double step_nm = 1.44e-3;
  for (int port = 1; port <= device::kNumPorts; ++port) {
    device::DeviceSpec solo = dev;
    for (int i = 0; i < device::kNumPorts; ++i)
      if (i != port - 1) solo.rings[i].peak_drop_efficiency = 1e-12;
    std::vector<device::RingState> solo_states;
    for (const auto& r : solo.rings) solo_states.push_back(device::make_state(r, 0.0));
    const double res0 = dev.rings[port - 1].zero_bias_resonance_nm;
    const auto solo_dump = device::dump_spectrum(solo, solo_states, 1.44, res0 - 1.0, res0 + 1.0);
    const auto& p = solo_dump.power_db[port];
    std::size_t peak_i = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > p[peak_i]) peak_i = i;
    const double half = p[peak_i] - 10.0 * std::log10(2.0);
    auto cross = [&](int dir) {
      std::size_t i = peak_i;
      while (p[i] > half) i += dir;
      const double t = (p[i - dir] - half) / (p[i - dir] - p[i]);
      return solo_dump.wavelength_nm[i - dir] +
             t * (solo_dump.wavelength_nm[i] - solo_dump.wavelength_nm[i - dir]);
    };
    const double width_nm = cross(+1) - cross(-1);
    const double bw_nm = units::span_nm(dev.rings[port - 1].bw_3db_ghz,
                                        solo_dump.wavelength_nm[peak_i]);
    if (std::abs(width_nm - bw_nm) > step_nm)
      fail("port " + std::to_string(port) + " width " +
           fmt("%.3f", units::span_ghz(width_nm, res0)) + " GHz vs configured " +
           fmt("%.1f", dev.rings[port - 1].bw_3db_ghz));
  }

  double prev_peak = 0.0;
  for (int port = 1; port <= device::kNumPorts; ++port) {
    const double res0 = dev.rings[port - 1].zero_bias_resonance_nm;
    const auto m = measure(port, res0);
    if (port > 1 && std::abs(m.peak_nm - prev_peak - 1.27) > 0.01)
      fail("port " + std::to_string(port) + " pitch " + fmt("%.4f", m.peak_nm - prev_peak));
    prev_peak = m.peak_nm;
    for (double off : {-13.0, 13.0}) {
      const auto img = measure(port, res0 + off);
      if (std::abs(img.peak_nm - (m.peak_nm + off)) > 0.01 ||
          std::abs(img.peak_db - m.peak_db) > 0.2)
        fail("port " + std::to_string(port) + " FSR image at " + fmt("%+.0f", off) + " nm off");
    }
  }
  report(1, "drop-passband spectra", pass, detail);
}

// ---------------------------------------------------------------- criterion 2

void check_energy_range() {
  const control::PlannerConfig pcfg;
  double e_min = 1e300, e_max = -1e300;
  std::size_t feasible = 0;

  // 50 GHz carrier grid across the supported band.
  std::vector<double> grid_nm;
  const double f_lo = units::freq_ghz(pcfg.band_max_nm);
  const double f_hi = units::freq_ghz(pcfg.band_min_nm);
  for (double f = std::ceil(f_lo / 50.0) * 50.0; f <= f_hi; f += 50.0)
    grid_nm.push_back(units::wavelength_nm(f));

  // Every route bitmap with popcount 1..3.
  std::vector<control::RouteRequest> reqs;
  for (int mask = 1; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) > 3) continue;
    control::RouteRequest req;
    for (int b = 0; b < 8; ++b) req.route_bitmap[b] = (mask >> b) & 1;
    reqs.push_back(req);
  }

  for (double wl : grid_nm) {
    const auto dev = device::DeviceSpec::default_device(wl);
    for (auto req : reqs) {
      req.input_wavelength_nm = wl;
      req.bitrate_gbps = 120.0;
      try {
        const auto plan = control::plan_route(req, dev, pcfg);
        e_min = std::min(e_min, plan.energy_fj_per_bit);
        e_max = std::max(e_max, plan.energy_fj_per_bit);
        ++feasible;
      } catch (const InfeasiblePlanError&) {
      }
    }
  }
  const bool pass = feasible > 0 && e_min <= 5.0 && e_max >= 50.0 && e_min >= 0.0;
  report(2, "tuning energy range", pass,
         "range [" + fmt("%.3f", e_min) + ", " + fmt("%.1f", e_max) + "] fJ/bit over " +
             std::to_string(feasible) + " plans, must cover [5, 50]");
}

// ---------------------------------------------------------------- criterion 3

double brute_force_min_power(const control::RouteRequest& req, const device::DeviceSpec& spec,
                             const control::PlannerConfig& cfg) {
  const double guard_nm = units::span_nm(cfg.guard_band_ghz, req.input_wavelength_nm);
  auto wrapped = [](double a, double b, double fsr) {
    double d = std::fmod(std::abs(a - b), fsr);
    return std::min(d, fsr - d);
  };
  double shift_sum = 0.0;
  for (int i = 0; i < device::kNumPorts; ++i) {
    const auto& ring = spec.rings[i];
    const double limit = std::min(ring.max_shift_nm(), ring.fsr_nm - 1e-12);
    if (req.route_bitmap[i]) {
      double best = -1.0;
      for (int k = -4; k <= 4; ++k) {
        const double s =
            req.input_wavelength_nm - ring.zero_bias_resonance_nm + k * ring.fsr_nm;
        if (s < -1e-12 || s > limit) continue;
        const double cand = std::max(s, 0.0);
        if (best < 0.0 || cand < best) best = cand;
      }
      if (best < 0.0) return -1.0;
      shift_sum += best;
    } else {
      auto clear = [&](double s) {
        return wrapped(ring.zero_bias_resonance_nm + s, req.input_wavelength_nm,
                       ring.fsr_nm) >= guard_nm;
      };
      if (clear(0.0)) continue;
      double lo = 0.0, hi = -1.0;
      for (double s = 0.0; s <= limit; s += 1e-3) {
        if (clear(s)) {
          hi = s;
          break;
        }
        lo = s;
      }
      if (hi < 0.0) return -1.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (clear(mid) ? hi : lo) = mid;
      }
      shift_sum += hi;
    }
  }
  return shift_sum / spec.tuning_efficiency_nm_per_mw;
}

void check_unicast_optimality() {
  const auto dev = device::DeviceSpec::default_device();
  const control::PlannerConfig cfg;
  Rng rng(987654321);
  bool pass = true;
  std::string detail;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    control::RouteRequest req;
    req.input_wavelength_nm = cfg.band_min_nm + (cfg.band_max_nm - cfg.band_min_nm) * rng.uniform();
    req.route_bitmap[rng.raw() % 8] = true;
    const auto plan = control::plan_unicast(req, dev, cfg);
    const double brute = brute_force_min_power(req, dev, cfg);
    const double err = std::abs(plan.total_power_mw - brute);
    worst = std::max(worst, err);
    if (brute < 0.0 || err > 1e-9 * std::max(1.0, brute)) {
      pass = false;
      detail = "trial " + std::to_string(trial) + " at " +
               fmt("%.4f", req.input_wavelength_nm) + " nm: planner " +
               fmt("%.9f", plan.total_power_mw) + " mW vs brute force " + fmt("%.9f", brute);
      break;
    }
  }
  if (pass) detail = "1000 random requests, max deviation " + fmt("%.2e", worst) + " mW";
  report(3, "unicast power optimality", pass, detail);
}

// ---------------------------------------------------------------- criterion 4

void check_multicast_split() {
  bool pass = true;
  std::string detail;
  auto fail = [&](const std::string& why) {
    if (pass) detail = why;
    pass = false;
  };

  // Reference detunings for an ideal 80 GHz / unit-efficiency ring.
  device::DeviceSpec ideal = device::DeviceSpec::default_device();
  for (auto& r : ideal.rings) {
    r.bw_3db_ghz = 80.0;
    r.peak_drop_efficiency = 1.0;
  }
  control::RouteRequest req;
  req.input_wavelength_nm = 1552.0;
  req.route_bitmap[0] = req.route_bitmap[1] = req.route_bitmap[2] = true;
  const auto plan = control::plan_multicast(req, ideal);
  const double expect[3] = {40.0 * std::sqrt(2.0), 40.0, 0.0};
  for (int s = 0; s < 3; ++s) {
    const double got = std::abs(plan.multicast->detunings_ghz[s]);
    if (std::abs(got - expect[s]) > 0.01)
      fail("detuning " + fmt("%.3f", got) + " vs " + fmt("%.3f", expect[s]) + " GHz");
  }

  for (double wl : {1539.0, 1552.0, 1563.0}) {
    device::DeviceSpec dev = device::DeviceSpec::default_device(wl);
    control::RouteRequest r3;
    r3.input_wavelength_nm = wl;
    r3.route_bitmap[1] = r3.route_bitmap[3] = r3.route_bitmap[6] = true;
    const auto mc = control::plan_multicast(r3, dev);
    const auto uni_ref =
        control::plan_unicast([&] {
          control::RouteRequest u;
          u.input_wavelength_nm = wl;
          u.route_bitmap[1] = true;
          return u;
        }(), dev);

    // Equal split, 10*log10(3) = 4.77 dB below the unicast drop.
    for (double f : mc.multicast->port_fractions) {
      const double below = units::lin_to_db(uni_ref.rings[1].drop_fraction / f);
      if (below < 4.77 - 1e-6) fail("split only " + fmt("%.3f", below) + " dB below unicast");
    }

    // Carrier-wavelength imbalance with parked rings transparent (isolates
    // the detuned-ring split from parked through-path ripple).
    for (int i = 0; i < device::kNumPorts; ++i)
      if (mc.rings[i].role == control::RingRole::kParked)
        dev.rings[i].peak_drop_efficiency = 1e-9;
    const auto states = mc.to_states(dev);
    const std::vector<double> grid = {units::freq_ghz(wl)};
    double pmin = 1e9, pmax = -1e9;
    for (int port : {2, 4, 7}) {
      const auto resp = device::device_port_response(dev, states, port, grid,
                                                     device::Direction::kForward);
      const double db = units::lin_to_db(std::norm(resp.h[0]));
      pmin = std::min(pmin, db);
      pmax = std::max(pmax, db);
    }
    if (pmax - pmin >= 0.1)
      fail(fmt("%.0f", wl) + " nm imbalance " + fmt("%.3f", pmax - pmin) + " dB");
  }
  report(4, "multicast equal split", pass, detail);
}

// ------------------------------------------------------- criteria 5 through 8

struct RowKey {
  double wl;
  int ring;
  int sub;
  bool operator<(const RowKey& o) const {
    if (wl != o.wl) return wl < o.wl;
    if (ring != o.ring) return ring < o.ring;
    return sub < o.sub;
  }
};

void check_sweeps() {
  using namespace harness;
  const ExperimentConfig cfg;  // default calibration, 2^15 symbols, seed 1

  const SweepResult uni = run_unicast_sweep(cfg);

  // Criterion 5: every row of the full unicast sweep clears the FEC limit.
  {
    bool pass = !uni.rows.empty();
    double worst = 0.0;
    std::string detail;
    for (const auto& r : uni.rows) {
      if (r.infeasible) {
        pass = false;
        detail = "infeasible row";
        break;
      }
      worst = std::max(worst, r.evm_percent);
      if (r.evm_percent > dsp::kFecEvmLimitPercent || !r.fec_pass) pass = false;
    }
    if (detail.empty())
      detail = std::to_string(uni.rows.size()) + " rows, worst EVM " + fmt("%.2f", worst) +
               "% vs limit 38%";
    report(5, "unicast FEC margin", pass, detail);
  }

  // Criterion 6: outer subchannels pay a penalty against the inner pair, and
  // the penalty ranks 1552 above 1563.
  {
    std::map<double, std::pair<double, int>> outer, inner;
    for (const auto& r : uni.rows) {
      if (r.mode != SweepMode::kUnicast) continue;
      if (r.subchannel == 1 || r.subchannel == 6) {
        outer[r.wavelength_nm].first += r.evm_percent;
        outer[r.wavelength_nm].second += 1;
      } else if (r.subchannel == 3 || r.subchannel == 4) {
        inner[r.wavelength_nm].first += r.evm_percent;
        inner[r.wavelength_nm].second += 1;
      }
    }
    bool pass = outer.size() == 3;
    std::map<double, double> penalty;
    std::string detail = "penalty";
    for (const auto& [wl, acc] : outer) {
      const auto& in = inner[wl];
      penalty[wl] = acc.first / acc.second - in.first / in.second;
      detail += " " + fmt("%.0f", wl) + ":" + fmt("%.2f", penalty[wl]);
      if (penalty[wl] < 1.0) pass = false;
    }
    if (penalty.count(1552.0) == 0 || penalty.count(1563.0) == 0 ||
        penalty[1552.0] <= penalty[1563.0])
      pass = false;
    detail += " points (need >= 1, and 1552 > 1563)";
    report(6, "outer-subchannel penalty", pass, detail);
  }

  // Criterion 7: multicast rows clear FEC, and the outer subchannels degrade
  // relative to unicast on a per-wavelength group average. (Per port, the
  // subchannel next to a detuned resonance can genuinely improve, so the
  // comparison is against the group mean, matching how the measurement is
  // summarized.)
  const SweepResult mc = run_multicast_sweep(cfg);
  {
    bool pass = !mc.rows.empty();
    std::string detail;
    double worst = 0.0;
    std::map<RowKey, double> uni_by_key;
    for (const auto& r : uni.rows)
      if (r.mode == SweepMode::kUnicast)
        uni_by_key[{r.wavelength_nm, r.ring, r.subchannel}] = r.evm_percent;

    struct Acc {
      double mc_sum = 0.0, uni_sum = 0.0;
      int n = 0;
    };
    std::map<std::pair<double, int>, Acc> groups;
    for (const auto& r : mc.rows) {
      if (r.infeasible || !r.fec_pass) {
        pass = false;
        detail = "multicast row above the FEC limit";
      }
      worst = std::max(worst, r.evm_percent);
      if (r.subchannel != 1 && r.subchannel != 6) continue;
      auto& acc = groups[{r.wavelength_nm, r.subchannel}];
      acc.mc_sum += r.evm_percent;
      acc.uni_sum += uni_by_key.at({r.wavelength_nm, r.ring, r.subchannel});
      acc.n += 1;
    }
    for (const auto& [key, acc] : groups) {
      if (acc.mc_sum < acc.uni_sum) {
        pass = false;
        if (detail.empty())
          detail = "group " + fmt("%.0f", key.first) + " nm sub " +
                   std::to_string(key.second) + ": multicast mean " +
                   fmt("%.2f", acc.mc_sum / acc.n) + " below unicast " +
                   fmt("%.2f", acc.uni_sum / acc.n);
      }
    }
    if (detail.empty())
      detail = std::to_string(mc.rows.size()) + " rows all fec_pass (worst " +
               fmt("%.2f", worst) + "%), outer group means above unicast";
    report(7, "multicast ordering", pass, detail);
  }

  // Criterion 8: reverse propagation matches forward within half a point per
  // row on the shared noise realization, and exactly with noise disabled.
  {
    const SweepResult rev = run_bidirectional_sweep(cfg);
    bool pass = rev.rows.size() == uni.rows.size();
    std::string detail;
    double worst = 0.0;
    std::map<RowKey, double> fwd_by_key;
    for (const auto& r : uni.rows)
      fwd_by_key[{r.wavelength_nm, r.ring, r.subchannel}] = r.evm_percent;
    for (const auto& r : rev.rows) {
      const auto it = fwd_by_key.find({r.wavelength_nm, r.ring, r.subchannel});
      if (it == fwd_by_key.end()) {
        pass = false;
        continue;
      }
      const double d = std::abs(r.evm_percent - it->second);
      worst = std::max(worst, d);
      if (d > 0.5) pass = false;
    }
    if (!pass) detail = "worst forward/reverse gap " + fmt("%.3f", worst) + " points";

    ExperimentConfig quiet;
    quiet.sweep.wavelengths_nm = {1552.0};
    quiet.sweep.rings = {2, 7};
    quiet.sweep.symbols_per_point = 2048;
    quiet.sweep.include_baseline = false;
    quiet.noise.master_linewidth_khz = 0.0;
    quiet.noise.lo_linewidth_khz = 0.0;
    quiet.noise.edfa_nf_db = -300.0;
    quiet.noise.rx_noise_psd_dbm_per_ghz = -300.0;
    quiet.superchannel.ocnr_db = 300.0;
    const SweepResult qf = run_unicast_sweep(quiet);
    const SweepResult qr = run_bidirectional_sweep(quiet);
    for (std::size_t i = 0; i < qf.rows.size(); ++i) {
      if (qf.rows[i].evm_percent != qr.rows[i].evm_percent) {
        pass = false;
        detail = "zero-noise forward/reverse rows differ";
      }
    }
    if (detail.empty())
      detail = "worst forward/reverse gap " + fmt("%.3f", worst) +
               " points; zero-noise rows identical";
    report(8, "bidirectional equivalence", pass, detail);
  }

  // Criterion 10: the unicast sweep is bit-reproducible for a fixed seed.
  {
    const SweepResult again = run_unicast_sweep(cfg);
    const bool pass = format_csv(uni) == format_csv(again);
    report(10, "determinism", pass,
           pass ? "two runs with seed 1 produce byte-identical CSV" : "CSV outputs differ");
  }
}

// ---------------------------------------------------------------- criterion 9

void check_dsp_oracles() {
  bool pass = true;
  std::string detail;
  auto fail = [&](const std::string& why) {
    if (pass) detail = why;
    pass = false;
  };

  // Zero ISI through the tx + rx root-raised-cosine pair.
  {
    const int sps = 8;
    cvec wave(4096, {0.0, 0.0});
    wave[0] = 1.0;
    wave = dsp::apply_sqrt_raised_cosine(wave, 80.0, 10.0, 0.001);
    wave = dsp::apply_sqrt_raised_cosine(wave, 80.0, 10.0, 0.001);
    const double peak = std::abs(wave[0]);
    for (std::size_t k = sps; k < wave.size(); k += sps)
      if (std::abs(wave[k]) / peak > 1e-6) fail("RRC pair leaves ISI above 1e-6");
  }

  Rng rng(24680);
  auto qpsk = [&](std::size_t n) {
    std::vector<std::uint8_t> bits(2 * n);
    for (auto& b : bits) b = rng.bit() ? 1 : 0;
    return dsp::map_qpsk(bits);
  };
  auto shape = [](const cvec& syms, int sps, double rolloff) {
    cvec w(syms.size() * sps, {0.0, 0.0});
    for (std::size_t k = 0; k < syms.size(); ++k) w[k * sps] = syms[k];
    return dsp::apply_sqrt_raised_cosine(w, 10.0 * sps, 10.0, rolloff);
  };

  // 200 MHz frequency offset recovered within the FFT resolution.
  {
    cvec wave = shape(qpsk(8192), 2, 0.001);
    for (std::size_t t = 0; t < wave.size(); ++t)
      wave[t] *= std::polar(1.0, 2.0 * std::numbers::pi * 0.2 * t / 20.0);
    const auto est = dsp::estimate_frequency_offset(wave, 20.0, 1.0);
    if (std::abs(est.offset_ghz - 0.2) > est.resolution_ghz)
      fail("frequency offset " + fmt("%.4f", est.offset_ghz) + " GHz vs 0.2");
  }

  // Adaptive equalizer opens the documented three-echo channel below 2% EVM.
  {
    const cvec syms = qpsk(8192);
    const cvec wave = shape(syms, 2, 0.1);
    const std::complex<double> taps[3] = {
        {1.0, 0.0}, std::polar(0.35, 1.1), std::polar(0.15, -0.6)};
    cvec rx(wave.size(), {0.0, 0.0});
    for (std::size_t t = 0; t < wave.size(); ++t)
      for (std::size_t k = 0; k < 3; ++k)
        rx[t] += taps[k] * wave[(t + wave.size() - k) % wave.size()];
    rx = dsp::matched_filter(rx, 0.1, 10.0, 20.0);
    const auto eq = dsp::adaptive_equalize(rx);
    auto a = dsp::align_to_reference(eq.symbols, syms);
    dsp::resolve_phase_ambiguity(a.aligned, syms, a.aligned.size());
    const double evm = dsp::compute_evm_percent(a.aligned, syms);
    if (!eq.converged || evm >= 2.0) fail("equalizer EVM " + fmt("%.2f", evm) + "%");
  }

  // Measured EVM against the additive-Gaussian-noise prediction.
  {
    const cvec syms = qpsk(100000);
    for (double sigma : {0.10, 0.15}) {
      cvec noisy(syms.size());
      for (std::size_t i = 0; i < syms.size(); ++i)
        noisy[i] = syms[i] + rng.cgaussian(sigma / std::sqrt(2.0));
      const double evm = dsp::compute_evm_percent(noisy, syms);
      if (std::abs(evm - 100.0 * sigma) > 2.0 * sigma)
        fail("AWGN EVM " + fmt("%.2f", evm) + " vs predicted " + fmt("%.1f", 100.0 * sigma));
    }
  }

  // BER mapping at the FEC limit: the Gaussian-noise mapping gives 4.2e-3 at
  // 38% EVM, within a factor of two of the 3e-3 hard-decision threshold. The
  // residual gap is the non-Gaussian error statistics of the real link.
  {
    const double ber = dsp::evm_to_ber(38.0);
    if (ber / 3e-3 >= 2.0 || 3e-3 / ber >= 2.0)
      fail("evm_to_ber(38%) = " + fmt("%.2e", ber) + " not within 2x of 3e-3");
    if (detail.empty())
      detail = "evm_to_ber(38%) = " + fmt("%.2e", ber) + ", factor " +
               fmt("%.2f", ber / 3e-3) + " of the 3e-3 threshold";
  }
  report(9, "receiver DSP oracles", pass, detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  check_spectra();
  check_energy_range();
  check_unicast_optimality();
  check_multicast_split();
  check_sweeps();   // criteria 5, 6, 7, 8, 10
  check_dsp_oracles();
  const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  std::printf("%s (%d criteria failed, %.0f s total)\n", g_failures == 0 ? "ALL PASS" : "FAILED",
              g_failures, dt.count());
  return g_failures == 0 ? 0 : 1;
}

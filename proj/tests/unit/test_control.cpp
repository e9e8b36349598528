#include <doctest.h>

#include "ringsw/control/plan.hpp"
#include "ringsw/errors.hpp"
#include "ringsw/rng.hpp"

#include <cmath>

using namespace ringsw;
using namespace ringsw::control;
using namespace ringsw::device;

namespace {

RouteRequest make_request(double wl, std::initializer_list<int> ports) {
  RouteRequest req;
  req.input_wavelength_nm = wl;
  for (int p : ports) req.route_bitmap[p - 1] = true;
  return req;
}

double wrapped_distance_nm(double a, double b, double fsr) {
  double d = std::fmod(std::abs(a - b), fsr);
  return std::min(d, fsr - d);
}

// Independent per-ring minimum-shift search. The total tuning power is the
// shift sum over eta, and the constraints are per ring, so the brute-force
// optimum is the sum of per-ring minima. Feasibility is probed on a coarse
// grid and the boundary refined by bisection.
double brute_force_min_power(const RouteRequest& req, const DeviceSpec& spec,
                             const PlannerConfig& cfg) {
  const double guard_nm = units::span_nm(cfg.guard_band_ghz, req.input_wavelength_nm);
  double shift_sum = 0.0;
  for (int i = 0; i < kNumPorts; ++i) {
    const RingSpec& ring = spec.rings[i];
    const double limit = std::min(ring.max_shift_nm(), ring.fsr_nm - 1e-12);
    if (req.route_bitmap[i]) {
      // Alignment constraint: resonance + shift = wavelength modulo FSR.
      double best = -1.0;
      for (int k = -4; k <= 4; ++k) {
        const double s = req.input_wavelength_nm - ring.zero_bias_resonance_nm +
                         k * ring.fsr_nm;
        if (s < -1e-12 || s > limit) continue;
        const double cand = std::max(s, 0.0);
        if (best < 0.0 || cand < best) best = cand;
      }
      REQUIRE(best >= 0.0);
      shift_sum += best;
    } else {
      auto clear = [&](double s) {
        return wrapped_distance_nm(ring.zero_bias_resonance_nm + s,
                                   req.input_wavelength_nm, ring.fsr_nm) >= guard_nm;
      };
      if (clear(0.0)) continue;
      // March until the guard clearance is met, then bisect the boundary.
      double lo = 0.0, hi = -1.0;
      for (double s = 0.0; s <= limit; s += 1e-3) {
        if (clear(s)) {
          hi = s;
          break;
        }
        lo = s;
      }
      REQUIRE(hi >= 0.0);
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (clear(mid))
          hi = mid;
        else
          lo = mid;
      }
      shift_sum += hi;
    }
  }
  return shift_sum / spec.tuning_efficiency_nm_per_mw;
}

}  // namespace

TEST_CASE("route request validation") {
  RouteRequest req = make_request(1552.0, {});
  CHECK_THROWS_AS(req.validate(), std::invalid_argument);
  req = make_request(1552.0, {1, 2, 3, 4});
  CHECK_THROWS_AS(req.validate(), std::invalid_argument);
  req = make_request(1552.0, {2});
  req.bitrate_gbps = 0.0;
  CHECK_THROWS_AS(req.validate(), std::invalid_argument);
  CHECK_THROWS_AS(plan_unicast(make_request(1500.0, {2}), DeviceSpec::default_device()),
                  std::invalid_argument);
}

TEST_CASE("unicast plan aligns the selected ring and respects the guard band") {
  const DeviceSpec dev = DeviceSpec::default_device(1552.0);
  const PlannerConfig cfg;
  for (double wl : {1539.0, 1552.0, 1563.0}) {
    for (int ring = 1; ring <= kNumPorts; ++ring) {
      const SwitchPlan plan = plan_unicast(make_request(wl, {ring}), dev, cfg);
      CHECK(plan.selects_port(ring));
      const double guard_nm = units::span_nm(cfg.guard_band_ghz, wl);
      for (const auto& rp : plan.rings) {
        const RingSpec& rs = dev.rings[rp.ring - 1];
        CHECK(rp.voltage_v >= 0.0);
        CHECK(rp.voltage_v <= rs.max_voltage_v);
        CHECK(rp.target_resonance_nm ==
              doctest::Approx(rs.zero_bias_resonance_nm + rp.shift_nm));
        const double dist = wrapped_distance_nm(rp.target_resonance_nm, wl, rs.fsr_nm);
        if (rp.role == RingRole::kDrop) {
          CHECK(dist < 1e-9);
          CHECK(std::abs(rp.detuning_ghz) < 1e-6);
        } else {
          CHECK(dist >= guard_nm - 1e-9);
        }
      }
    }
  }
}

TEST_CASE("unicast plan power matches an independent brute-force minimum") {
  const DeviceSpec dev = DeviceSpec::default_device();
  const PlannerConfig cfg;
  Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const double wl = 1528.0 + 40.0 * rng.uniform();
    const int ring = 1 + static_cast<int>(rng.uniform() * 8.0) % 8;
    const RouteRequest req = make_request(wl, {ring});
    const SwitchPlan plan = plan_unicast(req, dev, cfg);
    const double brute = brute_force_min_power(req, dev, cfg);
    CHECK(plan.total_power_mw == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("three-way multicast detunings for an ideal 80 GHz ring") {
  DeviceSpec dev = DeviceSpec::default_device();
  for (auto& r : dev.rings) {
    r.bw_3db_ghz = 80.0;
    r.peak_drop_efficiency = 1.0;
  }
  const SwitchPlan plan = plan_multicast(make_request(1552.0, {1, 2, 3}), dev);
  REQUIRE(plan.multicast.has_value());
  const auto& sol = *plan.multicast;
  REQUIRE(sol.detunings_ghz.size() == 3);
  // Equal split 1/3 each: stage fractions 1/3, 1/2, 1 give |2d/bw| of
  // sqrt(2), 1, 0, i.e. 56.57, 40, 0 GHz.
  CHECK(std::abs(std::abs(sol.detunings_ghz[0]) - 40.0 * std::sqrt(2.0)) < 0.01);
  CHECK(std::abs(std::abs(sol.detunings_ghz[1]) - 40.0) < 0.01);
  CHECK(std::abs(sol.detunings_ghz[2]) < 1e-6);
  for (double f : sol.port_fractions) CHECK(f == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("multicast splits sit 10*log10(k) below the unicast reference") {
  const DeviceSpec dev = DeviceSpec::default_device(1539.0);
  const SwitchPlan uni = plan_unicast(make_request(1539.0, {1}), dev);
  const double uni_ref = uni.rings[0].drop_fraction;

  const SwitchPlan mc3 = plan_multicast(make_request(1539.0, {1, 2, 3}), dev);
  for (double f : mc3.multicast->port_fractions) {
    const double below_db = units::lin_to_db(uni_ref / f);
    CHECK(below_db >= 4.77);
    CHECK(below_db == doctest::Approx(10.0 * std::log10(3.0)).epsilon(1e-6));
  }

  const SwitchPlan mc2 = plan_multicast(make_request(1552.0, {4, 5}), dev);
  for (double f : mc2.multicast->port_fractions)
    CHECK(units::lin_to_db(uni_ref / f) == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-3));
}

TEST_CASE("multicast carrier-wavelength imbalance stays below 0.1 dB") {
  // The split is equalized at the input wavelength; the ideal-model check
  // compares per-port transfer at the carrier (couplings cancel) with the
  // parked rings made transparent, isolating the detuned-ring splitting from
  // their ~0.3 dB through-path ripple.
  for (double wl : {1539.0, 1552.0, 1563.0}) {
    DeviceSpec dev = DeviceSpec::default_device(wl);
    const SwitchPlan plan = plan_multicast(make_request(wl, {2, 4, 7}), dev);
    for (int i = 0; i < kNumPorts; ++i)
      if (plan.rings[i].role == RingRole::kParked)
        dev.rings[i].peak_drop_efficiency = 1e-9;
    const auto states = plan.to_states(dev);
    const std::vector<double> grid = {units::freq_ghz(wl)};
    double pmin = 1e9, pmax = -1e9;
    for (int port : {2, 4, 7}) {
      const auto r = device_port_response(dev, states, port, grid, Direction::kForward);
      const double db = units::lin_to_db(std::norm(r.h[0]));
      pmin = std::min(pmin, db);
      pmax = std::max(pmax, db);
    }
    CHECK(pmax - pmin < 0.1);
  }
}

TEST_CASE("unicast crosstalk to unselected ports stays within the model bound") {
  const DeviceSpec dev = DeviceSpec::default_device(1552.0);
  const SwitchPlan plan = plan_unicast(make_request(1552.0, {5}), dev);
  const VerifyReport rep = verify_plan(plan, dev, 1552.0, 80.0);
  CHECK(rep.crosstalk_ok);
  // Parked rings sit at least one guard band (150 GHz) away; the Lorentzian
  // tail there is about -12 dB band-mean.
  CHECK(rep.worst_crosstalk_db <= -10.0);
  CHECK(rep.imbalance_ok);
}

TEST_CASE("shift_to_voltage inverts the thermo-optic polynomial") {
  RingSpec r = DeviceSpec::default_device().rings[0];
  r.thermo_c1_nm_per_v = 0.02;
  for (double v : {0.0, 0.7, 2.5, 5.0}) {
    const double shift = resonance_shift(r, v);
    CHECK(shift_to_voltage(r, shift) == doctest::Approx(v).epsilon(1e-12));
  }
  CHECK_THROWS_AS(shift_to_voltage(r, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(shift_to_voltage(r, r.fsr_nm), std::invalid_argument);
}

TEST_CASE("infeasible shifts raise InfeasiblePlanError") {
  DeviceSpec dev = DeviceSpec::default_device();
  for (auto& r : dev.rings) r.max_voltage_v = 1.0;  // 0.44 nm reach
  dev.validate();
  CHECK_THROWS_AS(plan_unicast(make_request(1552.0, {1}), dev), InfeasiblePlanError);
}

TEST_CASE("plan energy accounting uses power over bitrate") {
  const DeviceSpec dev = DeviceSpec::default_device();
  const SwitchPlan plan = plan_unicast(make_request(1552.0, {3}), dev);
  const EnergyReport rep = plan_energy(plan, dev, 120.0);
  CHECK(rep.total_power_mw == doctest::Approx(plan.total_power_mw));
  // mW / (Gb/s) = pJ/bit = 1000 fJ/bit.
  CHECK(rep.energy_fj_per_bit ==
        doctest::Approx(plan.total_power_mw / 120.0 * 1e3).epsilon(1e-12));
  CHECK_THROWS_AS(plan_energy(plan, dev, 0.0), std::invalid_argument);
}

TEST_CASE("a perfectly aligned request needs almost no tuning energy") {
  const DeviceSpec dev = DeviceSpec::default_device();
  // Input sitting exactly on ring 3's zero-bias resonance, neighbors clear.
  const double wl = dev.rings[2].zero_bias_resonance_nm;
  const SwitchPlan plan = plan_unicast(make_request(wl, {3}), dev);
  CHECK(plan.rings[2].shift_nm < 1e-9);
  // Only parked neighbors too close to the carrier contribute.
  CHECK(plan.energy_fj_per_bit < 60.0);
}

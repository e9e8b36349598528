#include "ringsw/harness/sweep.hpp"

#include "ringsw/dsp/chain.hpp"
#include "ringsw/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

namespace ringsw::harness {
namespace {

std::uint64_t wavelength_key(double wl_nm) {
  return static_cast<std::uint64_t>(std::llround(wl_nm * 1e3));  // pm resolution
}

// One transmission + reception measurement: a wavelength, a device, an
// optional switch plan and output port. Baseline points have no plan.
struct PointJob {
  double wavelength_nm = 0.0;
  SweepMode row_mode = SweepMode::kBaseline;
  int ring = 0;  // output port for switched points
  device::Direction direction = device::Direction::kForward;
  device::DeviceSpec device;          // as applied in the optical path
  std::optional<control::SwitchPlan> plan;
  std::string infeasible_note;  // nonempty: emit infeasible rows only
};

std::vector<SweepRow> infeasible_rows(const PointJob& job, int n_sub) {
  std::vector<SweepRow> rows(n_sub);
  for (int i = 0; i < n_sub; ++i) {
    rows[i].wavelength_nm = job.wavelength_nm;
    rows[i].mode = job.row_mode;
    rows[i].ring = job.ring;
    rows[i].direction = job.direction;
    rows[i].subchannel = i + 1;
    rows[i].infeasible = true;
    rows[i].note = job.infeasible_note;
  }
  return rows;
}

std::vector<SweepRow> measure_point(const ExperimentConfig& cfg, const PointJob& job) {
  if (!job.infeasible_note.empty()) return infeasible_rows(job, cfg.superchannel.n_sub);

  phy::SuperchannelSpec sc = cfg.superchannel;
  sc.center_wavelength_nm = job.wavelength_nm;
  const std::size_t n_sym = cfg.sweep.symbols_per_point;
  const std::size_t n_samples = n_sym * static_cast<std::size_t>(sc.sim_samples_per_symbol);
  const std::uint64_t master = cfg.sweep.seed;
  const std::uint64_t wl_key = wavelength_key(job.wavelength_nm);
  const auto ring_key = static_cast<std::uint64_t>(job.ring);

  // Seed streams exclude mode and direction so unicast, multicast and
  // reverse measurements of the same (wavelength, ring) share one noise
  // realization and stay directly comparable.
  Rng rng_tx(derive_seed(master, {hash_key("tx"), wl_key, ring_key}));
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(sc.n_sub) * n_sym * 2);
  for (auto& b : bits) b = rng_tx.bit() ? 1 : 0;

  auto tones = phy::generate_comb(sc, cfg.noise, n_samples, rng_tx);
  const double decorr = phy::decorrelation_delay_samples(
      cfg.decorrelation_fiber_m, cfg.fiber.group_index, sc.sample_rate_ghz());
  auto subs = phy::modulate_subchannels(tones, bits, sc, decorr);
  phy::OpticalField field = phy::combine_subchannels(subs, sc);
  field.set_power_dbm(0.0);

  field = phy::propagate_fiber(field, cfg.fiber);

  Rng rng_ch(derive_seed(master, {hash_key("ch"), wl_key, ring_key}));
  double plan_power_mw = 0.0;
  double fj_per_bit = 0.0;
  if (job.plan) {
    // Boost to the level that lands an on-resonance unicast drop at the
    // target received power; multicast ports then sit 10*log10(k) lower.
    const double peak = job.device.rings[job.ring - 1].peak_drop_efficiency;
    const double pre_switch_dbm = cfg.noise.target_received_dbm +
                                  job.device.input_coupling_loss_db +
                                  job.device.per_port_coupling_loss_db -
                                  units::lin_to_db(peak);
    field = phy::amplify(field, pre_switch_dbm, cfg.noise.edfa_nf_db, rng_ch);
    field = phy::apply_switch(field, job.device, *job.plan, job.ring, job.direction);
    plan_power_mw = job.plan->total_power_mw;
    fj_per_bit = job.plan->energy_fj_per_bit;
  } else {
    field = phy::amplify(field, cfg.noise.target_received_dbm, cfg.noise.edfa_nf_db, rng_ch);
  }
  // Receiver input is held at the target power for every measurement (the
  // rx-side gain stage); the reported rx power is the switch output so the
  // multicast split and port-dependent insertion loss stay observable.
  const double rx_power_dbm = field.power_dbm();
  field.set_power_dbm(cfg.noise.target_received_dbm);
  field = phy::add_noise_floor(field, cfg.noise.rx_noise_psd_dbm_per_ghz, rng_ch);

  dsp::DspConfig dsp_cfg;
  dsp_cfg.baud_ghz = sc.baud_gbaud;
  dsp_cfg.rolloff = sc.rolloff;
  dsp_cfg.min_symbols = std::min<std::size_t>(1000, n_sym);

  std::vector<SweepRow> rows(sc.n_sub);
  for (int i = 0; i < sc.n_sub; ++i) {
    Rng rng_lo(derive_seed(master, {hash_key("lo"), wl_key, ring_key,
                                    static_cast<std::uint64_t>(i)}));
    const double lo_ghz = field.center_freq_ghz + sc.sub_offset_ghz(i);
    const auto bb = phy::coherent_receive(field, lo_ghz, cfg.noise.lo_linewidth_khz,
                                          cfg.lo_freq_error_ghz, cfg.adc_rate_gsa, rng_lo);
    const cvec tx_syms = phy::subchannel_symbols(bits, sc, i, n_sym);
    const auto dsp_res = dsp::run_dsp_chain(bb.samples, bb.rate_ghz, tx_syms, dsp_cfg);

    SweepRow& row = rows[i];
    row.wavelength_nm = job.wavelength_nm;
    row.mode = job.row_mode;
    row.ring = job.ring;
    row.direction = job.direction;
    row.subchannel = i + 1;
    row.evm_percent = dsp_res.evm_percent;
    row.ber = dsp_res.ber_estimate;
    row.fec_pass = dsp_res.fec_pass;
    row.power_mw = plan_power_mw;
    row.fj_per_bit = fj_per_bit;
    row.rx_power_dbm = rx_power_dbm;
  }
  return rows;
}

void run_jobs(const ExperimentConfig& cfg, const std::vector<PointJob>& jobs,
              SweepResult& result) {
  std::vector<std::vector<SweepRow>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  unsigned n_threads = cfg.sweep.threads > 0 ? static_cast<unsigned>(cfg.sweep.threads)
                                             : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(jobs.size()));

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        slots[i] = measure_point(cfg, jobs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (auto& slot : slots)
    result.rows.insert(result.rows.end(), slot.begin(), slot.end());

  std::sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.wavelength_nm != b.wavelength_nm) return a.wavelength_nm < b.wavelength_nm;
    if (a.mode != b.mode) return static_cast<int>(a.mode) < static_cast<int>(b.mode);
    if (a.ring != b.ring) return a.ring < b.ring;
    if (a.direction != b.direction)
      return static_cast<int>(a.direction) < static_cast<int>(b.direction);
    return a.subchannel < b.subchannel;
  });
}

PointJob baseline_job(const ExperimentConfig&, double wl, device::Direction dir) {
  PointJob job;
  job.wavelength_nm = wl;
  job.row_mode = SweepMode::kBaseline;
  job.ring = 0;
  job.direction = dir;
  return job;
}

std::vector<PointJob> unicast_jobs(const ExperimentConfig& cfg, device::Direction dir) {
  std::vector<PointJob> jobs;
  for (double wl : cfg.sweep.wavelengths_nm) {
    if (cfg.sweep.include_baseline) jobs.push_back(baseline_job(cfg, wl, dir));
    const auto device = cfg.device_for_band(wl);
    for (int ring : cfg.sweep.rings) {
      PointJob job;
      job.wavelength_nm = wl;
      job.row_mode = dir == device::Direction::kForward ? SweepMode::kUnicast
                                                        : SweepMode::kBidirectional;
      job.ring = ring;
      job.direction = dir;
      job.device = device;
      control::RouteRequest req;
      req.input_wavelength_nm = wl;
      req.route_bitmap[ring - 1] = true;
      req.bitrate_gbps = cfg.sweep.bitrate_gbps;
      try {
        job.plan = control::plan_unicast(req, device, cfg.planner);
      } catch (const InfeasiblePlanError& e) {
        job.infeasible_note = e.what();
      }
      jobs.push_back(std::move(job));
    }
  }
  return jobs;
}

SweepResult finish(const ExperimentConfig& cfg, SweepMode mode, std::vector<PointJob> jobs) {
  SweepResult result;
  result.mode = mode;
  result.seed = cfg.sweep.seed;
  result.config_hash = config_hash(cfg);
  result.reconfiguration_latency_us = cfg.planner.reconfiguration_latency_us;
  run_jobs(cfg, jobs, result);
  return result;
}

}  // namespace

SweepResult run_unicast_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  return finish(cfg, SweepMode::kUnicast, unicast_jobs(cfg, device::Direction::kForward));
}

SweepResult run_bidirectional_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  return finish(cfg, SweepMode::kBidirectional,
                unicast_jobs(cfg, device::Direction::kReverse));
}

SweepResult run_multicast_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<PointJob> jobs;
  for (const auto& group : cfg.sweep.groups) {
    const auto device = cfg.device_for_band(group.wavelength_nm);
    control::RouteRequest req;
    req.input_wavelength_nm = group.wavelength_nm;
    for (int ring : group.rings) req.route_bitmap[ring - 1] = true;
    req.bitrate_gbps = cfg.sweep.bitrate_gbps;

    std::optional<control::SwitchPlan> plan;
    std::string note;
    try {
      plan = control::plan_multicast(req, device, cfg.planner);
    } catch (const InfeasiblePlanError& e) {
      note = e.what();
    }

    // Simultaneously tuned passbands narrow slightly; applied to the optical
    // path only, the planner still sees the nominal calibration.
    device::DeviceSpec applied = device;
    for (int ring : group.rings)
      applied.rings[ring - 1].bw_3db_ghz *= cfg.sweep.multicast_bw_factor;

    for (int ring : group.rings) {
      PointJob job;
      job.wavelength_nm = group.wavelength_nm;
      job.row_mode = SweepMode::kMulticast;
      job.ring = ring;
      job.direction = device::Direction::kForward;
      job.device = applied;
      job.plan = plan;
      job.infeasible_note = note;
      jobs.push_back(std::move(job));
    }
  }
  return finish(cfg, SweepMode::kMulticast, std::move(jobs));
}

SweepResult run_baseline_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<PointJob> jobs;
  for (double wl : cfg.sweep.wavelengths_nm)
    jobs.push_back(baseline_job(cfg, wl, device::Direction::kForward));
  return finish(cfg, SweepMode::kBaseline, std::move(jobs));
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
  switch (cfg.sweep.mode) {
    case SweepMode::kUnicast: return run_unicast_sweep(cfg);
    case SweepMode::kMulticast: return run_multicast_sweep(cfg);
    case SweepMode::kBidirectional: return run_bidirectional_sweep(cfg);
    case SweepMode::kBaseline: return run_baseline_sweep(cfg);
  }
  throw ConfigError("unknown sweep mode");
}

bool has_feasible_row(const SweepResult& result) {
  return std::any_of(result.rows.begin(), result.rows.end(),
                     [](const SweepRow& r) { return !r.infeasible; });
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + s + "' (expected csv|json)");
}

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

const char* dir_str(device::Direction d) {
  return d == device::Direction::kForward ? "fwd" : "rev";
}

}  // namespace

std::string format_csv(const SweepResult& result) {
  std::string out;
  char meta[128];
  std::snprintf(meta, sizeof(meta), "# seed=%llu config_hash=%016llx latency_us=%.1f\n",
                static_cast<unsigned long long>(result.seed),
                static_cast<unsigned long long>(result.config_hash),
                result.reconfiguration_latency_us);
  out += meta;
  out +=
      "wavelength_nm,mode,ring,direction,subchannel,evm_percent,ber,fec_pass,"
      "infeasible,power_mw,fj_per_bit,rx_power_dbm\n";
  for (const auto& r : result.rows) {
    out += fmt("%.3f", r.wavelength_nm);
    out += ",";
    out += to_string(r.mode);
    out += "," + std::to_string(r.ring);
    out += ",";
    out += dir_str(r.direction);
    out += "," + std::to_string(r.subchannel) + ",";
    if (r.infeasible) {
      out += ",,0,1";
    } else {
      out += fmt("%.2f", r.evm_percent) + "," + fmt("%.3e", r.ber) + "," +
             std::string(r.fec_pass ? "1" : "0") + ",0";
    }
    out += "," + fmt("%.6f", r.power_mw) + "," + fmt("%.6f", r.fj_per_bit) + ",";
    out += r.infeasible ? "" : fmt("%.2f", r.rx_power_dbm);
    out += "\n";
  }
  return out;
}

std::string format_json(const SweepResult& result) {
  nlohmann::ordered_json doc;
  doc["seed"] = result.seed;
  char hash_buf[24];
  std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                static_cast<unsigned long long>(result.config_hash));
  doc["config_hash"] = hash_buf;
  doc["mode"] = to_string(result.mode);
  doc["reconfiguration_latency_us"] = result.reconfiguration_latency_us;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json row;
    row["wavelength_nm"] = std::stod(fmt("%.3f", r.wavelength_nm));
    row["mode"] = to_string(r.mode);
    row["ring"] = r.ring;
    row["direction"] = dir_str(r.direction);
    row["subchannel"] = r.subchannel;
    if (r.infeasible) {
      row["evm_percent"] = nullptr;
      row["ber"] = nullptr;
      row["fec_pass"] = false;
      row["infeasible"] = true;
      row["note"] = r.note;
    } else {
      row["evm_percent"] = std::stod(fmt("%.2f", r.evm_percent));
      row["ber"] = std::stod(fmt("%.3e", r.ber));
      row["fec_pass"] = r.fec_pass;
      row["infeasible"] = false;
    }
    row["power_mw"] = std::stod(fmt("%.6f", r.power_mw));
    row["fj_per_bit"] = std::stod(fmt("%.6f", r.fj_per_bit));
    if (!r.infeasible) row["rx_power_dbm"] = std::stod(fmt("%.2f", r.rx_power_dbm));
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

void emit_results(const SweepResult& result, OutputFormat format, const std::string& path) {
  const std::string body =
      format == OutputFormat::kCsv ? format_csv(result) : format_json(result);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file for writing: " + path);
  out << body;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace ringsw::harness

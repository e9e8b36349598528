#include "ringsw/harness/config.hpp"

#include "ringsw/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace ringsw::harness {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

struct KeyValue {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, KeyValue>;

double to_double(const std::string& key, const KeyValue& kv) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(kv.value, &pos);
    if (pos != kv.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(kv.line) + ": key '" + key +
                      "' expects a number, got '" + kv.value + "'");
  }
}

long long to_int(const std::string& key, const KeyValue& kv) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(kv.value, &pos);
    if (pos != kv.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(kv.line) + ": key '" + key +
                      "' expects an integer, got '" + kv.value + "'");
  }
}

bool to_bool(const std::string& key, const KeyValue& kv) {
  if (kv.value == "true" || kv.value == "1") return true;
  if (kv.value == "false" || kv.value == "0") return false;
  throw ConfigError("line " + std::to_string(kv.line) + ": key '" + key +
                    "' expects true/false, got '" + kv.value + "'");
}

class IniReader {
 public:
  explicit IniReader(std::map<std::string, Section> sections) : sections_(std::move(sections)) {}

  bool has(const std::string& section, const std::string& key) {
    auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
  }
  KeyValue& at(const std::string& section, const std::string& key) {
    auto& kv = sections_[section][key];
    kv.used = true;
    return kv;
  }
  void get(const std::string& s, const std::string& k, double& out) {
    if (has(s, k)) out = to_double(k, at(s, k));
  }
  void get(const std::string& s, const std::string& k, int& out) {
    if (has(s, k)) out = static_cast<int>(to_int(k, at(s, k)));
  }
  void get(const std::string& s, const std::string& k, std::uint64_t& out) {
    if (has(s, k)) out = static_cast<std::uint64_t>(to_int(k, at(s, k)));
  }
  void get(const std::string& s, const std::string& k, bool& out) {
    if (has(s, k)) out = to_bool(k, at(s, k));
  }
  void get(const std::string& s, const std::string& k, std::string& out) {
    if (has(s, k)) out = at(s, k).value;
  }

  void check_all_used() const {
    for (const auto& [sec, kvs] : sections_) {
      for (const auto& [key, kv] : kvs) {
        if (!kv.used)
          throw ConfigError("line " + std::to_string(kv.line) + ": unknown key '" + key +
                            "' in section [" + sec + "]");
      }
    }
  }

  const std::map<std::string, Section>& sections() const { return sections_; }

 private:
  std::map<std::string, Section> sections_;
};

IniReader tokenize(const std::string& text, const std::string& origin) {
  static const std::vector<std::string> kSections = {"device", "superchannel", "fiber",
                                                     "noise", "sweep"};
  std::map<std::string, Section> sections;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find_first_of("#;");
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(line) + ": malformed section header");
      current = trim(s.substr(1, s.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), current) == kSections.end())
        throw ConfigError(origin + ":" + std::to_string(line) + ": unknown section [" +
                          current + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line) + ": expected key = value");
    if (current.empty())
      throw ConfigError(origin + ":" + std::to_string(line) + ": key outside any section");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(origin + ":" + std::to_string(line) + ": empty key or value");
    sections[current][key] = KeyValue{value, line, false};
  }
  return IniReader(std::move(sections));
}

std::vector<double> parse_double_list(const std::string& key, KeyValue& kv) {
  std::vector<double> out;
  for (const auto& tok : split(kv.value, ',')) out.push_back(to_double(key, KeyValue{tok, kv.line}));
  if (out.empty())
    throw ConfigError("line " + std::to_string(kv.line) + ": key '" + key + "' is empty");
  return out;
}

std::vector<int> parse_int_list(const std::string& key, KeyValue& kv) {
  std::vector<int> out;
  for (const auto& tok : split(kv.value, ','))
    out.push_back(static_cast<int>(to_int(key, KeyValue{tok, kv.line})));
  if (out.empty())
    throw ConfigError("line " + std::to_string(kv.line) + ": key '" + key + "' is empty");
  return out;
}

// "1539:1,2,3" -> group at 1539 nm with rings 1..3
MulticastGroup parse_group(const std::string& key, KeyValue& kv) {
  const auto colon = kv.value.find(':');
  if (colon == std::string::npos)
    throw ConfigError("line " + std::to_string(kv.line) + ": key '" + key +
                      "' expects wavelength:ring,ring[,ring]");
  MulticastGroup g;
  g.wavelength_nm = to_double(key, KeyValue{trim(kv.value.substr(0, colon)), kv.line});
  KeyValue rest{trim(kv.value.substr(colon + 1)), kv.line};
  g.rings = parse_int_list(key, rest);
  return g;
}

void load_device(IniReader& ini, ExperimentConfig& cfg) {
  const std::string s = "device";
  ini.get(s, "input_coupling_loss_db", cfg.device.input_coupling_loss_db);
  ini.get(s, "per_port_coupling_loss_db", cfg.device.per_port_coupling_loss_db);
  ini.get(s, "tuning_efficiency_nm_per_mw", cfg.device.tuning_efficiency_nm_per_mw);
  ini.get(s, "heater_resistance_ohm", cfg.device.heater_resistance_ohm);
  for (int k = 1; k <= device::kNumPorts; ++k) {
    auto& ring = cfg.device.rings[k - 1];
    const std::string p = "ring" + std::to_string(k) + ".";
    const bool any = ini.has(s, p + "zero_bias_nm") || ini.has(s, p + "bw_3db_ghz") ||
                     ini.has(s, p + "thermo_c2") || ini.has(s, p + "thermo_c1") ||
                     ini.has(s, p + "max_voltage_v");
    if (any) cfg.device_overridden = true;
    ini.get(s, p + "zero_bias_nm", ring.zero_bias_resonance_nm);
    ini.get(s, p + "bw_3db_ghz", ring.bw_3db_ghz);
    ini.get(s, p + "thermo_c2", ring.thermo_c2_nm_per_v2);
    ini.get(s, p + "thermo_c1", ring.thermo_c1_nm_per_v);
    ini.get(s, p + "max_voltage_v", ring.max_voltage_v);
    ini.get(s, p + "peak_drop_efficiency", ring.peak_drop_efficiency);
    ini.get(s, p + "extinction_floor_db", ring.through_extinction_floor_db);
    ini.get(s, p + "fsr_nm", ring.fsr_nm);
  }
}

void load_rest(IniReader& ini, ExperimentConfig& cfg) {
  ini.get("superchannel", "n_sub", cfg.superchannel.n_sub);
  ini.get("superchannel", "spacing_ghz", cfg.superchannel.spacing_ghz);
  ini.get("superchannel", "baud_gbaud", cfg.superchannel.baud_gbaud);
  ini.get("superchannel", "rolloff", cfg.superchannel.rolloff);
  ini.get("superchannel", "ocnr_db", cfg.superchannel.ocnr_db);
  ini.get("superchannel", "ocnr_rbw_pm", cfg.superchannel.ocnr_rbw_pm);
  ini.get("superchannel", "samples_per_symbol", cfg.superchannel.sim_samples_per_symbol);

  ini.get("fiber", "length_km", cfg.fiber.length_km);
  ini.get("fiber", "dispersion_ps_nm_km", cfg.fiber.dispersion_ps_nm_km);
  ini.get("fiber", "attenuation_db_km", cfg.fiber.attenuation_db_km);
  ini.get("fiber", "group_index", cfg.fiber.group_index);
  ini.get("fiber", "decorrelation_m", cfg.decorrelation_fiber_m);

  ini.get("noise", "master_linewidth_khz", cfg.noise.master_linewidth_khz);
  ini.get("noise", "lo_linewidth_khz", cfg.noise.lo_linewidth_khz);
  ini.get("noise", "edfa_nf_db", cfg.noise.edfa_nf_db);
  ini.get("noise", "target_received_dbm", cfg.noise.target_received_dbm);
  ini.get("noise", "rx_noise_psd_dbm_per_ghz", cfg.noise.rx_noise_psd_dbm_per_ghz);
  ini.get("noise", "lo_freq_error_ghz", cfg.lo_freq_error_ghz);
  ini.get("noise", "adc_rate_gsa", cfg.adc_rate_gsa);

  if (ini.has("sweep", "mode"))
    cfg.sweep.mode = parse_sweep_mode(ini.at("sweep", "mode").value);
  if (ini.has("sweep", "wavelengths_nm"))
    cfg.sweep.wavelengths_nm =
        parse_double_list("wavelengths_nm", ini.at("sweep", "wavelengths_nm"));
  if (ini.has("sweep", "rings"))
    cfg.sweep.rings = parse_int_list("rings", ini.at("sweep", "rings"));
  bool any_group = false;
  for (int g = 1; g <= device::kNumPorts; ++g) {
    const std::string key = "group" + std::to_string(g);
    if (!ini.has("sweep", key)) continue;
    if (!any_group) cfg.sweep.groups.clear();
    any_group = true;
    cfg.sweep.groups.push_back(parse_group(key, ini.at("sweep", key)));
  }
  ini.get("sweep", "seed", cfg.sweep.seed);
  ini.get("sweep", "symbols_per_point", cfg.sweep.symbols_per_point);
  ini.get("sweep", "multicast_bw_factor", cfg.sweep.multicast_bw_factor);
  ini.get("sweep", "include_baseline", cfg.sweep.include_baseline);
  ini.get("sweep", "threads", cfg.sweep.threads);
  ini.get("sweep", "guard_band_ghz", cfg.planner.guard_band_ghz);
  ini.get("sweep", "imbalance_db", cfg.planner.imbalance_db);
  ini.get("sweep", "reconfiguration_latency_us", cfg.planner.reconfiguration_latency_us);
  ini.get("sweep", "bitrate_gbps", cfg.sweep.bitrate_gbps);
}

}  // namespace

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::kUnicast: return "unicast";
    case SweepMode::kMulticast: return "multicast";
    case SweepMode::kBidirectional: return "bidirectional";
    case SweepMode::kBaseline: return "baseline";
  }
  return "unicast";
}

SweepMode parse_sweep_mode(const std::string& s) {
  if (s == "unicast") return SweepMode::kUnicast;
  if (s == "multicast") return SweepMode::kMulticast;
  if (s == "bidirectional") return SweepMode::kBidirectional;
  if (s == "baseline") return SweepMode::kBaseline;
  throw ConfigError("unknown sweep mode '" + s +
                    "' (expected unicast|multicast|bidirectional|baseline)");
}

void ExperimentConfig::validate() const {
  device.validate();
  if (superchannel.n_sub < 1 || superchannel.n_sub > 8)
    throw ConfigError("superchannel n_sub must be in [1, 8]");
  if (superchannel.baud_gbaud <= 0.0 || superchannel.spacing_ghz <= 0.0)
    throw ConfigError("superchannel baud and spacing must be positive");
  if (superchannel.spacing_ghz < superchannel.baud_gbaud * (1.0 + superchannel.rolloff))
    throw ConfigError("subchannel spacing below occupied subchannel bandwidth");
  if (superchannel.sim_samples_per_symbol < 4)
    throw ConfigError("samples_per_symbol must be at least 4");
  if (superchannel.sample_rate_ghz() < superchannel.occupied_bandwidth_ghz())
    throw ConfigError("simulation rate below superchannel occupied bandwidth");
  if (fiber.length_km < 0.0) throw ConfigError("fiber length must be nonnegative");
  if (adc_rate_gsa <= 2.0 * superchannel.baud_gbaud)
    throw ConfigError("ADC rate must exceed twice the symbol rate");
  if (sweep.wavelengths_nm.empty()) throw ConfigError("sweep wavelength set is empty");
  for (double wl : sweep.wavelengths_nm) {
    if (wl < planner.band_min_nm || wl > planner.band_max_nm)
      throw ConfigError("sweep wavelength " + std::to_string(wl) + " nm outside the device band");
  }
  if (sweep.rings.empty()) throw ConfigError("sweep ring set is empty");
  for (int r : sweep.rings) {
    if (r < 1 || r > device::kNumPorts)
      throw ConfigError("sweep ring index " + std::to_string(r) + " out of range 1..8");
  }
  for (const auto& g : sweep.groups) {
    if (g.rings.size() < 2 || g.rings.size() > 3)
      throw ConfigError("multicast groups must have 2 or 3 members");
    for (int r : g.rings) {
      if (r < 1 || r > device::kNumPorts)
        throw ConfigError("multicast ring index " + std::to_string(r) + " out of range 1..8");
    }
    if (g.wavelength_nm < planner.band_min_nm || g.wavelength_nm > planner.band_max_nm)
      throw ConfigError("multicast wavelength outside the device band");
  }
  if (sweep.symbols_per_point < 1024) throw ConfigError("symbols_per_point must be >= 1024");
  if (sweep.bitrate_gbps <= 0.0) throw ConfigError("bitrate_gbps must be positive");
  if (sweep.multicast_bw_factor <= 0.0 || sweep.multicast_bw_factor > 1.0)
    throw ConfigError("multicast_bw_factor must be in (0, 1]");
}

device::DeviceSpec ExperimentConfig::device_for_band(double band_nm) const {
  if (device_overridden) return device;
  auto spec = device::DeviceSpec::default_device(band_nm);
  spec.input_coupling_loss_db = device.input_coupling_loss_db;
  spec.per_port_coupling_loss_db = device.per_port_coupling_loss_db;
  spec.tuning_efficiency_nm_per_mw = device.tuning_efficiency_nm_per_mw;
  spec.heater_resistance_ohm = device.heater_resistance_ohm;
  return spec;
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  IniReader ini = tokenize(text, origin);
  ExperimentConfig cfg;
  load_device(ini, cfg);
  load_rest(ini, cfg);
  ini.check_all_used();
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  std::string blob;
  blob.reserve(2048);
  auto add = [&blob](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g|", v);
    blob += buf;
  };
  for (const auto& r : cfg.device.rings) {
    add(r.zero_bias_resonance_nm);
    add(r.fsr_nm);
    add(r.bw_3db_ghz);
    add(r.thermo_c2_nm_per_v2);
    add(r.thermo_c1_nm_per_v);
    add(r.max_voltage_v);
    add(r.peak_drop_efficiency);
    add(r.through_extinction_floor_db);
  }
  add(cfg.device_overridden ? 1 : 0);
  add(cfg.device.input_coupling_loss_db);
  add(cfg.device.per_port_coupling_loss_db);
  add(cfg.device.tuning_efficiency_nm_per_mw);
  add(cfg.device.heater_resistance_ohm);
  add(cfg.superchannel.n_sub);
  add(cfg.superchannel.spacing_ghz);
  add(cfg.superchannel.baud_gbaud);
  add(cfg.superchannel.rolloff);
  add(cfg.superchannel.ocnr_db);
  add(cfg.superchannel.ocnr_rbw_pm);
  add(cfg.superchannel.sim_samples_per_symbol);
  add(cfg.fiber.length_km);
  add(cfg.fiber.dispersion_ps_nm_km);
  add(cfg.fiber.attenuation_db_km);
  add(cfg.fiber.group_index);
  add(cfg.decorrelation_fiber_m);
  add(cfg.noise.master_linewidth_khz);
  add(cfg.noise.lo_linewidth_khz);
  add(cfg.noise.edfa_nf_db);
  add(cfg.noise.target_received_dbm);
  add(cfg.noise.rx_noise_psd_dbm_per_ghz);
  add(cfg.lo_freq_error_ghz);
  add(cfg.adc_rate_gsa);
  add(cfg.planner.guard_band_ghz);
  add(cfg.planner.imbalance_db);
  add(cfg.planner.reconfiguration_latency_us);
  blob += to_string(cfg.sweep.mode) + "|";
  for (double wl : cfg.sweep.wavelengths_nm) add(wl);
  for (int r : cfg.sweep.rings) add(r);
  for (const auto& g : cfg.sweep.groups) {
    add(g.wavelength_nm);
    for (int r : g.rings) add(r);
  }
  add(static_cast<double>(cfg.sweep.seed));
  add(static_cast<double>(cfg.sweep.symbols_per_point));
  add(cfg.sweep.bitrate_gbps);
  add(cfg.sweep.multicast_bw_factor);
  add(cfg.sweep.include_baseline ? 1 : 0);
  return hash_key(blob);
}

}  // namespace ringsw::harness

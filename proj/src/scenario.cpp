#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "rofbench/scenario.hpp"

namespace rofbench {

std::vector<double> SweepSettings::laser_powers_dbm() const {
  if (laser_power_step_db <= 0.0)
    throw ConfigError("sweep: laser_power_step_db must be positive");
  std::vector<double> out;
  for (double p = laser_power_start_dbm; p <= laser_power_stop_dbm + 1e-9;
       p += laser_power_step_db)
    out.push_back(p);
  if (out.empty()) throw ConfigError("sweep: empty laser power range");
  return out;
}

void FronthaulScenario::validate() const {
  if (wdm_channels < 1) throw ConfigError("scenario: wdm_channels must be >= 1");
  if (payload_symbols < 1000)
    throw ConfigError("scenario: payload_symbols must be >= 1000 for EVM statistics");
  if (spacing_ghz <= 0.0) throw ConfigError("scenario: spacing_ghz must be positive");
  fiber.validate();
  modulator.validate();
  detector.validate();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for " + key + ": '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != std::floor(d)) throw ConfigError("config: " + key + " must be an integer");
  return long(d);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: bad boolean for " + key + ": '" + v + "'");
}

std::vector<int> to_int_list(const std::string& key, const std::string& v) {
  std::vector<int> out;
  std::istringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(int(to_long(key, trim(item))));
  if (out.empty()) throw ConfigError("config: empty list for " + key);
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(path + ":" + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_override(std::map<std::string, std::string>& kv, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw ConfigError("--set expects key=value, got '" + spec + "'");
  kv[trim(spec.substr(0, eq))] = trim(spec.substr(eq + 1));
}

namespace {

FronthaulScenario build_scenario(std::map<std::string, std::string> kv) {
  FronthaulScenario sc;
  auto take = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto num = [&](const std::string& key, double& target) {
    if (auto v = take(key); !v.empty()) target = to_double(key, v);
  };
  auto integer = [&](const std::string& key, auto& target) {
    if (auto v = take(key); !v.empty())
      target = static_cast<std::remove_reference_t<decltype(target)>>(to_long(key, v));
  };

  if (auto v = take("link_kind"); !v.empty()) {
    try {
      sc.link_kind = link_kind_from_string(v);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  integer("wdm_channels", sc.wdm_channels);
  num("spacing_ghz", sc.spacing_ghz);
  integer("payload_symbols", sc.payload_symbols);
  if (auto v = take("drof_ook_transport"); !v.empty())
    sc.drof_ook_transport = to_bool("drof_ook_transport", v);

  double fc = sc.band.carrier_freq_ghz, wbb = sc.band.baseband_bw_ghz;
  num("band.carrier_freq_ghz", fc);
  num("band.baseband_bw_ghz", wbb);
  try {
    sc.band = RfBandPlan(fc, wbb);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  int nt = sc.geom.tx_antennas, nr = sc.geom.rx_antennas, m = sc.geom.sectors;
  integer("geom.tx_antennas", nt);
  integer("geom.rx_antennas", nr);
  integer("geom.sectors", m);
  int s = sc.mod.constellation_points;
  integer("mod.constellation_points", s);
  int r = sc.coding.resolution_bits;
  integer("coding.resolution_bits", r);
  double cw = sc.coding.control_overhead, lc = sc.coding.line_code_rate;
  num("coding.control_overhead", cw);
  num("coding.line_code_rate", lc);
  try {
    sc.geom = MimoGeometry(nt, nr, m);
    sc.mod = ModulationScheme(s);
    sc.coding = CpriCoding(r, cw, lc);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  num("fiber.length_km", sc.fiber.length_km);
  num("fiber.attenuation_db_per_km", sc.fiber.attenuation_db_per_km);
  num("fiber.dispersion_ps_nm_km", sc.fiber.dispersion_ps_nm_km);
  num("fiber.dispersion_slope_ps_nm2_km", sc.fiber.dispersion_slope_ps_nm2_km);
  num("fiber.gamma_per_w_km", sc.fiber.gamma_per_w_km);

  if (auto v = take("modulator.kind"); !v.empty()) {
    if (v == "mzm" || v == "external")
      sc.modulator.kind = ModulatorKind::ExternalMZM;
    else if (v == "dml" || v == "direct")
      sc.modulator.kind = ModulatorKind::DirectlyModulated;
    else
      throw ConfigError("config: unknown modulator kind '" + v + "'");
  }
  num("modulator.v_pi_volts", sc.modulator.v_pi_volts);
  num("modulator.bias_fraction", sc.modulator.bias_fraction);
  num("modulator.modulation_index", sc.modulator.modulation_index);
  num("modulator.chirp_factor", sc.modulator.chirp_factor);
  num("modulator.laser_power_dbm", sc.modulator.laser_power_dbm);
  num("modulator.drive_vrms_volts", sc.modulator.drive_vrms_volts);

  num("detector.responsivity_a_per_w", sc.detector.responsivity_a_per_w);
  num("detector.thermal_noise_a_per_sqrt_hz", sc.detector.thermal_noise_a_per_sqrt_hz);
  if (auto v = take("detector.shot_noise_enabled"); !v.empty())
    sc.detector.shot_noise_enabled = to_bool("detector.shot_noise_enabled", v);

  num("dsp.rolloff", sc.dsp.rolloff);
  integer("dsp.oversampling", sc.dsp.oversampling);
  integer("dsp.span_symbols", sc.dsp.span_symbols);

  integer("seeds.payload", sc.seeds.payload);
  integer("seeds.detector", sc.seeds.detector);

  num("sweep.laser_power_start_dbm", sc.sweep.laser_power_start_dbm);
  num("sweep.laser_power_stop_dbm", sc.sweep.laser_power_stop_dbm);
  num("sweep.laser_power_step_db", sc.sweep.laser_power_step_db);
  if (auto v = take("sweep.wdm_counts"); !v.empty())
    sc.sweep.wdm_counts = to_int_list("sweep.wdm_counts", v);
  num("sweep.evm_threshold_percent", sc.sweep.evm_threshold_percent);

  num("ssfm.step_km", sc.ssfm.step_km);
  if (auto v = take("ssfm.adaptive"); !v.empty())
    sc.ssfm.adaptive = to_bool("ssfm.adaptive", v);
  num("ssfm.max_nonlinear_phase_rad", sc.ssfm.max_nonlinear_phase_rad);

  if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");
  sc.validate();
  return sc;
}

}  // namespace

FronthaulScenario FronthaulScenario::from_file(
    const std::string& path, const std::vector<std::string>& overrides) {
  auto kv = parse_config_file(path);
  for (const auto& o : overrides) apply_override(kv, o);
  return build_scenario(std::move(kv));
}

FronthaulScenario FronthaulScenario::from_overrides(
    const std::vector<std::string>& overrides) {
  std::map<std::string, std::string> kv;
  for (const auto& o : overrides) apply_override(kv, o);
  return build_scenario(std::move(kv));
}

std::string FronthaulScenario::canonical_serialization() const {
  std::ostringstream ss;
  ss.precision(17);
  ss << "link_kind=" << to_string(link_kind) << '\n'
     << "band.carrier_freq_ghz=" << band.carrier_freq_ghz << '\n'
     << "band.baseband_bw_ghz=" << band.baseband_bw_ghz << '\n'
     << "geom.tx_antennas=" << geom.tx_antennas << '\n'
     << "geom.rx_antennas=" << geom.rx_antennas << '\n'
     << "geom.sectors=" << geom.sectors << '\n'
     << "mod.constellation_points=" << mod.constellation_points << '\n'
     << "coding.resolution_bits=" << coding.resolution_bits << '\n'
     << "coding.control_overhead=" << coding.control_overhead << '\n'
     << "coding.line_code_rate=" << coding.line_code_rate << '\n'
     << "fiber.length_km=" << fiber.length_km << '\n'
     << "fiber.attenuation_db_per_km=" << fiber.attenuation_db_per_km << '\n'
     << "fiber.dispersion_ps_nm_km=" << fiber.dispersion_ps_nm_km << '\n'
     << "fiber.dispersion_slope_ps_nm2_km=" << fiber.dispersion_slope_ps_nm2_km << '\n'
     << "fiber.gamma_per_w_km=" << fiber.gamma_per_w_km << '\n'
     << "modulator.kind="
     << (modulator.kind == ModulatorKind::ExternalMZM ? "mzm" : "dml") << '\n'
     << "modulator.v_pi_volts=" << modulator.v_pi_volts << '\n'
     << "modulator.bias_fraction=" << modulator.bias_fraction << '\n'
     << "modulator.modulation_index=" << modulator.modulation_index << '\n'
     << "modulator.chirp_factor=" << modulator.chirp_factor << '\n'
     << "modulator.laser_power_dbm=" << modulator.laser_power_dbm << '\n'
     << "modulator.drive_vrms_volts=" << modulator.drive_vrms_volts << '\n'
     << "detector.responsivity_a_per_w=" << detector.responsivity_a_per_w << '\n'
     << "detector.thermal_noise_a_per_sqrt_hz=" << detector.thermal_noise_a_per_sqrt_hz
     << '\n'
     << "detector.shot_noise_enabled=" << detector.shot_noise_enabled << '\n'
     << "dsp.rolloff=" << dsp.rolloff << '\n'
     << "dsp.oversampling=" << dsp.oversampling << '\n'
     << "dsp.span_symbols=" << dsp.span_symbols << '\n'
     << "wdm_channels=" << wdm_channels << '\n'
     << "spacing_ghz=" << spacing_ghz << '\n'
     << "payload_symbols=" << payload_symbols << '\n'
     << "seeds.payload=" << seeds.payload << '\n'
     << "seeds.detector=" << seeds.detector << '\n'
     << "drof_ook_transport=" << drof_ook_transport << '\n'
     << "ssfm.step_km=" << ssfm.step_km << '\n'
     << "ssfm.adaptive=" << ssfm.adaptive << '\n'
     << "ssfm.max_nonlinear_phase_rad=" << ssfm.max_nonlinear_phase_rad << '\n'
     << "sweep.laser_power_start_dbm=" << sweep.laser_power_start_dbm << '\n'
     << "sweep.laser_power_stop_dbm=" << sweep.laser_power_stop_dbm << '\n'
     << "sweep.laser_power_step_db=" << sweep.laser_power_step_db << '\n'
     << "sweep.evm_threshold_percent=" << sweep.evm_threshold_percent << '\n';
  ss << "sweep.wdm_counts=";
  for (std::size_t i = 0; i < sweep.wdm_counts.size(); ++i)
    ss << (i ? "," : "") << sweep.wdm_counts[i];
  ss << '\n';
  return ss.str();
}

std::string FronthaulScenario::hash() const {
  // FNV-1a 64
  const std::string data = canonical_serialization();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace rofbench

#include "rofbench/powermodel.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rofbench {

std::string to_string(LinkKind k) { return k == LinkKind::ARoF ? "arof" : "drof"; }

LinkKind link_kind_from_string(const std::string& s) {
  if (s == "arof" || s == "ARoF" || s == "a-rof") return LinkKind::ARoF;
  if (s == "drof" || s == "DRoF" || s == "d-rof") return LinkKind::DRoF;
  throw std::invalid_argument("unknown link kind: " + s);
}

void PowerParams::validate() const {
  const double vals[] = {climate_control,  cu_supply,          cu_sp_base,
                         cu_sp_per_antenna, eo_per_wavelength, oe_per_wavelength,
                         rrh_supply,        rrh_sp_base,       rrh_sp_per_antenna,
                         adc_per_converter, dac_per_converter, drof_sp_extra_per_antenna};
  for (double v : vals)
    if (v < 0.0) throw std::invalid_argument("PowerParams: coefficients must be >= 0");
}

static const std::map<std::string, double PowerParams::*>& field_map() {
  static const std::map<std::string, double PowerParams::*> m = {
      {"climate_control", &PowerParams::climate_control},
      {"cu_supply", &PowerParams::cu_supply},
      {"cu_sp_base", &PowerParams::cu_sp_base},
      {"cu_sp_per_antenna", &PowerParams::cu_sp_per_antenna},
      {"eo_per_wavelength", &PowerParams::eo_per_wavelength},
      {"oe_per_wavelength", &PowerParams::oe_per_wavelength},
      {"rrh_supply", &PowerParams::rrh_supply},
      {"rrh_sp_base", &PowerParams::rrh_sp_base},
      {"rrh_sp_per_antenna", &PowerParams::rrh_sp_per_antenna},
      {"adc_per_converter", &PowerParams::adc_per_converter},
      {"dac_per_converter", &PowerParams::dac_per_converter},
      {"drof_sp_extra_per_antenna", &PowerParams::drof_sp_extra_per_antenna},
  };
  return m;
}

PowerParams PowerParams::from_key_values(
    const std::vector<std::pair<std::string, double>>& kv) {
  PowerParams p;
  for (const auto& [key, val] : kv) {
    auto it = field_map().find(key);
    if (it == field_map().end())
      throw std::invalid_argument("PowerParams: unknown key '" + key + "'");
    p.*(it->second) = val;
  }
  p.validate();
  return p;
}

PowerParams PowerParams::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open power params file: " + path);
  std::vector<std::pair<std::string, double>> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    char eq = 0;
    double val = 0.0;
    if (!(ss >> eq >> val) || eq != '=')
      throw std::runtime_error("power params: bad line '" + line + "'");
    kv.emplace_back(key, val);
  }
  return from_key_values(kv);
}

PowerBreakdown link_power(const PowerParams& params, const MimoGeometry& geom,
                          LinkKind kind) {
  params.validate();
  const double wl = geom.wavelengths();
  const bool digital = kind == LinkKind::DRoF;

  PowerBreakdown b;
  b.cu.climate = params.climate_control;
  b.cu.supply = params.cu_supply;
  b.cu.signal_processing = params.cu_sp_base + wl * params.cu_sp_per_antenna;
  b.cu.eo = wl * params.eo_per_wavelength;
  b.cu.adc = digital ? wl * params.adc_per_converter : 0.0;

  b.rrh.oe = wl * params.oe_per_wavelength;
  b.rrh.supply = params.rrh_supply;
  b.rrh.signal_processing = params.rrh_sp_base + wl * params.rrh_sp_per_antenna +
                            (digital ? wl * params.drof_sp_extra_per_antenna : 0.0);
  b.rrh.dac = digital ? wl * params.dac_per_converter : 0.0;

  b.total_watts = b.cu.total() + b.rrh.total();
  return b;
}

std::vector<PowerSweepRow> power_sweep(const PowerParams& params,
                                       const MimoGeometry& geom_template,
                                       const std::vector<int>& antenna_counts) {
  if (antenna_counts.empty())
    throw std::invalid_argument("power_sweep: empty antenna count list");
  std::vector<PowerSweepRow> rows;
  rows.reserve(antenna_counts.size());
  for (std::size_t i = 0; i < antenna_counts.size(); ++i) {
    try {
      MimoGeometry g(antenna_counts[i], geom_template.rx_antennas,
                     geom_template.sectors);
      PowerSweepRow row;
      row.n_t = g.tx_antennas;
      row.arof_watts = link_power(params, g, LinkKind::ARoF).total_watts;
      row.drof_watts = link_power(params, g, LinkKind::DRoF).total_watts;
      rows.push_back(row);
    } catch (const std::exception& e) {
      throw std::domain_error("power_sweep: point " + std::to_string(i) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace rofbench

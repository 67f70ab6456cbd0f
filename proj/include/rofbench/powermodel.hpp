#pragma once

#include <string>
#include <vector>

#include "rofbench/dimensioning.hpp"

namespace rofbench {

enum class LinkKind { ARoF, DRoF };

std::string to_string(LinkKind k);
LinkKind link_kind_from_string(const std::string& s);

// Per-component power coefficients in watts. Values are configuration
// defaults for trend reproduction, not measured data. The ADC/DAC and the
// digital signal-processing increment apply only to the D-RoF chain.
struct PowerParams {
  double climate_control = 225.0;
  double cu_supply = 100.0;
  double cu_sp_base = 50.0;
  double cu_sp_per_antenna = 5.0;
  double eo_per_wavelength = 2.0;
  double oe_per_wavelength = 1.5;
  double rrh_supply = 50.0;
  double rrh_sp_base = 20.0;
  double rrh_sp_per_antenna = 3.0;
  double adc_per_converter = 1.2;
  double dac_per_converter = 1.0;
  double drof_sp_extra_per_antenna = 2.0;

  void validate() const;

  static PowerParams from_file(const std::string& path);
  static PowerParams from_key_values(
      const std::vector<std::pair<std::string, double>>& kv);
};

struct PowerBreakdown {
  struct Cu {
    double climate = 0.0;
    double supply = 0.0;
    double signal_processing = 0.0;
    double eo = 0.0;
    double adc = 0.0;
    double total() const { return climate + supply + signal_processing + eo + adc; }
  } cu;
  struct Rrh {
    double oe = 0.0;
    double supply = 0.0;
    double signal_processing = 0.0;
    double dac = 0.0;
    double total() const { return oe + supply + signal_processing + dac; }
  } rrh;
  double total_watts = 0.0;
};

PowerBreakdown link_power(const PowerParams& params, const MimoGeometry& geom,
                          LinkKind kind);

struct PowerSweepRow {
  int n_t = 0;
  double arof_watts = 0.0;
  double drof_watts = 0.0;
};

std::vector<PowerSweepRow> power_sweep(const PowerParams& params,
                                       const MimoGeometry& geom_template,
                                       const std::vector<int>& antenna_counts);

}  // namespace rofbench

#pragma once

#include <string>
#include <vector>

#include "rofbench/scenario.hpp"

namespace rofbench {

struct ChannelEvm {
  int channel = 0;
  EvmReport report;
};

// Full waveform-level chain for one scenario; one EVM entry per WDM channel.
std::vector<ChannelEvm> run_link(const FronthaulScenario& scenario);

struct SweepPoint {
  LinkKind kind = LinkKind::ARoF;
  int wdm = 1;
  double laser_dbm = 0.0;
  std::vector<ChannelEvm> channels;
  std::string error;  // empty on success; failed points don't stop the sweep

  bool ok() const { return error.empty(); }
  double worst_evm_percent() const;
};

struct DynamicRange {
  LinkKind kind = LinkKind::ARoF;
  int wdm = 1;
  double threshold_percent = 3.5;
  double range_db = 0.0;
};

struct SweepResult {
  std::vector<double> laser_powers_dbm;
  std::vector<int> wdm_counts;
  std::vector<SweepPoint> points;          // grid order: wdm-major, power-minor
  std::vector<DynamicRange> dynamic_ranges;
};

// Evaluate the (wdm_count x laser_power) grid for the template's link kind
// and extract the dynamic range per WDM count at the given EVM threshold.
// jobs <= 0 uses the hardware concurrency.
SweepResult run_evm_sweep(const FronthaulScenario& scenario_template,
                          const std::vector<double>& laser_powers_dbm,
                          const std::vector<int>& wdm_counts,
                          double threshold_percent, int jobs = 0);

std::vector<DimensioningReport> run_figure3(const FronthaulScenario& scenario,
                                            const std::vector<double>& bw_points_ghz);
std::vector<double> default_figure3_bw_points();

std::vector<PowerSweepRow> run_figure4(const PowerParams& params,
                                       const FronthaulScenario& scenario,
                                       const std::vector<int>& antenna_counts);

// CSV writers. Files start with a '# scenario_hash=...' provenance line when
// a hash is given; appending to an existing file with a different hash fails.
void write_dimension_csv(const std::string& path,
                         const std::vector<DimensioningReport>& rows,
                         const std::string& scenario_hash = "");
void write_dimension_json(const std::string& path,
                          const std::vector<DimensioningReport>& rows,
                          const std::string& scenario_hash = "");
void write_power_csv(const std::string& path, const std::vector<PowerSweepRow>& rows,
                     const std::string& scenario_hash = "");
void write_power_json(const std::string& path, const std::vector<PowerSweepRow>& rows,
                      const std::string& scenario_hash = "");
void write_sweep_csv(const std::string& path, const SweepResult& result,
                     const std::string& scenario_hash);
void write_sweep_json(const std::string& path, const SweepResult& result,
                      const std::string& scenario_hash);
void write_dynrange_csv(const std::string& path, const SweepResult& result,
                        const std::string& scenario_hash);

// run directory: <base>/<UTC timestamp>_<hash prefix>/
std::string make_run_directory(const std::string& base, const std::string& hash);

}  // namespace rofbench

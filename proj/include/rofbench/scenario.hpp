#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rofbench/dimensioning.hpp"
#include "rofbench/dsp.hpp"
#include "rofbench/optics.hpp"
#include "rofbench/powermodel.hpp"

namespace rofbench {

// configuration problems exit with code 2, runtime failures with 3
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioSeeds {
  std::uint64_t payload = 1;
  std::uint64_t detector = 1001;
};

struct SweepSettings {
  double laser_power_start_dbm = -4.0;
  double laser_power_stop_dbm = 18.0;
  double laser_power_step_db = 1.0;
  std::vector<int> wdm_counts = {1, 2, 3, 4};
  double evm_threshold_percent = 3.5;

  std::vector<double> laser_powers_dbm() const;
};

struct FronthaulScenario {
  LinkKind link_kind = LinkKind::ARoF;
  RfBandPlan band{2.5, 1.5};
  MimoGeometry geom{16, 16, 3};
  ModulationScheme mod{256};
  CpriCoding coding{15, 16.0 / 15.0, 10.0 / 8.0};
  FiberParams fiber{};
  ModulatorSpec modulator{};
  PhotodetectorSpec detector{};
  RrcParams dsp{};
  int wdm_channels = 4;
  double spacing_ghz = 200.0;
  std::size_t payload_symbols = 16384;
  ScenarioSeeds seeds{};
  SweepSettings sweep{};
  bool drof_ook_transport = false;  // default: error-free digital pipe
  SsfmOptions ssfm{};

  void validate() const;

  // symbol rate chosen so the occupied RF bandwidth (2*W_bb) equals
  // symbol_rate * (1 + rolloff)
  double symbol_rate_gbaud() const {
    return 2.0 * band.baseband_bw_ghz / (1.0 + dsp.rolloff);
  }

  // canonical ordered key=value serialization, for hashing and provenance
  std::string canonical_serialization() const;
  std::string hash() const;  // 16-hex-digit FNV-1a of the canonical form

  static FronthaulScenario from_file(const std::string& path,
                                     const std::vector<std::string>& overrides = {});
  static FronthaulScenario from_overrides(const std::vector<std::string>& overrides);
};

// Flat dotted-key view of an INI-style config file ([section] headers plus
// key = value lines). Used by the scenario loader and the CLI --set flag.
std::map<std::string, std::string> parse_config_file(const std::string& path);
void apply_override(std::map<std::string, std::string>& kv, const std::string& spec);

}  // namespace rofbench

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rofbench {

// RF band plan of one wireless carrier. baseband_bw_ghz is the single-sided
// baseband bandwidth; the occupied RF bandwidth per carrier is twice that.
struct RfBandPlan {
  double carrier_freq_ghz = 0.0;
  double baseband_bw_ghz = 0.0;

  RfBandPlan() = default;
  RfBandPlan(double fc_ghz, double wbb_ghz);

  double f_max_ghz() const { return carrier_freq_ghz + baseband_bw_ghz; }
  double f_min_ghz() const { return carrier_freq_ghz - baseband_bw_ghz; }
};

struct MimoGeometry {
  int tx_antennas = 1;
  int rx_antennas = 1;
  int sectors = 1;

  MimoGeometry() = default;
  MimoGeometry(int nt, int nr, int m);

  // one WDM wavelength per transmit antenna per sector
  int wavelengths() const { return tx_antennas * sectors; }
};

// CPRI-style rate overheads: quantizer resolution R, control signalling
// overhead C_w and the line-code rate (e.g. 10/8). Line coding is modeled
// only as these multiplicative factors.
struct CpriCoding {
  int resolution_bits = 15;
  double control_overhead = 16.0 / 15.0;
  double line_code_rate = 10.0 / 8.0;

  CpriCoding() = default;
  CpriCoding(int r, double cw, double c);
};

struct ModulationScheme {
  int constellation_points = 256;

  ModulationScheme() = default;
  explicit ModulationScheme(int s);

  int bits_per_symbol() const;
  int levels_per_dim() const;  // sqrt(S)
};

struct DimensioningReport {
  double bw_per_wavelength_ghz = 0.0;  // 2*W_bb, sweep axis
  double min_sampling_rate_ghz = 0.0;
  int zone_index = 0;
  double arof_bw_ghz = 0.0;
  double arof_rate_gbps = 0.0;
  double drof_bw_ghz = 0.0;
  double drof_rate_gbps = 0.0;
  double bandwidth_ratio = 0.0;  // B
  double rate_ratio = 0.0;       // bit-rate ratio (paper reuses "C")
};

constexpr double kUnboundedRateGhz = std::numeric_limits<double>::infinity();

// Highest valid Nyquist zone index for bandpass sampling.
int max_zone_index(const RfBandPlan& band);

// Valid sampling-rate interval for a given Nyquist zone. Zone 1 has an
// unbounded upper edge, returned as +inf.
std::pair<double, double> sampling_rate_range(const RfBandPlan& band, int zone);

// Lower edge of the highest valid zone: the minimum bandpass sampling rate.
double min_sampling_rate(const RfBandPlan& band);

double arof_bandwidth_ghz(const RfBandPlan& band, const MimoGeometry& geom);
double arof_bit_rate_gbps(const RfBandPlan& band, const MimoGeometry& geom,
                          const ModulationScheme& mod);
double drof_bit_rate_gbps(const RfBandPlan& band, const MimoGeometry& geom,
                          const CpriCoding& coding);
double drof_bandwidth_ghz(const RfBandPlan& band, const MimoGeometry& geom,
                          const CpriCoding& coding);

// D-RoF/A-RoF aggregate bandwidth ratio; independent of the MIMO geometry.
double bandwidth_ratio(const RfBandPlan& band, const CpriCoding& coding);
// D-RoF/A-RoF bit-rate ratio; also geometry-independent.
double rate_ratio(const RfBandPlan& band, const CpriCoding& coding,
                  const ModulationScheme& mod);

DimensioningReport dimension_report(const RfBandPlan& band, const MimoGeometry& geom,
                                    const CpriCoding& coding, const ModulationScheme& mod);

// One report per per-wavelength bandwidth point (2*W_bb values, GHz).
std::vector<DimensioningReport> dimension_sweep(double carrier_freq_ghz,
                                                const MimoGeometry& geom,
                                                const CpriCoding& coding,
                                                const ModulationScheme& mod,
                                                const std::vector<double>& bw_points_ghz);

}  // namespace rofbench

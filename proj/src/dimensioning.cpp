#include "rofbench/dimensioning.hpp"

#include <cmath>
#include <string>

namespace rofbench {

RfBandPlan::RfBandPlan(double fc_ghz, double wbb_ghz)
    : carrier_freq_ghz(fc_ghz), baseband_bw_ghz(wbb_ghz) {
  if (!(wbb_ghz > 0.0))
    throw std::invalid_argument("RfBandPlan: baseband bandwidth must be positive");
  if (!(fc_ghz > wbb_ghz))
    throw std::invalid_argument("RfBandPlan: carrier must exceed baseband bandwidth (f_min > 0)");
}

MimoGeometry::MimoGeometry(int nt, int nr, int m)
    : tx_antennas(nt), rx_antennas(nr), sectors(m) {
  if (nt < 1 || nr < 1 || m < 1)
    throw std::invalid_argument("MimoGeometry: all fields must be >= 1");
}

CpriCoding::CpriCoding(int r, double cw, double c)
    : resolution_bits(r), control_overhead(cw), line_code_rate(c) {
  if (r < 1) throw std::invalid_argument("CpriCoding: resolution_bits must be >= 1");
  if (cw < 1.0 || c < 1.0)
    throw std::invalid_argument("CpriCoding: overhead factors must be >= 1");
}

ModulationScheme::ModulationScheme(int s) : constellation_points(s) {
  if (s != 4 && s != 16 && s != 64 && s != 256)
    throw std::invalid_argument("ModulationScheme: S must be one of {4,16,64,256}");
}

int ModulationScheme::bits_per_symbol() const {
  int b = 0;
  for (int s = constellation_points; s > 1; s >>= 1) ++b;
  return b;
}

int ModulationScheme::levels_per_dim() const {
  return static_cast<int>(std::lround(std::sqrt(double(constellation_points))));
}

int max_zone_index(const RfBandPlan& band) {
  const double fmax = band.f_max_ghz();
  const double fmin = band.f_min_ghz();
  int nz = static_cast<int>(std::floor(fmax / (fmax - fmin)));
  return nz < 1 ? 1 : nz;
}

std::pair<double, double> sampling_rate_range(const RfBandPlan& band, int zone) {
  const int nz_max = max_zone_index(band);
  if (zone < 1 || zone > nz_max)
    throw std::domain_error("sampling_rate_range: zone must be in [1, " +
                            std::to_string(nz_max) + "], got " + std::to_string(zone));
  const double low = 2.0 * band.f_max_ghz() / zone;
  const double high =
      zone == 1 ? kUnboundedRateGhz : 2.0 * band.f_min_ghz() / (zone - 1);
  return {low, high};
}

double min_sampling_rate(const RfBandPlan& band) {
  return sampling_rate_range(band, max_zone_index(band)).first;
}

double arof_bandwidth_ghz(const RfBandPlan& band, const MimoGeometry& geom) {
  return 2.0 * band.baseband_bw_ghz * geom.wavelengths();
}

double arof_bit_rate_gbps(const RfBandPlan& band, const MimoGeometry& geom,
                          const ModulationScheme& mod) {
  return arof_bandwidth_ghz(band, geom) * mod.bits_per_symbol();
}

double drof_bit_rate_gbps(const RfBandPlan& band, const MimoGeometry& geom,
                          const CpriCoding& coding) {
  // D = f_s * R * N_t * M * 2 * C_w * C, factor 2 for the I/Q pair
  return min_sampling_rate(band) * coding.resolution_bits * geom.wavelengths() *
         2.0 * coding.control_overhead * coding.line_code_rate;
}

double drof_bandwidth_ghz(const RfBandPlan& band, const MimoGeometry& geom,
                          const CpriCoding& coding) {
  return drof_bit_rate_gbps(band, geom, coding) / 2.0;
}

double bandwidth_ratio(const RfBandPlan& band, const CpriCoding& coding) {
  return min_sampling_rate(band) * coding.resolution_bits * coding.control_overhead *
         coding.line_code_rate / (2.0 * band.baseband_bw_ghz);
}

double rate_ratio(const RfBandPlan& band, const CpriCoding& coding,
                  const ModulationScheme& mod) {
  return min_sampling_rate(band) * coding.resolution_bits * coding.control_overhead *
         coding.line_code_rate / (band.baseband_bw_ghz * mod.bits_per_symbol());
}

DimensioningReport dimension_report(const RfBandPlan& band, const MimoGeometry& geom,
                                    const CpriCoding& coding,
                                    const ModulationScheme& mod) {
  DimensioningReport r;
  r.bw_per_wavelength_ghz = 2.0 * band.baseband_bw_ghz;
  r.zone_index = max_zone_index(band);
  r.min_sampling_rate_ghz = min_sampling_rate(band);
  r.arof_bw_ghz = arof_bandwidth_ghz(band, geom);
  r.arof_rate_gbps = arof_bit_rate_gbps(band, geom, mod);
  r.drof_rate_gbps = drof_bit_rate_gbps(band, geom, coding);
  r.drof_bw_ghz = r.drof_rate_gbps / 2.0;
  r.bandwidth_ratio = bandwidth_ratio(band, coding);
  r.rate_ratio = rate_ratio(band, coding, mod);
  return r;
}

std::vector<DimensioningReport> dimension_sweep(double carrier_freq_ghz,
                                                const MimoGeometry& geom,
                                                const CpriCoding& coding,
                                                const ModulationScheme& mod,
                                                const std::vector<double>& bw_points_ghz) {
  if (bw_points_ghz.empty())
    throw std::invalid_argument("dimension_sweep: empty bandwidth list");
  std::vector<DimensioningReport> out;
  out.reserve(bw_points_ghz.size());
  for (std::size_t i = 0; i < bw_points_ghz.size(); ++i) {
    try {
      RfBandPlan band(carrier_freq_ghz, bw_points_ghz[i] / 2.0);
      out.push_back(dimension_report(band, geom, coding, mod));
    } catch (const std::exception& e) {
      throw std::domain_error("dimension_sweep: point " + std::to_string(i) + ": " +
                              e.what());
    }
  }
  return out;
}

}  // namespace rofbench

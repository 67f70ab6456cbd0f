#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rofbench/harness.hpp"

namespace rofbench {

namespace {

using json = nlohmann::json;

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = jobs > 0 ? std::size_t(jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

// Digital-pipe D-RoF with OOK transport enabled: the quantized bits ride an
// on-off keyed optical line whose error rate follows from the received eye;
// errors flip bits of the stored sample levels.
void apply_ook_errors(QuantizedStream& qs, const FronthaulScenario& sc, int channel) {
  const double loss = std::pow(
      10.0, -sc.fiber.attenuation_db_per_km * sc.fiber.length_km / 10.0);
  const double one_level_w = sc.modulator.laser_power_w() * loss;
  const double i1 = sc.detector.responsivity_a_per_w * one_level_w;
  const double line_rate_hz = qs.sample_rate_ghz * 1e9 * qs.resolution_bits * 2.0 *
                              sc.coding.control_overhead * sc.coding.line_code_rate;
  const double sigma =
      sc.detector.thermal_noise_a_per_sqrt_hz * std::sqrt(line_rate_hz / 2.0);
  if (sigma <= 0.0) return;
  const double qfac = i1 / (2.0 * sigma);
  const double ber = 0.5 * std::erfc(qfac / std::numbers::sqrt2);
  if (ber < 1e-15) return;

  std::mt19937_64 gen(sc.seeds.detector + 0x00C0FFEEu + std::uint64_t(channel));
  std::bernoulli_distribution flip(ber);
  const int r = qs.resolution_bits;
  const long half = 1L << (r - 1);
  const double delta = 2.0 * qs.full_scale / double(1L << r);
  auto corrupt = [&](std::vector<double>& stream) {
    for (double& v : stream) {
      long level = std::lround(v / delta - 0.5);
      unsigned long u = (unsigned long)(level + half);
      for (int b = 0; b < r; ++b)
        if (flip(gen)) u ^= 1ul << b;
      level = long(u) - half;
      v = (double(level) + 0.5) * delta;
    }
  };
  corrupt(qs.i_samples);
  corrupt(qs.q_samples);
}

// Data-aided symbol-timing alignment: estimate the residual delay of the
// received baseband against the clean reference via the cross-correlation
// peak (integer lag + ternary refinement on the band-limited correlation),
// then advance the signal by that delay with a spectral phase ramp. This
// models a timing-synchronized receiver and removes the deterministic
// group-delay walk-off that fiber dispersion puts on off-center WDM channels.
void align_timing(SampledWaveform& rx, const SampledWaveform& ref) {
  const std::size_t n = rx.samples.size();
  if (n == 0 || ref.samples.size() != n) return;
  std::vector<cplx> a = rx.samples, b = ref.samples;
  fft::forward(a);
  fft::forward(b);
  std::vector<cplx> cross(n);
  for (std::size_t i = 0; i < n; ++i) cross[i] = a[i] * std::conj(b[i]);

  auto corr = cross;
  fft::inverse(corr);
  std::size_t k0 = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(corr[i]) > std::abs(corr[k0])) k0 = i;
  const double lag0 = k0 <= n / 2 ? double(k0) : double(k0) - double(n);

  const double fs = rx.sample_rate_ghz;
  std::vector<double> freqs(n);
  for (std::size_t i = 0; i < n; ++i) freqs[i] = fft::bin_freq_ghz(i, n, fs);
  auto peak_mag = [&](double lag_samples) {
    const double tau = lag_samples / fs;
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      acc += cross[i] * std::polar(1.0, 2.0 * std::numbers::pi * freqs[i] * tau);
    return std::abs(acc);
  };
  double lo = lag0 - 1.0, hi = lag0 + 1.0;
  for (int it = 0; it < 60; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (peak_mag(m1) < peak_mag(m2))
      lo = m1;
    else
      hi = m2;
  }
  const double tau = 0.5 * (lo + hi) / fs;  // rx is delayed by tau ns
  if (tau == 0.0) return;
  for (std::size_t i = 0; i < n; ++i)
    a[i] *= std::polar(1.0, 2.0 * std::numbers::pi * freqs[i] * tau);
  fft::inverse(a);
  rx.samples = std::move(a);
}

[[noreturn]] void rethrow_with_stage(const std::string& stage, int channel,
                                     const std::exception& e) {
  throw std::runtime_error("stage " + stage + ", channel " +
                           std::to_string(channel) + ": " + e.what());
}

}  // namespace

double SweepPoint::worst_evm_percent() const {
  double worst = 0.0;
  for (const auto& c : channels) worst = std::max(worst, c.report.evm_percent_rms);
  return worst;
}

std::vector<ChannelEvm> run_link(const FronthaulScenario& sc) {
  sc.validate();
  const double fsym = sc.symbol_rate_gbaud();
  const int bps = sc.mod.bits_per_symbol();
  const int nch = sc.wdm_channels;
  const double fc = sc.band.carrier_freq_ghz;
  const double wbb = sc.band.baseband_bw_ghz;
  const bool digital = sc.link_kind == LinkKind::DRoF;

  std::vector<SymbolFrame> refs(nch);
  std::vector<SampledWaveform> passbands(nch);
  for (int c = 0; c < nch; ++c) {
    try {
      const auto bits = random_bits(sc.payload_symbols * bps, sc.seeds.payload + c);
      refs[c] = qam_modulate(bits, sc.mod, fsym);
      auto bb = pulse_shape(refs[c], sc.dsp);
      passbands[c] = upconvert(bb, fc, wbb);
    } catch (const std::exception& e) {
      rethrow_with_stage("transmit", c, e);
    }
    if (digital) {
      try {
        QuantizerSpec q;
        q.resolution_bits = sc.coding.resolution_bits;
        auto qs = bandpass_sample_quantize(passbands[c], sc.band, q);
        if (sc.drof_ook_transport) apply_ook_errors(qs, sc, c);
        passbands[c] = dac_reconstruct(qs, passbands[c].sample_rate_ghz);
      } catch (const std::exception& e) {
        rethrow_with_stage("digitize", c, e);
      }
    }
  }

  std::vector<ChannelEvm> results;
  results.reserve(nch);

  if (!digital) {
    // analogue transport: E/O -> WDM -> fiber -> demux -> O/E
    std::vector<OpticalField> channels(nch);
    for (int c = 0; c < nch; ++c) {
      try {
        channels[c] = eo_convert(passbands[c], sc.modulator);
      } catch (const std::exception& e) {
        rethrow_with_stage("eo_convert", c, e);
      }
    }
    OpticalField composite;
    try {
      const double max_off = (double(nch) - 1.0) / 2.0 * sc.spacing_ghz;
      // headroom for first-order FWM idlers outside the channel span
      const double min_rate =
          nch > 1 ? 2.0 * (2.0 * max_off + channels[0].sample_rate_ghz) : 0.0;
      composite = wdm_mux(channels, sc.spacing_ghz, min_rate);
      channels.clear();
      composite = fiber_propagate(composite, sc.fiber, sc.ssfm);
    } catch (const std::exception& e) {
      rethrow_with_stage("fiber", -1, e);
    }
    for (int c = 0; c < nch; ++c) {
      try {
        auto ch = wdm_demux(composite, c);
        auto rf = photodetect(ch, sc.detector, sc.seeds.detector + c);
        rf = electrical_bandpass(rf, fc, 2.0 * wbb);
        auto bb = downconvert(rf, fc, wbb);
        align_timing(bb, pulse_shape(refs[c], sc.dsp));
        auto rx = matched_filter_downsample(bb, sc.mod, fsym, sc.dsp);
        results.push_back({c, measure_evm(refs[c], rx)});
      } catch (const std::exception& e) {
        rethrow_with_stage("receive", c, e);
      }
    }
  } else {
    for (int c = 0; c < nch; ++c) {
      try {
        auto bb = downconvert(passbands[c], fc, wbb);
        auto rx = matched_filter_downsample(bb, sc.mod, fsym, sc.dsp);
        results.push_back({c, measure_evm(refs[c], rx)});
      } catch (const std::exception& e) {
        rethrow_with_stage("receive", c, e);
      }
    }
  }
  return results;
}

SweepResult run_evm_sweep(const FronthaulScenario& scenario_template,
                          const std::vector<double>& laser_powers_dbm,
                          const std::vector<int>& wdm_counts,
                          double threshold_percent, int jobs) {
  if (laser_powers_dbm.empty() || wdm_counts.empty())
    throw ConfigError("run_evm_sweep: empty sweep axes");
  SweepResult result;
  result.laser_powers_dbm = laser_powers_dbm;
  result.wdm_counts = wdm_counts;
  result.points.resize(laser_powers_dbm.size() * wdm_counts.size());

  parallel_for(result.points.size(), jobs, [&](std::size_t idx) {
    const std::size_t wi = idx / laser_powers_dbm.size();
    const std::size_t pi = idx % laser_powers_dbm.size();
    SweepPoint& pt = result.points[idx];
    pt.kind = scenario_template.link_kind;
    pt.wdm = wdm_counts[wi];
    pt.laser_dbm = laser_powers_dbm[pi];
    FronthaulScenario sc = scenario_template;
    sc.wdm_channels = pt.wdm;
    sc.modulator.laser_power_dbm = pt.laser_dbm;
    try {
      pt.channels = run_link(sc);
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  });

  for (std::size_t wi = 0; wi < wdm_counts.size(); ++wi) {
    DynamicRange dr;
    dr.kind = scenario_template.link_kind;
    dr.wdm = wdm_counts[wi];
    dr.threshold_percent = threshold_percent;
    double best = 0.0;
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t pi = 0; pi <= laser_powers_dbm.size(); ++pi) {
      const bool good =
          pi < laser_powers_dbm.size() &&
          result.points[wi * laser_powers_dbm.size() + pi].ok() &&
          result.points[wi * laser_powers_dbm.size() + pi].worst_evm_percent() <=
              threshold_percent;
      if (good && !in_run) {
        in_run = true;
        run_start = pi;
      } else if (!good && in_run) {
        in_run = false;
        best = std::max(best,
                        laser_powers_dbm[pi - 1] - laser_powers_dbm[run_start]);
      }
    }
    dr.range_db = best;
    result.dynamic_ranges.push_back(dr);
  }
  return result;
}

std::vector<double> default_figure3_bw_points() {
  std::vector<double> pts;
  for (int i = 1; i <= 20; ++i) pts.push_back(0.05 * i);
  return pts;
}

std::vector<DimensioningReport> run_figure3(const FronthaulScenario& scenario,
                                            const std::vector<double>& bw_points_ghz) {
  return dimension_sweep(scenario.band.carrier_freq_ghz, scenario.geom,
                         scenario.coding, scenario.mod, bw_points_ghz);
}

std::vector<PowerSweepRow> run_figure4(const PowerParams& params,
                                       const FronthaulScenario& scenario,
                                       const std::vector<int>& antenna_counts) {
  return power_sweep(params, scenario.geom, antenna_counts);
}

namespace {

// opens for append; creates with provenance + header, rejects hash mixing
std::ofstream open_result_file(const std::string& path, const std::string& hash,
                               const std::string& header) {
  namespace fs = std::filesystem;
  const bool exists = fs::is_regular_file(path) && fs::file_size(path) > 0;
  if (exists) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    const std::string expected = "# scenario_hash=" + hash;
    if (!hash.empty() && first != expected)
      throw std::runtime_error("refusing to append rows for scenario " + hash +
                               " to " + path + " (existing file has different hash)");
    std::ofstream out(path, std::ios::app);
    return out;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  if (!hash.empty()) out << "# scenario_hash=" << hash << "\n";
  out << header << "\n";
  return out;
}

}  // namespace

void write_dimension_csv(const std::string& path,
                         const std::vector<DimensioningReport>& rows,
                         const std::string& scenario_hash) {
  auto out = open_result_file(
      path, scenario_hash,
      "bw_per_wavelength_ghz,fs_ghz,nz,arof_bw_ghz,arof_rate_gbps,drof_bw_ghz,"
      "drof_rate_gbps,ratio_b,ratio_c");
  for (const auto& r : rows)
    out << fmt(r.bw_per_wavelength_ghz) << ',' << fmt(r.min_sampling_rate_ghz) << ','
        << r.zone_index << ',' << fmt(r.arof_bw_ghz) << ',' << fmt(r.arof_rate_gbps)
        << ',' << fmt(r.drof_bw_ghz) << ',' << fmt(r.drof_rate_gbps) << ','
        << fmt(r.bandwidth_ratio) << ',' << fmt(r.rate_ratio) << '\n';
}

static json dimension_row_json(const DimensioningReport& r) {
  return json{{"bw_per_wavelength_ghz", r.bw_per_wavelength_ghz},
              {"fs_ghz", r.min_sampling_rate_ghz},
              {"nz", r.zone_index},
              {"arof_bw_ghz", r.arof_bw_ghz},
              {"arof_rate_gbps", r.arof_rate_gbps},
              {"drof_bw_ghz", r.drof_bw_ghz},
              {"drof_rate_gbps", r.drof_rate_gbps},
              {"ratio_b", r.bandwidth_ratio},
              {"ratio_c", r.rate_ratio}};
}

void write_dimension_json(const std::string& path,
                          const std::vector<DimensioningReport>& rows,
                          const std::string& scenario_hash) {
  json doc;
  if (!scenario_hash.empty()) doc["scenario_hash"] = scenario_hash;
  doc["rows"] = json::array();
  for (const auto& r : rows) doc["rows"].push_back(dimension_row_json(r));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
}

void write_power_csv(const std::string& path, const std::vector<PowerSweepRow>& rows,
                     const std::string& scenario_hash) {
  auto out = open_result_file(path, scenario_hash, "n_t,arof_watts,drof_watts");
  for (const auto& r : rows)
    out << r.n_t << ',' << fmt(r.arof_watts) << ',' << fmt(r.drof_watts) << '\n';
}

void write_power_json(const std::string& path, const std::vector<PowerSweepRow>& rows,
                      const std::string& scenario_hash) {
  json doc;
  if (!scenario_hash.empty()) doc["scenario_hash"] = scenario_hash;
  doc["rows"] = json::array();
  for (const auto& r : rows)
    doc["rows"].push_back(json{{"n_t", r.n_t},
                               {"arof_watts", r.arof_watts},
                               {"drof_watts", r.drof_watts}});
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
}

void write_sweep_csv(const std::string& path, const SweepResult& result,
                     const std::string& scenario_hash) {
  auto out =
      open_result_file(path, scenario_hash, "kind,wdm,laser_dbm,channel,evm_percent");
  for (const auto& pt : result.points) {
    if (!pt.ok()) {
      out << to_string(pt.kind) << ',' << pt.wdm << ',' << fmt(pt.laser_dbm)
          << ",-1,nan\n";
      continue;
    }
    for (const auto& c : pt.channels)
      out << to_string(pt.kind) << ',' << pt.wdm << ',' << fmt(pt.laser_dbm) << ','
          << c.channel << ',' << fmt(c.report.evm_percent_rms) << '\n';
  }
}

void write_sweep_json(const std::string& path, const SweepResult& result,
                      const std::string& scenario_hash) {
  json doc;
  doc["scenario_hash"] = scenario_hash;
  doc["points"] = json::array();
  for (const auto& pt : result.points) {
    json p{{"kind", to_string(pt.kind)},
           {"wdm", pt.wdm},
           {"laser_dbm", pt.laser_dbm}};
    if (!pt.ok()) {
      p["error"] = pt.error;
    } else {
      p["channels"] = json::array();
      for (const auto& c : pt.channels)
        p["channels"].push_back(
            json{{"channel", c.channel}, {"evm_percent", c.report.evm_percent_rms}});
    }
    doc["points"].push_back(std::move(p));
  }
  doc["dynamic_ranges"] = json::array();
  for (const auto& dr : result.dynamic_ranges)
    doc["dynamic_ranges"].push_back(json{{"kind", to_string(dr.kind)},
                                         {"wdm", dr.wdm},
                                         {"threshold", dr.threshold_percent},
                                         {"dynamic_range_db", dr.range_db}});
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
}

void write_dynrange_csv(const std::string& path, const SweepResult& result,
                        const std::string& scenario_hash) {
  auto out =
      open_result_file(path, scenario_hash, "kind,wdm,threshold,dynamic_range_db");
  for (const auto& dr : result.dynamic_ranges)
    out << to_string(dr.kind) << ',' << dr.wdm << ',' << fmt(dr.threshold_percent)
        << ',' << fmt(dr.range_db) << '\n';
}

std::string make_run_directory(const std::string& base, const std::string& hash) {
  namespace fs = std::filesystem;
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
  std::string dir = base + "/" + stamp + "_" + hash.substr(0, 8);
  std::string candidate = dir;
  for (int suffix = 1; fs::exists(candidate); ++suffix)
    candidate = dir + "_" + std::to_string(suffix);
  fs::create_directories(candidate);
  return candidate;
}

}  // namespace rofbench

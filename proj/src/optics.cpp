#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "rofbench/optics.hpp"

namespace rofbench {

using std::numbers::pi;

namespace {
constexpr double kSpeedOfLight_nm_per_ps = 299792.458;
constexpr double kElectronCharge_c = 1.602176634e-19;
}  // namespace

void FiberParams::validate() const {
  if (length_km < 0.0 || attenuation_db_per_km < 0.0 || gamma_per_w_km < 0.0)
    throw std::invalid_argument("FiberParams: negative coefficient");
}

double FiberParams::beta2_ps2_km(double wavelength_nm) const {
  // beta2 = -D * lambda^2 / (2 pi c)
  return -dispersion_ps_nm_km * wavelength_nm * wavelength_nm /
         (2.0 * pi * kSpeedOfLight_nm_per_ps);
}

void ModulatorSpec::validate() const {
  if (v_pi_volts <= 0.0) throw std::invalid_argument("ModulatorSpec: v_pi must be > 0");
  if (bias_fraction <= 0.0 || bias_fraction >= 1.0)
    throw std::invalid_argument("ModulatorSpec: bias_fraction must be in (0, 1)");
  if (kind == ModulatorKind::DirectlyModulated &&
      (modulation_index <= 0.0 || modulation_index > 1.0))
    throw std::invalid_argument("ModulatorSpec: modulation_index must be in (0, 1]");
  if (drive_vrms_volts < 0.0)
    throw std::invalid_argument("ModulatorSpec: negative drive level");
}

double ModulatorSpec::laser_power_w() const {
  return std::pow(10.0, laser_power_dbm / 10.0) * 1e-3;
}

void PhotodetectorSpec::validate() const {
  if (responsivity_a_per_w <= 0.0)
    throw std::invalid_argument("PhotodetectorSpec: responsivity must be > 0");
  if (thermal_noise_a_per_sqrt_hz < 0.0)
    throw std::invalid_argument("PhotodetectorSpec: negative noise density");
}

OpticalField eo_convert(const SampledWaveform& rf, const ModulatorSpec& spec,
                        double center_wavelength_nm) {
  spec.validate();
  if (rf.samples.empty()) throw std::invalid_argument("eo_convert: empty waveform");
  const double p0 = spec.laser_power_w();
  const std::size_t n = rf.samples.size();

  // scale the real drive to the configured rms level
  double ms = 0.0;
  for (const auto& s : rf.samples) ms += s.real() * s.real();
  const double rms = std::sqrt(ms / double(n));
  const double scale = rms > 0.0 ? spec.drive_vrms_volts / rms : 0.0;

  OpticalField field;
  field.envelope.resize(n);
  field.sample_rate_ghz = rf.sample_rate_ghz;
  field.center_wavelength_nm = center_wavelength_nm;
  field.channel_plan = {{0, 0.0}};
  field.channel_rate_ghz = rf.sample_rate_ghz;

  if (spec.kind == ModulatorKind::ExternalMZM) {
    const double sqrt_p0 = std::sqrt(p0);
    const double bias_phase = (pi / 2.0) * spec.bias_fraction +
                              (pi / 4.0) * (2.0 * spec.bias_fraction - 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = scale * rf.samples[i].real();
      field.envelope[i] =
          sqrt_p0 * std::cos((pi / 2.0) * (v / spec.v_pi_volts) + bias_phase);
    }
  } else {
    double vmax = 0.0;
    for (const auto& s : rf.samples) vmax = std::max(vmax, std::abs(s.real()));
    const double m = spec.modulation_index;
    for (std::size_t i = 0; i < n; ++i) {
      const double vhat = vmax > 0.0 ? rf.samples[i].real() / vmax : 0.0;
      const double rel = 1.0 + m * vhat;
      if (rel <= 0.0)
        throw std::domain_error("eo_convert: DML drive clips below zero power");
      field.envelope[i] = std::polar(std::sqrt(p0 * rel),
                                     0.5 * spec.chirp_factor * std::log(rel));
    }
  }
  return field;
}

OpticalField wdm_mux(const std::vector<OpticalField>& channels, double spacing_ghz,
                     double min_composite_rate_ghz) {
  if (channels.empty()) throw std::invalid_argument("wdm_mux: no channels");
  const double fs_ch = channels[0].sample_rate_ghz;
  const std::size_t n_ch = channels[0].envelope.size();
  for (const auto& c : channels)
    if (c.sample_rate_ghz != fs_ch || c.envelope.size() != n_ch)
      throw std::invalid_argument("wdm_mux: channels must share rate and length");

  const std::size_t count = channels.size();
  const double max_offset = (double(count) - 1.0) / 2.0 * spacing_ghz;
  const double required =
      std::max(2.0 * (max_offset + fs_ch / 2.0), min_composite_rate_ghz);
  std::size_t factor = 1;
  while (double(factor) * fs_ch < required) factor *= 2;
  if (factor > 256)
    throw std::runtime_error("wdm_mux: channel span exceeds representable bandwidth");

  OpticalField out;
  out.sample_rate_ghz = fs_ch * double(factor);
  out.center_wavelength_nm = channels[0].center_wavelength_nm;
  out.channel_rate_ghz = fs_ch;
  out.wdm_spacing_ghz = count > 1 ? spacing_ghz : 0.0;
  out.envelope.assign(n_ch * factor, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < count; ++k) {
    const double offset = (double(k) - (double(count) - 1.0) / 2.0) * spacing_ghz;
    auto up = factor == 1 ? channels[k].envelope
                          : resample_to_count(channels[k].envelope, n_ch * factor);
    const double applied = frequency_shift(up, out.sample_rate_ghz, offset);
    out.channel_plan.emplace_back(int(k), applied);
    for (std::size_t i = 0; i < out.envelope.size(); ++i) out.envelope[i] += up[i];
  }
  return out;
}

OpticalField fiber_propagate(const OpticalField& field, const FiberParams& fiber,
                             const SsfmOptions& opts) {
  fiber.validate();
  if (field.envelope.empty()) throw std::invalid_argument("fiber_propagate: empty field");
  if (!opts.adaptive && opts.step_km <= 0.0)
    throw std::invalid_argument("fiber_propagate: step must be positive");

  OpticalField out = field;
  if (fiber.length_km == 0.0) return out;

  const double alpha_np = fiber.attenuation_db_per_km * std::log(10.0) / 10.0;
  const double beta2_ns2 = fiber.beta2_ps2_km(field.center_wavelength_nm) * 1e-6;
  const double gamma = fiber.gamma_per_w_km;
  const std::size_t n = out.envelope.size();
  const bool spectral = beta2_ns2 != 0.0;

  std::vector<double> omega2;
  if (spectral) {
    omega2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = 2.0 * pi * fft::bin_freq_ghz(i, n, out.sample_rate_ghz);
      omega2[i] = w * w;
    }
  }

  auto make_factors = [&](double dz) {
    std::vector<cplx> f(n);
    const double g = std::exp(-0.5 * alpha_np * dz);
    for (std::size_t i = 0; i < n; ++i)
      f[i] = std::polar(g, 0.5 * beta2_ns2 * omega2[i] * dz);
    return f;
  };
  auto linear_step_cached = [&](const std::vector<cplx>& factors) {
    fft::forward(out.envelope);
    for (std::size_t i = 0; i < n; ++i) out.envelope[i] *= factors[i];
    fft::inverse(out.envelope);
  };
  auto linear_step = [&](double dz) {
    if (spectral) {
      linear_step_cached(make_factors(dz));
    } else if (alpha_np != 0.0) {
      const double g = std::exp(-0.5 * alpha_np * dz);
      for (auto& a : out.envelope) a *= g;
    }
  };
  auto nonlinear_step = [&](double dz) {
    if (gamma == 0.0) return;
    for (auto& a : out.envelope) a *= std::polar(1.0, gamma * std::norm(a) * dz);
  };
  auto peak_power = [&] {
    double p = 0.0;
    for (const auto& a : out.envelope) p = std::max(p, std::norm(a));
    return p;
  };

  if (!opts.adaptive) {
    const std::size_t steps =
        std::max<std::size_t>(1, std::size_t(std::ceil(fiber.length_km / opts.step_km)));
    const double dz = fiber.length_km / double(steps);
    if (spectral) {
      const auto half = make_factors(dz / 2.0);
      const auto full = make_factors(dz);
      linear_step_cached(half);
      for (std::size_t s = 0; s < steps; ++s) {
        nonlinear_step(dz);
        linear_step_cached(s + 1 < steps ? full : half);
      }
    } else {
      linear_step(dz / 2.0);
      for (std::size_t s = 0; s < steps; ++s) {
        nonlinear_step(dz);
        linear_step(s + 1 < steps ? dz : dz / 2.0);
      }
    }
  } else {
    double z = 0.0;
    while (z < fiber.length_km) {
      double dz = fiber.length_km - z;
      if (gamma > 0.0) {
        const double pk = peak_power();
        if (pk > 0.0)
          dz = std::min(dz, std::max(1e-4, opts.max_nonlinear_phase_rad / (gamma * pk)));
      }
      linear_step(dz / 2.0);
      nonlinear_step(dz);
      linear_step(dz / 2.0);
      z += dz;
    }
  }

  for (const auto& a : out.envelope)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::runtime_error("fiber_propagate: non-finite field (diverged)");
  return out;
}

OpticalField wdm_demux(const OpticalField& composite, int channel_index,
                       double bandwidth_fraction) {
  auto it = std::find_if(composite.channel_plan.begin(), composite.channel_plan.end(),
                         [&](const auto& p) { return p.first == channel_index; });
  if (it == composite.channel_plan.end())
    throw std::invalid_argument("wdm_demux: unknown channel index " +
                                std::to_string(channel_index));
  const double offset = it->second;
  const double fs = composite.sample_rate_ghz;
  const double ch_rate =
      composite.channel_rate_ghz > 0.0 ? composite.channel_rate_ghz : fs;

  OpticalField out;
  out.sample_rate_ghz = fs;
  out.center_wavelength_nm = composite.center_wavelength_nm;
  out.channel_rate_ghz = ch_rate;
  out.channel_plan = {{channel_index, 0.0}};
  out.envelope = composite.envelope;
  frequency_shift(out.envelope, fs, -offset);

  // channel-select filter: |H|^2 = 2^-( (2f/B3)^4 )
  const double b3 = composite.wdm_spacing_ghz > 0.0
                        ? bandwidth_fraction * composite.wdm_spacing_ghz
                        : ch_rate;
  const double ln2_half = 0.5 * std::numbers::ln2;
  apply_frequency_response(out.envelope, fs, [b3, ln2_half](double f) {
    const double x = 2.0 * f / b3;
    const double x2 = x * x;
    return cplx(std::exp(-ln2_half * x2 * x2), 0.0);
  });

  if (ch_rate < fs) {
    const std::size_t count = std::size_t(
        std::llround(double(out.envelope.size()) * ch_rate / fs));
    out.envelope = resample_to_count(out.envelope, count);
    out.sample_rate_ghz = double(count) * fs / double(composite.envelope.size());
  }
  return out;
}

SampledWaveform photodetect(const OpticalField& field, const PhotodetectorSpec& spec,
                            std::uint64_t seed) {
  spec.validate();
  if (field.channel_plan.size() > 1)
    throw std::invalid_argument("photodetect: expects a single-channel field");
  const std::size_t n = field.envelope.size();
  SampledWaveform out;
  out.sample_rate_ghz = field.sample_rate_ghz;
  out.center_freq_ghz = 0.0;
  out.samples.resize(n);

  const double bw_hz = field.sample_rate_ghz * 1e9 / 2.0;
  const double thermal_sigma = spec.thermal_noise_a_per_sqrt_hz * std::sqrt(bw_hz);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (std::size_t i = 0; i < n; ++i) {
    double current = spec.responsivity_a_per_w * std::norm(field.envelope[i]);
    if (spec.shot_noise_enabled && current > 0.0)
      current += std::sqrt(2.0 * kElectronCharge_c * current * bw_hz) * gauss(gen);
    if (thermal_sigma > 0.0) current += thermal_sigma * gauss(gen);
    out.samples[i] = cplx(current, 0.0);
  }
  return out;
}

SampledWaveform electrical_bandpass(const SampledWaveform& rf, double center_ghz,
                                    double bandwidth_ghz) {
  const double fs = rf.sample_rate_ghz;
  const double transition = 0.05 * bandwidth_ghz;
  if (center_ghz <= 0.0 || bandwidth_ghz <= 0.0 ||
      center_ghz + bandwidth_ghz / 2.0 + transition > fs / 2.0)
    throw std::domain_error("electrical_bandpass: band outside representable range");
  SampledWaveform out = rf;
  const double lo = center_ghz - bandwidth_ghz / 2.0;
  const double hi = center_ghz + bandwidth_ghz / 2.0;
  apply_frequency_response(out.samples, fs, [=](double f) {
    const double af = std::abs(f);
    double g = 0.0;
    if (af >= lo && af <= hi) {
      g = 1.0;
    } else if (af > lo - transition && af < lo) {
      g = 0.5 * (1.0 + std::cos(pi * (lo - af) / transition));
    } else if (af > hi && af < hi + transition) {
      g = 0.5 * (1.0 + std::cos(pi * (af - hi) / transition));
    }
    return cplx(g, 0.0);
  });
  return out;
}

}  // namespace rofbench

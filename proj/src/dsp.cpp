#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "rofbench/dsp.hpp"

namespace rofbench {

using std::numbers::pi;

std::vector<double> rrc_taps(const RrcParams& p) {
  if (p.rolloff < 0.0 || p.rolloff > 1.0)
    throw std::domain_error("rrc_taps: rolloff must be in [0, 1]");
  if (p.oversampling < 2 || p.span_symbols < 1)
    throw std::domain_error("rrc_taps: bad oversampling/span");
  const int half = p.span_symbols * p.oversampling / 2;
  const double beta = p.rolloff;
  std::vector<double> taps(2 * half + 1);
  for (int k = -half; k <= half; ++k) {
    const double t = double(k) / p.oversampling;  // in symbol periods
    double h;
    if (k == 0) {
      h = 1.0 - beta + 4.0 * beta / pi;
    } else if (beta > 0.0 &&
               std::abs(std::abs(t) - 1.0 / (4.0 * beta)) < 1e-9) {
      h = (beta / std::sqrt(2.0)) *
          ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * beta)) +
           (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * beta)));
    } else {
      const double num = std::sin(pi * t * (1.0 - beta)) +
                         4.0 * beta * t * std::cos(pi * t * (1.0 + beta));
      const double den = pi * t * (1.0 - 16.0 * beta * beta * t * t);
      h = num / den;
    }
    taps[k + half] = h;
  }
  double energy = 0.0;
  for (double v : taps) energy += v * v;
  const double inv = 1.0 / std::sqrt(energy);
  for (double& v : taps) v *= inv;
  return taps;
}

SampledWaveform pulse_shape(const SymbolFrame& frame, const RrcParams& p) {
  if (frame.symbols.empty()) throw std::invalid_argument("pulse_shape: empty frame");
  const auto taps = rrc_taps(p);
  SampledWaveform w;
  w.sample_rate_ghz = frame.symbol_rate_gbaud * p.oversampling;
  w.center_freq_ghz = 0.0;
  w.samples.assign(frame.symbols.size() * p.oversampling, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < frame.symbols.size(); ++k)
    w.samples[k * p.oversampling] = frame.symbols[k];
  circular_fir(w.samples, taps);
  return w;
}

SymbolFrame matched_filter_downsample(const SampledWaveform& baseband,
                                      const ModulationScheme& scheme,
                                      double symbol_rate_gbaud, const RrcParams& p) {
  if (baseband.samples.size() % p.oversampling != 0)
    throw std::invalid_argument("matched_filter_downsample: length not a symbol multiple");
  std::vector<cplx> filtered = baseband.samples;
  circular_fir(filtered, rrc_taps(p));
  SymbolFrame frame;
  frame.scheme = scheme;
  frame.symbol_rate_gbaud = symbol_rate_gbaud;
  frame.symbols.reserve(filtered.size() / p.oversampling);
  for (std::size_t k = 0; k < filtered.size(); k += p.oversampling)
    frame.symbols.push_back(filtered[k]);
  return frame;
}

SampledWaveform upconvert(const SampledWaveform& baseband, double carrier_ghz,
                          double occupied_halfbw_ghz) {
  if (carrier_ghz <= 0.0) throw std::domain_error("upconvert: carrier must be positive");
  double halfbw = occupied_halfbw_ghz > 0.0 ? occupied_halfbw_ghz
                                            : baseband.sample_rate_ghz / 4.0;
  const double required = 2.0 * (carrier_ghz + halfbw);
  SampledWaveform out;
  out.sample_rate_ghz = baseband.sample_rate_ghz;
  out.samples = baseband.samples;
  if (out.sample_rate_ghz < required) {
    const std::size_t factor =
        std::size_t(std::ceil(required / out.sample_rate_ghz));
    out.samples = resample_to_count(out.samples, out.samples.size() * factor);
    out.sample_rate_ghz *= double(factor);
  }
  frequency_shift(out.samples, out.sample_rate_ghz, carrier_ghz);
  const double sqrt2 = std::numbers::sqrt2;
  for (auto& s : out.samples) s = cplx(sqrt2 * s.real(), 0.0);
  out.center_freq_ghz = 0.0;  // real passband signal
  return out;
}

SampledWaveform downconvert(const SampledWaveform& passband, double carrier_ghz,
                            double cutoff_ghz) {
  const double fs = passband.sample_rate_ghz;
  if (carrier_ghz <= 0.0 || carrier_ghz >= fs / 2.0)
    throw std::domain_error("downconvert: carrier outside representable range");
  const double cutoff = cutoff_ghz > 0.0 ? cutoff_ghz : carrier_ghz;
  SampledWaveform out;
  out.sample_rate_ghz = fs;
  out.center_freq_ghz = 0.0;
  out.samples = passband.samples;
  frequency_shift(out.samples, fs, -carrier_ghz);
  const double sqrt2 = std::numbers::sqrt2;
  for (auto& s : out.samples) s *= sqrt2;
  apply_frequency_response(out.samples, fs, [cutoff](double f) {
    return std::abs(f) <= cutoff ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  });
  return out;
}

namespace {

double quantize_midrise(double x, double delta, double full_scale, bool& clipped) {
  clipped = std::abs(x) >= full_scale;
  double v = (std::floor(x / delta) + 0.5) * delta;
  const double top = full_scale - delta / 2.0;
  if (v > top) v = top;
  if (v < -top) v = -top;
  return v;
}

}  // namespace

QuantizedStream bandpass_sample_quantize(const SampledWaveform& passband,
                                         const RfBandPlan& band,
                                         const QuantizerSpec& q) {
  if (q.resolution_bits < 1 || q.resolution_bits > 31)
    throw std::domain_error("quantizer resolution out of range");
  const double fr = passband.sample_rate_ghz;
  if (band.f_max_ghz() > fr / 2.0)
    throw std::domain_error("bandpass_sample_quantize: band exceeds waveform Nyquist");

  // reject inputs whose energy leaks materially outside [f_min, f_max]
  {
    std::vector<cplx> spec = passband.samples;
    fft::forward(spec);
    double in_band = 0.0, total = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const double f = std::abs(fft::bin_freq_ghz(i, spec.size(), fr));
      const double e = std::norm(spec[i]);
      total += e;
      if (f >= band.f_min_ghz() - 1e-9 && f <= band.f_max_ghz() + 1e-9) in_band += e;
    }
    if (total > 0.0 && (total - in_band) / total > 1e-3)
      throw std::domain_error(
          "bandpass_sample_quantize: occupied band exceeds [f_min, f_max]");
  }

  SampledWaveform bb = downconvert(passband, band.carrier_freq_ghz,
                                   band.baseband_bw_ghz);
  const double fs_target = min_sampling_rate(band);
  const std::size_t n = bb.samples.size();
  const std::size_t m = std::size_t(std::llround(double(n) * fs_target / fr));
  auto resampled = resample_to_count(bb.samples, m);
  const double fs_actual = double(m) * fr / double(n);

  double power = 0.0;
  for (const auto& s : resampled) power += std::norm(s);
  const double rms_component = std::sqrt(power / (2.0 * double(m)));
  const double full_scale =
      q.full_scale > 0.0 ? q.full_scale
                         : (rms_component > 0.0 ? 4.0 * rms_component : 1.0);
  const double delta = 2.0 * full_scale / double(1u << q.resolution_bits);

  QuantizedStream out;
  out.i_samples.resize(m);
  out.q_samples.resize(m);
  std::size_t clipped_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    bool ci = false, cq = false;
    out.i_samples[i] = quantize_midrise(resampled[i].real(), delta, full_scale, ci);
    out.q_samples[i] = quantize_midrise(resampled[i].imag(), delta, full_scale, cq);
    clipped_count += std::size_t(ci) + std::size_t(cq);
  }
  out.sample_rate_ghz = fs_actual;
  out.carrier_freq_ghz = band.carrier_freq_ghz;
  out.band_halfwidth_ghz = band.baseband_bw_ghz;
  out.full_scale = full_scale;
  out.clip_fraction = double(clipped_count) / double(2 * m);
  out.resolution_bits = q.resolution_bits;
  out.source_count = n;
  out.source_rate_ghz = fr;
  return out;
}

SampledWaveform dac_reconstruct(const QuantizedStream& stream,
                                double target_rate_ghz) {
  if (stream.i_samples.empty())
    throw std::invalid_argument("dac_reconstruct: empty stream");
  const std::size_t m = stream.i_samples.size();
  std::vector<cplx> z(m);
  for (std::size_t i = 0; i < m; ++i)
    z[i] = cplx(stream.i_samples[i], stream.q_samples[i]);
  const std::size_t count =
      std::size_t(std::llround(double(m) * target_rate_ghz / stream.sample_rate_ghz));
  auto up = resample_to_count(z, count);
  const double rate = double(count) * stream.sample_rate_ghz / double(m);
  // reconstruction filter: confine to the original RF band
  const double halfbw = stream.band_halfwidth_ghz;
  apply_frequency_response(up, rate, [halfbw](double f) {
    return std::abs(f) <= halfbw ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  });
  SampledWaveform bb;
  bb.samples = std::move(up);
  bb.sample_rate_ghz = rate;
  bb.center_freq_ghz = 0.0;
  return upconvert(bb, stream.carrier_freq_ghz, halfbw);
}

std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::uint8_t> bits(count);
  std::uint64_t word = 0;
  int avail = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (avail == 0) {
      word = gen();
      avail = 64;
    }
    bits[i] = std::uint8_t(word & 1u);
    word >>= 1;
    --avail;
  }
  return bits;
}

}  // namespace rofbench

#include "rofbench/signal.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rofbench {

double SampledWaveform::energy() const {
  double e = 0.0;
  for (const auto& s : samples) e += std::norm(s);
  return e / sample_rate_ghz;
}

double SampledWaveform::rms() const {
  if (samples.empty()) return 0.0;
  double e = 0.0;
  for (const auto& s : samples) e += std::norm(s);
  return std::sqrt(e / double(samples.size()));
}

double OpticalField::energy() const {
  double e = 0.0;
  for (const auto& s : envelope) e += std::norm(s);
  return e / sample_rate_ghz;
}

double OpticalField::average_power_w() const {
  if (envelope.empty()) return 0.0;
  double e = 0.0;
  for (const auto& s : envelope) e += std::norm(s);
  return e / double(envelope.size());
}

namespace fft {

// FFTW planning is not thread-safe; execution of independent plans is.
static std::mutex g_plan_mutex;

static void run(std::vector<cplx>& data, int sign) {
  if (data.empty()) throw std::invalid_argument("fft: empty input");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    plan = fftw_plan_dft_1d(int(data.size()), ptr, ptr, sign, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    fftw_destroy_plan(plan);
  }
}

void forward(std::vector<cplx>& data) { run(data, FFTW_FORWARD); }

void inverse(std::vector<cplx>& data) {
  run(data, FFTW_BACKWARD);
  const double inv = 1.0 / double(data.size());
  for (auto& v : data) v *= inv;
}

double bin_freq_ghz(std::size_t i, std::size_t n, double fs_ghz) {
  const double k = i < (n + 1) / 2 ? double(i) : double(i) - double(n);
  return k * fs_ghz / double(n);
}

}  // namespace fft

double frequency_shift(std::vector<cplx>& samples, double fs_ghz, double shift_ghz) {
  const std::size_t n = samples.size();
  const double bin = fs_ghz / double(n);
  const long k = std::lround(shift_ghz / bin);
  if (k == 0) return 0.0;
  const double step = 2.0 * std::numbers::pi * double(k) / double(n);
  // incremental rotation with periodic resync against drift
  cplx rot(1.0, 0.0);
  const cplx inc = std::polar(1.0, step);
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] *= rot;
    rot *= inc;
    if ((i & 0xfff) == 0xfff) rot = std::polar(1.0, step * double(i + 1));
  }
  return double(k) * bin;
}

std::vector<cplx> resample_to_count(const std::vector<cplx>& samples,
                                    std::size_t new_count) {
  const std::size_t n = samples.size();
  if (new_count == 0 || n == 0) throw std::invalid_argument("resample: empty");
  if (new_count == n) return samples;
  std::vector<cplx> spec = samples;
  fft::forward(spec);
  std::vector<cplx> out(new_count, cplx(0.0, 0.0));
  const std::size_t keep = std::min(n, new_count);
  const std::size_t pos = (keep + 1) / 2;  // bins 0..pos-1
  const std::size_t neg = keep - pos;      // top neg bins
  for (std::size_t i = 0; i < pos; ++i) out[i] = spec[i];
  for (std::size_t i = 0; i < neg; ++i)
    out[new_count - 1 - i] = spec[n - 1 - i];
  fft::inverse(out);
  const double scale = double(new_count) / double(n);
  for (auto& v : out) v *= scale;
  return out;
}

void apply_frequency_response(std::vector<cplx>& samples, double fs_ghz,
                              const std::function<cplx(double)>& response) {
  const std::size_t n = samples.size();
  fft::forward(samples);
  for (std::size_t i = 0; i < n; ++i)
    samples[i] *= response(fft::bin_freq_ghz(i, n, fs_ghz));
  fft::inverse(samples);
}

void circular_fir(std::vector<cplx>& samples, const std::vector<double>& taps) {
  const std::size_t n = samples.size();
  if (taps.size() > n)
    throw std::invalid_argument("circular_fir: filter longer than signal");
  std::vector<cplx> h(n, cplx(0.0, 0.0));
  const std::size_t center = (taps.size() - 1) / 2;
  for (std::size_t i = 0; i < taps.size(); ++i) {
    // place tap i at circular delay (i - center)
    const std::size_t idx = (i >= center) ? (i - center) : (n + i - center);
    h[idx] += taps[i];
  }
  std::vector<cplx> spec = samples;
  fft::forward(spec);
  fft::forward(h);
  for (std::size_t i = 0; i < n; ++i) spec[i] *= h[i];
  fft::inverse(spec);
  samples = std::move(spec);
}

}  // namespace rofbench

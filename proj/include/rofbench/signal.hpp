#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace rofbench {

using cplx = std::complex<double>;

// Uniformly sampled complex signal, electrical domain. Time is in ns,
// frequencies in GHz. All spectral operations treat the record as circular.
struct SampledWaveform {
  std::vector<cplx> samples;
  double sample_rate_ghz = 1.0;
  double center_freq_ghz = 0.0;  // 0 = baseband / real passband signal

  std::size_t size() const { return samples.size(); }
  double duration_ns() const { return double(samples.size()) / sample_rate_ghz; }
  double energy() const;  // sum |x|^2 * dt
  double rms() const;
};

// Complex optical envelope in sqrt(W). channel_plan records, for composite
// WDM fields, which channel sits at which offset from the center wavelength.
struct OpticalField {
  std::vector<cplx> envelope;
  double sample_rate_ghz = 1.0;
  double center_wavelength_nm = 1310.0;
  std::vector<std::pair<int, double>> channel_plan;  // (index, offset_ghz)
  double channel_rate_ghz = 0.0;  // native per-channel rate before muxing
  double wdm_spacing_ghz = 0.0;   // 0 for a lone channel

  std::size_t size() const { return envelope.size(); }
  double duration_ns() const { return double(envelope.size()) / sample_rate_ghz; }
  double energy() const;
  double average_power_w() const;
};

namespace fft {

void forward(std::vector<cplx>& data);   // unnormalized
void inverse(std::vector<cplx>& data);   // divides by N

// FFT bin center frequency in GHz, for bin i of an n-point transform at fs.
double bin_freq_ghz(std::size_t i, std::size_t n, double fs_ghz);

}  // namespace fft

// Circular frequency shift by the bin closest to shift_ghz; returns the
// exact shift applied.
double frequency_shift(std::vector<cplx>& samples, double fs_ghz, double shift_ghz);

// Spectral zero-pad / truncate to new_count samples over the same duration.
// Sample rate scales by new_count / old_count; amplitudes are preserved.
std::vector<cplx> resample_to_count(const std::vector<cplx>& samples,
                                    std::size_t new_count);

// Multiply the spectrum by response(f_ghz); response is evaluated on the
// signed FFT frequency grid.
void apply_frequency_response(std::vector<cplx>& samples, double fs_ghz,
                              const std::function<cplx(double)>& response);

// Circular convolution with an FIR impulse response centered at tap
// (taps.size()-1)/2, i.e. zero group delay for symmetric taps.
void circular_fir(std::vector<cplx>& samples, const std::vector<double>& taps);

}  // namespace rofbench

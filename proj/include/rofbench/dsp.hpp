#pragma once

#include <cstdint>
#include <vector>

#include "rofbench/dimensioning.hpp"
#include "rofbench/signal.hpp"

namespace rofbench {

struct SymbolFrame {
  std::vector<cplx> symbols;
  ModulationScheme scheme;
  double symbol_rate_gbaud = 1.0;
};

// Gray-coded square QAM constellation, unit average symbol energy.
// Within each symbol the first half of the bits select the I level and the
// second half the Q level, MSB first.
std::vector<cplx> qam_constellation(const ModulationScheme& scheme);

SymbolFrame qam_modulate(const std::vector<std::uint8_t>& bits,
                         const ModulationScheme& scheme,
                         double symbol_rate_gbaud = 1.0);

// Minimum-distance decision + Gray demapping; inverse of qam_modulate on
// noiseless input.
std::vector<std::uint8_t> qam_demodulate(const SymbolFrame& frame);

struct RrcParams {
  double rolloff = 0.2;
  int oversampling = 8;
  int span_symbols = 32;
};

// Root-raised-cosine impulse response, unit energy, span_symbols*oversampling+1 taps.
std::vector<double> rrc_taps(const RrcParams& p);

// Zero-stuff and RRC-shape; symbol k lands at sample k*oversampling.
// Output is complex baseband at symbol_rate * oversampling.
SampledWaveform pulse_shape(const SymbolFrame& frame, const RrcParams& p);

// Matched RRC filter and symbol-instant sampling; undoes pulse_shape.
SymbolFrame matched_filter_downsample(const SampledWaveform& baseband,
                                      const ModulationScheme& scheme,
                                      double symbol_rate_gbaud, const RrcParams& p);

// Real passband signal sqrt(2)*Re{x*exp(j2pi fc t)}; energy preserving for
// band-limited input. The carrier is snapped to the circular frequency grid.
SampledWaveform upconvert(const SampledWaveform& baseband, double carrier_ghz,
                          double occupied_halfbw_ghz = 0.0);

// Complex baseband recovery: sqrt(2)*x*exp(-j2pi fc t) + brickwall lowpass.
// cutoff_ghz <= 0 selects the widest image-free cutoff (the carrier itself).
SampledWaveform downconvert(const SampledWaveform& passband, double carrier_ghz,
                            double cutoff_ghz = 0.0);

struct QuantizerSpec {
  int resolution_bits = 15;
  double full_scale = 0.0;  // <= 0: auto, 4x input rms per component
};

struct QuantizedStream {
  std::vector<double> i_samples;
  std::vector<double> q_samples;
  double sample_rate_ghz = 0.0;   // actual I/Q rate (grid-snapped f_s)
  double carrier_freq_ghz = 0.0;  // band center used for the down-mix
  double band_halfwidth_ghz = 0.0;
  double full_scale = 0.0;
  double clip_fraction = 0.0;
  int resolution_bits = 0;
  std::size_t source_count = 0;
  double source_rate_ghz = 0.0;
};

// Digitize a real passband signal: mix the [f_min, f_max] band to complex
// baseband, resample to the minimum bandpass sampling rate of the band plan
// and uniformly quantize I and Q with a mid-rise R-bit quantizer.
QuantizedStream bandpass_sample_quantize(const SampledWaveform& passband,
                                         const RfBandPlan& band,
                                         const QuantizerSpec& q);

// Interpolate a quantized stream back to a passband waveform at target_rate.
// The reconstruction filter confines the output to [f_min, f_max].
SampledWaveform dac_reconstruct(const QuantizedStream& stream,
                                double target_rate_ghz);

struct EvmReport {
  double evm_percent_rms = 0.0;
  std::size_t symbols_used = 0;
  cplx equalizer_gain{1.0, 0.0};
};

// Single complex gain (least squares) applied to the received frame, then
// EVM% = 100*sqrt(mean|r-s|^2 / mean|s|^2).
EvmReport measure_evm(const SymbolFrame& reference, const SymbolFrame& received);

// Deterministic payload bits for a given seed.
std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed);

}  // namespace rofbench

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rofbench/signal.hpp"

namespace rofbench {

struct FiberParams {
  double length_km = 15.0;
  double attenuation_db_per_km = 0.35;
  double dispersion_ps_nm_km = 0.5;
  double dispersion_slope_ps_nm2_km = 0.0;  // unused while 0 (kept configurable)
  double gamma_per_w_km = 1.3;

  void validate() const;
  // beta2 in ps^2/km at the given center wavelength
  double beta2_ps2_km(double wavelength_nm) const;
};

enum class ModulatorKind { ExternalMZM, DirectlyModulated };

struct ModulatorSpec {
  ModulatorKind kind = ModulatorKind::ExternalMZM;
  double v_pi_volts = 5.0;
  double bias_fraction = 0.5;  // of V_pi; 0.5 = quadrature
  double modulation_index = 0.3;
  double chirp_factor = 0.0;
  double laser_power_dbm = 10.0;
  double drive_vrms_volts = 0.45;  // RF drive level into the modulator

  void validate() const;
  double laser_power_w() const;
};

struct PhotodetectorSpec {
  double responsivity_a_per_w = 0.9;
  double thermal_noise_a_per_sqrt_hz = 6e-11;
  bool shot_noise_enabled = false;

  void validate() const;
};

struct SsfmOptions {
  double step_km = 1.0;
  bool adaptive = false;
  double max_nonlinear_phase_rad = 1e-3;  // adaptive bound per step
};

// Electro-optic conversion of a real RF drive waveform. The drive is scaled
// to the spec's rms level; MZM applies the cosine field transfer at the
// configured bias, DML applies intensity modulation with chirp.
OpticalField eo_convert(const SampledWaveform& rf, const ModulatorSpec& spec,
                        double center_wavelength_nm = 1310.0);

// Combine channels onto one field, channel k placed at offset
// (k - (N-1)/2) * spacing around the center wavelength.
// min_composite_rate_ghz reserves spectral headroom (e.g. for FWM products
// generated later in the fiber); 0 keeps the minimum alias-free rate.
OpticalField wdm_mux(const std::vector<OpticalField>& channels, double spacing_ghz,
                     double min_composite_rate_ghz = 0.0);

// Symmetric split-step Fourier integration of the scalar NLSE
//   dA/dz = -(alpha/2) A - i (beta2/2) d^2A/dt^2 + i gamma |A|^2 A.
OpticalField fiber_propagate(const OpticalField& field, const FiberParams& fiber,
                             const SsfmOptions& opts = {});

// Select one channel: shift to offset 0 and apply a 2nd-order super-Gaussian
// filter (3 dB bandwidth = bandwidth_fraction * spacing), then decimate to
// the channel's native rate.
OpticalField wdm_demux(const OpticalField& composite, int channel_index,
                       double bandwidth_fraction = 0.75);

// Square-law detection i(t) = responsivity * |A|^2 with thermal (and
// optionally shot) noise over the simulation bandwidth.
SampledWaveform photodetect(const OpticalField& field, const PhotodetectorSpec& spec,
                            std::uint64_t seed);

// Linear-phase brickwall-with-cosine-edge bandpass around an RF carrier.
SampledWaveform electrical_bandpass(const SampledWaveform& rf, double center_ghz,
                                    double bandwidth_ghz);

}  // namespace rofbench

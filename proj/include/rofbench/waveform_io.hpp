#pragma once

#include <string>

#include "rofbench/signal.hpp"

namespace rofbench {

// ROFW interchange file: magic "ROFW", version u32, sample_rate_hz f64,
// center_freq_hz f64, count u64, then interleaved re/im f64 pairs.
// Little-endian throughout.
void write_waveform(const std::string& path, const SampledWaveform& w);
SampledWaveform read_waveform(const std::string& path);

// ROFO variant for optical fields: center_wavelength_nm replaces
// center_freq_hz in the header.
void write_optical_field(const std::string& path, const OpticalField& f);
OpticalField read_optical_field(const std::string& path);

}  // namespace rofbench

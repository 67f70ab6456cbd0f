#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "rofbench/waveform_io.hpp"

namespace rofbench {

static_assert(std::endian::native == std::endian::little,
              "ROFW/ROFO serialization assumes a little-endian host");

namespace {

constexpr std::uint32_t kVersion = 1;

void write_header(std::ofstream& out, const char magic[4], double rate_hz,
                  double meta, std::uint64_t count) {
  out.write(magic, 4);
  out.write(reinterpret_cast<const char*>(&kVersion), sizeof kVersion);
  out.write(reinterpret_cast<const char*>(&rate_hz), sizeof rate_hz);
  out.write(reinterpret_cast<const char*>(&meta), sizeof meta);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
}

struct Header {
  double rate_hz = 0.0;
  double meta = 0.0;
  std::uint64_t count = 0;
};

Header read_header(std::ifstream& in, const char expected_magic[4],
                   const std::string& path) {
  char magic[4];
  std::uint32_t version = 0;
  Header h;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(reinterpret_cast<char*>(&h.rate_hz), sizeof h.rate_hz);
  in.read(reinterpret_cast<char*>(&h.meta), sizeof h.meta);
  in.read(reinterpret_cast<char*>(&h.count), sizeof h.count);
  if (!in || std::memcmp(magic, expected_magic, 4) != 0)
    throw std::runtime_error("bad waveform file header: " + path);
  if (version != kVersion)
    throw std::runtime_error("unsupported waveform file version in " + path);
  return h;
}

void write_samples(std::ofstream& out, const std::vector<cplx>& samples) {
  for (const auto& s : samples) {
    const double re = s.real(), im = s.imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof re);
    out.write(reinterpret_cast<const char*>(&im), sizeof im);
  }
}

std::vector<cplx> read_samples(std::ifstream& in, std::uint64_t count,
                               const std::string& path) {
  std::vector<cplx> samples(count);
  for (auto& s : samples) {
    double re = 0.0, im = 0.0;
    in.read(reinterpret_cast<char*>(&re), sizeof re);
    in.read(reinterpret_cast<char*>(&im), sizeof im);
    s = cplx(re, im);
  }
  if (!in) throw std::runtime_error("truncated waveform file: " + path);
  return samples;
}

}  // namespace

void write_waveform(const std::string& path, const SampledWaveform& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_header(out, "ROFW", w.sample_rate_ghz * 1e9, w.center_freq_ghz * 1e9,
               w.samples.size());
  write_samples(out, w.samples);
}

SampledWaveform read_waveform(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  const Header h = read_header(in, "ROFW", path);
  SampledWaveform w;
  w.sample_rate_ghz = h.rate_hz / 1e9;
  w.center_freq_ghz = h.meta / 1e9;
  w.samples = read_samples(in, h.count, path);
  return w;
}

void write_optical_field(const std::string& path, const OpticalField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_header(out, "ROFO", f.sample_rate_ghz * 1e9, f.center_wavelength_nm,
               f.envelope.size());
  write_samples(out, f.envelope);
}

OpticalField read_optical_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  const Header h = read_header(in, "ROFO", path);
  OpticalField f;
  f.sample_rate_ghz = h.rate_hz / 1e9;
  f.center_wavelength_nm = h.meta;
  f.envelope = read_samples(in, h.count, path);
  f.channel_plan = {{0, 0.0}};
  f.channel_rate_ghz = f.sample_rate_ghz;
  return f;
}

}  // namespace rofbench

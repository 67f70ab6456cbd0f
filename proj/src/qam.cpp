#include <cmath>
#include <stdexcept>

#include "rofbench/dsp.hpp"

namespace rofbench {

namespace {

unsigned gray_encode(unsigned v) { return v ^ (v >> 1); }

unsigned gray_decode(unsigned g) {
  unsigned v = g;
  while (g >>= 1) v ^= g;
  return v;
}

// amplitude normalization so the constellation has unit average energy
double level_scale(int m) { return std::sqrt(3.0 / (2.0 * (double(m) * m - 1.0))); }

}  // namespace

std::vector<cplx> qam_constellation(const ModulationScheme& scheme) {
  const int m = scheme.levels_per_dim();
  const int bps = scheme.bits_per_symbol();
  const double scale = level_scale(m);
  std::vector<cplx> points(scheme.constellation_points);
  for (int s = 0; s < scheme.constellation_points; ++s) {
    const unsigned gi = unsigned(s) >> (bps / 2);
    const unsigned gq = unsigned(s) & unsigned(m - 1);
    const double ai = (2.0 * gray_decode(gi) - (m - 1)) * scale;
    const double aq = (2.0 * gray_decode(gq) - (m - 1)) * scale;
    points[s] = cplx(ai, aq);
  }
  return points;
}

SymbolFrame qam_modulate(const std::vector<std::uint8_t>& bits,
                         const ModulationScheme& scheme, double symbol_rate_gbaud) {
  const int bps = scheme.bits_per_symbol();
  if (bits.size() % bps != 0)
    throw std::domain_error("qam_modulate: bit count not divisible by bits/symbol");
  const auto points = qam_constellation(scheme);
  SymbolFrame frame;
  frame.scheme = scheme;
  frame.symbol_rate_gbaud = symbol_rate_gbaud;
  frame.symbols.reserve(bits.size() / bps);
  for (std::size_t i = 0; i < bits.size(); i += bps) {
    unsigned idx = 0;
    for (int b = 0; b < bps; ++b) idx = (idx << 1) | (bits[i + b] & 1u);
    frame.symbols.push_back(points[idx]);
  }
  return frame;
}

std::vector<std::uint8_t> qam_demodulate(const SymbolFrame& frame) {
  const int m = frame.scheme.levels_per_dim();
  const int bps = frame.scheme.bits_per_symbol();
  const double scale = level_scale(m);
  std::vector<std::uint8_t> bits;
  bits.reserve(frame.symbols.size() * bps);
  auto decide = [&](double x) {
    int level = int(std::lround((x / scale + (m - 1)) / 2.0));
    if (level < 0) level = 0;
    if (level >= m) level = m - 1;
    return gray_encode(unsigned(level));
  };
  for (const auto& s : frame.symbols) {
    const unsigned idx = (decide(s.real()) << (bps / 2)) | decide(s.imag());
    for (int b = bps - 1; b >= 0; --b) bits.push_back((idx >> b) & 1u);
  }
  return bits;
}

EvmReport measure_evm(const SymbolFrame& reference, const SymbolFrame& received) {
  if (reference.symbols.size() != received.symbols.size())
    throw std::invalid_argument("measure_evm: length mismatch");
  if (reference.symbols.size() < 100)
    throw std::invalid_argument("measure_evm: need at least 100 symbols");
  const std::size_t n = reference.symbols.size();
  cplx cross(0.0, 0.0);
  double rx_energy = 0.0;
  double ref_energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cross += std::conj(received.symbols[i]) * reference.symbols[i];
    rx_energy += std::norm(received.symbols[i]);
    ref_energy += std::norm(reference.symbols[i]);
  }
  if (rx_energy == 0.0 || ref_energy == 0.0)
    throw std::invalid_argument("measure_evm: zero-energy frame");
  const cplx gain = cross / rx_energy;
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    err += std::norm(gain * received.symbols[i] - reference.symbols[i]);
  EvmReport r;
  r.evm_percent_rms = 100.0 * std::sqrt(err / ref_energy);
  r.symbols_used = n;
  r.equalizer_gain = gain;
  return r;
}

}  // namespace rofbench

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rofbench/optics.hpp"

using namespace rofbench;
using std::numbers::pi;

namespace {

SampledWaveform tone(std::size_t n, double fs, double freq_ghz, double amp = 1.0) {
  SampledWaveform w;
  w.sample_rate_ghz = fs;
  w.samples.resize(n);
  const double k = std::round(freq_ghz / fs * double(n));
  for (std::size_t i = 0; i < n; ++i)
    w.samples[i] = cplx(amp * std::sin(2.0 * pi * k * double(i) / double(n)), 0.0);
  return w;
}

std::vector<double> power_spectrum(const std::vector<cplx>& x) {
  auto spec = x;
  fft::forward(spec);
  std::vector<double> p(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) p[i] = std::norm(spec[i]);
  return p;
}

std::size_t bin_of(double freq_ghz, std::size_t n, double fs) {
  const long k = std::lround(freq_ghz / fs * double(n));
  return std::size_t((k % long(n) + long(n)) % long(n));
}

OpticalField cw_field(std::size_t n, double fs, double power_w) {
  OpticalField f;
  f.sample_rate_ghz = fs;
  f.channel_plan = {{0, 0.0}};
  f.channel_rate_ghz = fs;
  f.envelope.assign(n, cplx(std::sqrt(power_w), 0.0));
  return f;
}

OpticalField gaussian_pulse(std::size_t n, double fs, double t0_ns, double peak_w) {
  OpticalField f;
  f.sample_rate_ghz = fs;
  f.channel_plan = {{0, 0.0}};
  f.channel_rate_ghz = fs;
  f.envelope.resize(n);
  const double tc = double(n) / fs / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = double(i) / fs - tc;
    f.envelope[i] = cplx(std::sqrt(peak_w) * std::exp(-t * t / (2.0 * t0_ns * t0_ns)), 0.0);
  }
  return f;
}

double rms_width_ns(const OpticalField& f) {
  double p = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < f.envelope.size(); ++i) {
    const double t = double(i) / f.sample_rate_ghz;
    const double w = std::norm(f.envelope[i]);
    p += w;
    m1 += w * t;
    m2 += w * t * t;
  }
  m1 /= p;
  return std::sqrt(m2 / p - m1 * m1);
}

}  // namespace

TEST_CASE("mzm at quadrature emits half the laser power with no drive") {
  SampledWaveform silent;
  silent.sample_rate_ghz = 20.0;
  silent.samples.assign(256, cplx(0.0, 0.0));
  ModulatorSpec spec;
  spec.laser_power_dbm = 10.0;  // 10 mW
  const auto f = eo_convert(silent, spec);
  for (const auto& a : f.envelope)
    CHECK(std::norm(a) == doctest::Approx(5e-3).epsilon(1e-12));
}

TEST_CASE("mzm sinusoidal drive produces the Bessel odd-harmonic series") {
  const std::size_t n = 8192;
  const double fs = 40.0;
  const double f0 = 40.0 * 256.0 / 8192.0;  // bin-exact 1.25 GHz
  const auto rf = tone(n, fs, f0);
  ModulatorSpec spec;
  spec.drive_vrms_volts = 1.2;
  const auto field = eo_convert(rf, spec);

  std::vector<cplx> intensity(n);
  for (std::size_t i = 0; i < n; ++i)
    intensity[i] = cplx(std::norm(field.envelope[i]), 0.0);
  const auto ps = power_spectrum(intensity);

  // intensity = P0/2 (1 - sin(x sin wt)), x = pi*Vpk/Vpi: odd harmonics with
  // amplitudes J1(x), J3(x)
  const double x = pi * spec.drive_vrms_volts * std::numbers::sqrt2 / spec.v_pi_volts;
  const double h1 = std::sqrt(ps[bin_of(f0, n, fs)]);
  const double h3 = std::sqrt(ps[bin_of(3.0 * f0, n, fs)]);
  const double h2 = std::sqrt(ps[bin_of(2.0 * f0, n, fs)]);
  CHECK(h3 / h1 == doctest::Approx(std::cyl_bessel_j(3, x) / std::cyl_bessel_j(1, x))
                       .epsilon(1e-6));
  CHECK(h2 / h1 < 1e-9);  // even harmonics vanish at quadrature

  // relative third harmonic grows with drive level
  double prev = -1.0;
  for (double vrms : {0.2, 0.6, 1.2, 1.8}) {
    ModulatorSpec s2 = spec;
    s2.drive_vrms_volts = vrms;
    const auto f2 = eo_convert(rf, s2);
    std::vector<cplx> in2(n);
    for (std::size_t i = 0; i < n; ++i) in2[i] = cplx(std::norm(f2.envelope[i]), 0.0);
    const auto p2 = power_spectrum(in2);
    const double ratio =
        std::sqrt(p2[bin_of(3.0 * f0, n, fs)] / p2[bin_of(f0, n, fs)]);
    CHECK(ratio > prev);
    prev = ratio;
  }
}

TEST_CASE("dml intensity modulation and clipping") {
  const auto rf = tone(1024, 20.0, 2.5);
  ModulatorSpec spec;
  spec.kind = ModulatorKind::DirectlyModulated;
  spec.modulation_index = 0.5;
  spec.laser_power_dbm = 0.0;  // 1 mW
  const auto f = eo_convert(rf, spec);
  double pmax = 0.0, pmin = 1e9;
  for (const auto& a : f.envelope) {
    pmax = std::max(pmax, std::norm(a));
    pmin = std::min(pmin, std::norm(a));
  }
  CHECK(pmax == doctest::Approx(1.5e-3).epsilon(1e-9));
  CHECK(pmin == doctest::Approx(0.5e-3).epsilon(1e-9));

  ModulatorSpec clip = spec;
  clip.modulation_index = 1.0;
  CHECK_THROWS_AS(eo_convert(rf, clip), std::domain_error);

  ModulatorSpec bad;
  bad.bias_fraction = 1.5;
  CHECK_THROWS_AS(eo_convert(rf, bad), std::invalid_argument);
}

TEST_CASE("wdm mux: identity, offsets, energy, span limit") {
  const std::size_t n = 2048;
  OpticalField ch = cw_field(n, 40.0, 1e-3);

  // single channel passes through untouched
  const auto solo = wdm_mux({ch}, 200.0);
  REQUIRE(solo.envelope.size() == n);
  CHECK(solo.sample_rate_ghz == doctest::Approx(40.0));
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(solo.envelope[i] - ch.envelope[i]) < 1e-12);

  // four channels land at symmetric offsets
  std::vector<OpticalField> four(4, ch);
  const auto mux = wdm_mux(four, 200.0);
  REQUIRE(mux.channel_plan.size() == 4);
  const double expected[] = {-300.0, -100.0, 100.0, 300.0};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(mux.channel_plan[k].first == int(k));
    CHECK(mux.channel_plan[k].second == doctest::Approx(expected[k]).epsilon(1e-9));
  }
  CHECK(mux.sample_rate_ghz >= 2.0 * (300.0 + 20.0));
  CHECK(mux.wdm_spacing_ghz == doctest::Approx(200.0));

  // frequency-disjoint channels add in energy
  CHECK(mux.energy() == doctest::Approx(4.0 * ch.energy()).epsilon(1e-9));

  // headroom request is honored
  const auto wide = wdm_mux(four, 200.0, 1280.0);
  CHECK(wide.sample_rate_ghz >= 1280.0);

  CHECK_THROWS(wdm_mux(four, 1e6));  // span not representable
  CHECK_THROWS_AS(wdm_mux({}, 200.0), std::invalid_argument);
}

TEST_CASE("fiber: pure attenuation matches the closed form exactly") {
  auto f = gaussian_pulse(2048, 100.0, 0.3, 2e-3);
  FiberParams fiber;
  fiber.length_km = 15.0;
  fiber.attenuation_db_per_km = 0.35;
  fiber.dispersion_ps_nm_km = 0.0;
  fiber.gamma_per_w_km = 0.0;
  const auto out = fiber_propagate(f, fiber);
  const double g = std::exp(-0.5 * 0.35 * std::log(10.0) / 10.0 * 15.0);
  for (std::size_t i = 0; i < f.envelope.size(); ++i)
    CHECK(std::abs(out.envelope[i] - g * f.envelope[i]) <=
          1e-12 * std::abs(g * f.envelope[i]) + 1e-300);
}

TEST_CASE("fiber: pure SPM phase matches gamma*P*L") {
  auto f = gaussian_pulse(2048, 100.0, 0.3, 5e-3);
  FiberParams fiber;
  fiber.length_km = 15.0;
  fiber.attenuation_db_per_km = 0.0;
  fiber.dispersion_ps_nm_km = 0.0;
  fiber.gamma_per_w_km = 1.3;
  const auto out = fiber_propagate(f, fiber);
  for (std::size_t i = 0; i < f.envelope.size(); ++i) {
    const double p = std::norm(f.envelope[i]);
    const cplx expect = f.envelope[i] * std::polar(1.0, 1.3 * p * 15.0);
    CHECK(std::abs(out.envelope[i] - expect) < 1e-6 * (std::abs(expect) + 1e-6));
    // phase-only: magnitude untouched
    CHECK(std::abs(std::abs(out.envelope[i]) - std::abs(f.envelope[i])) < 1e-12);
  }
}

TEST_CASE("fiber: dispersion-only Gaussian broadening follows the analytic width") {
  const double t0 = 0.05;  // ns
  auto f = gaussian_pulse(4096, 200.0, t0, 1e-3);
  f.center_wavelength_nm = 1550.0;
  FiberParams fiber;
  fiber.length_km = 100.0;
  fiber.attenuation_db_per_km = 0.0;
  fiber.dispersion_ps_nm_km = 17.0;
  fiber.gamma_per_w_km = 0.0;
  const double beta2_ns2 = fiber.beta2_ps2_km(1550.0) * 1e-6;
  const double t1 =
      t0 * std::sqrt(1.0 + std::pow(beta2_ns2 * fiber.length_km / (t0 * t0), 2));
  SsfmOptions opts;
  opts.step_km = 1.0;
  const auto out = fiber_propagate(f, fiber, opts);
  // intensity rms width of a Gaussian of parameter T is T/sqrt(2)
  CHECK(rms_width_ns(out) ==
        doctest::Approx(t1 / std::numbers::sqrt2).epsilon(0.001));
  // linear propagation conserves energy without loss
  CHECK(out.energy() == doctest::Approx(f.energy()).epsilon(1e-9));
}

TEST_CASE("fiber: lossless nonlinear-dispersive propagation conserves energy") {
  auto f = gaussian_pulse(2048, 200.0, 0.05, 20e-3);
  FiberParams fiber;
  fiber.length_km = 20.0;
  fiber.attenuation_db_per_km = 0.0;
  fiber.dispersion_ps_nm_km = 17.0;
  fiber.gamma_per_w_km = 1.3;
  const auto out = fiber_propagate(f, fiber);
  CHECK(out.energy() == doctest::Approx(f.energy()).epsilon(1e-9));
}

TEST_CASE("fiber: linearity when gamma = 0") {
  auto f = gaussian_pulse(1024, 100.0, 0.1, 1e-3);
  FiberParams fiber;
  fiber.length_km = 30.0;
  fiber.dispersion_ps_nm_km = 5.0;
  fiber.gamma_per_w_km = 0.0;
  auto f2 = f;
  for (auto& a : f2.envelope) a *= cplx(3.0, 0.0);
  const auto o1 = fiber_propagate(f, fiber);
  const auto o2 = fiber_propagate(f2, fiber);
  for (std::size_t i = 0; i < f.envelope.size(); ++i)
    CHECK(std::abs(o2.envelope[i] - 3.0 * o1.envelope[i]) < 1e-12);
}

TEST_CASE("fiber: split-step converges at second order") {
  auto f = gaussian_pulse(2048, 200.0, 0.05, 50e-3);
  f.center_wavelength_nm = 1550.0;
  FiberParams fiber;
  fiber.length_km = 10.0;
  fiber.attenuation_db_per_km = 0.2;
  fiber.dispersion_ps_nm_km = 17.0;
  fiber.gamma_per_w_km = 1.3;

  auto solve = [&](double step) {
    SsfmOptions o;
    o.step_km = step;
    return fiber_propagate(f, fiber, o);
  };
  const auto ref = solve(0.0125);
  auto err = [&](const OpticalField& g) {
    double e = 0.0;
    for (std::size_t i = 0; i < g.envelope.size(); ++i)
      e += std::norm(g.envelope[i] - ref.envelope[i]);
    return std::sqrt(e);
  };
  const double e_coarse = err(solve(1.0));
  const double e_fine = err(solve(0.5));
  CHECK(e_coarse / e_fine >= 3.0);

  // adaptive stepping agrees with a fine fixed step
  SsfmOptions ad;
  ad.adaptive = true;
  ad.max_nonlinear_phase_rad = 1e-3;
  const auto out_ad = fiber_propagate(f, fiber, ad);
  CHECK(err(out_ad) < 10.0 * err(solve(0.1)) + 1e-6);
}

TEST_CASE("demux recovers each channel and isolates neighbours") {
  const std::size_t n = 2048;
  const double fs_ch = 40.0;
  std::vector<OpticalField> chans;
  for (int k = 0; k < 4; ++k) {
    OpticalField c = cw_field(n, fs_ch, 1e-3);
    // distinct bin-exact intra-channel tone per channel
    for (std::size_t i = 0; i < n; ++i)
      c.envelope[i] *= std::polar(1.0, 2.0 * pi * double((k + 1) * 32) * double(i) / double(n));
    chans.push_back(c);
  }
  const auto mux = wdm_mux(chans, 200.0);
  for (int k = 0; k < 4; ++k) {
    const auto back = wdm_demux(mux, k);
    CHECK(back.sample_rate_ghz == doctest::Approx(fs_ch));
    REQUIRE(back.envelope.size() == n);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      err += std::norm(back.envelope[i] - chans[std::size_t(k)].envelope[i]);
    CHECK(std::sqrt(err / (n * 1e-3)) < 0.01);  // < 1% rms error
  }

  // isolation: composite holding only channel 3 leaks < -40 dB into channel 0
  std::vector<OpticalField> lone = chans;
  for (int k = 0; k < 3; ++k)
    for (auto& a : lone[std::size_t(k)].envelope) a = cplx(0.0, 0.0);
  const auto mux2 = wdm_mux(lone, 200.0);
  const auto leak = wdm_demux(mux2, 0);
  CHECK(leak.energy() < 1e-4 * chans[3].energy());

  CHECK_THROWS_AS(wdm_demux(mux, 9), std::invalid_argument);
}

TEST_CASE("photodetection") {
  const auto f = cw_field(512, 40.0, 1e-3);
  PhotodetectorSpec pd;
  pd.responsivity_a_per_w = 0.9;
  pd.thermal_noise_a_per_sqrt_hz = 0.0;
  const auto i1 = photodetect(f, pd, 1);
  for (const auto& s : i1.samples)
    CHECK(s.real() == doctest::Approx(0.9e-3).epsilon(1e-12));

  // square law: double the field amplitude, quadruple the current
  auto f2 = f;
  for (auto& a : f2.envelope) a *= cplx(2.0, 0.0);
  const auto i2 = photodetect(f2, pd, 1);
  CHECK(i2.samples[0].real() == doctest::Approx(4.0 * i1.samples[0].real()));

  // deterministic per seed, varying across seeds when noisy
  PhotodetectorSpec noisy = pd;
  noisy.thermal_noise_a_per_sqrt_hz = 9e-11;
  const auto a = photodetect(f, noisy, 7);
  const auto b = photodetect(f, noisy, 7);
  const auto c = photodetect(f, noisy, 8);
  CHECK(a.samples == b.samples);
  CHECK(a.samples != c.samples);

  OpticalField multi = f;
  multi.channel_plan = {{0, -100.0}, {1, 100.0}};
  CHECK_THROWS_AS(photodetect(multi, pd, 1), std::invalid_argument);
}

TEST_CASE("electrical bandpass") {
  const std::size_t n = 4096;
  const double fs = 40.0;
  const auto in_band = tone(n, fs, 2.5);
  const auto filtered = electrical_bandpass(in_band, 2.5, 3.0);
  CHECK(10.0 * std::log10(in_band.energy() / filtered.energy()) < 0.1);

  const auto out_band = tone(n, fs, 9.0);
  const auto rejected = electrical_bandpass(out_band, 2.5, 3.0);
  CHECK(rejected.energy() < 1e-4 * out_band.energy());

  // idempotent
  const auto twice = electrical_bandpass(filtered, 2.5, 3.0);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(twice.samples[i] - filtered.samples[i]) < 1e-9);

  CHECK_THROWS_AS(electrical_bandpass(in_band, 19.0, 5.0), std::domain_error);
}

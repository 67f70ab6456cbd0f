#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rofbench/harness.hpp"

using namespace rofbench;
namespace fs = std::filesystem;

namespace {

FronthaulScenario quick_scenario() {
  FronthaulScenario sc;
  sc.payload_symbols = 2048;
  sc.wdm_channels = 1;
  return sc;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("arof back-to-back is transparent") {
  FronthaulScenario sc = quick_scenario();
  sc.fiber.length_km = 0.0;
  sc.detector.thermal_noise_a_per_sqrt_hz = 0.0;
  sc.modulator.drive_vrms_volts = 0.05;  // small-signal MZM regime
  const auto evm = run_link(sc);
  REQUIRE(evm.size() == 1);
  CHECK(evm[0].report.evm_percent_rms < 0.5);
  CHECK(evm[0].report.symbols_used == 2048);
}

TEST_CASE("drof back-to-back is quantization limited") {
  FronthaulScenario sc = quick_scenario();
  sc.link_kind = LinkKind::DRoF;
  sc.fiber.length_km = 0.0;
  const auto evm = run_link(sc);
  REQUIRE(evm.size() == 1);
  CHECK(evm[0].report.evm_percent_rms < 0.5);

  // digital pipe: EVM independent of launch power
  FronthaulScenario loud = sc;
  loud.modulator.laser_power_dbm = 18.0;
  CHECK(run_link(loud)[0].report.evm_percent_rms ==
        doctest::Approx(evm[0].report.evm_percent_rms));
}

TEST_CASE("run_link reports one EVM entry per wdm channel") {
  FronthaulScenario sc = quick_scenario();
  sc.link_kind = LinkKind::DRoF;
  sc.wdm_channels = 3;
  const auto evm = run_link(sc);
  REQUIRE(evm.size() == 3);
  for (int c = 0; c < 3; ++c) CHECK(evm[std::size_t(c)].channel == c);
  // distinct payload seeds per channel still land in the same EVM regime
  CHECK(evm[0].report.evm_percent_rms > 0.0);
}

TEST_CASE("run_link is deterministic under fixed seeds") {
  FronthaulScenario sc = quick_scenario();
  const auto a = run_link(sc);
  const auto b = run_link(sc);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].report.evm_percent_rms == b[i].report.evm_percent_rms);

  FronthaulScenario other = sc;
  other.seeds.detector = 77;
  CHECK(run_link(other)[0].report.evm_percent_rms != a[0].report.evm_percent_rms);
}

TEST_CASE("single grid point sweep reduces to run_link") {
  FronthaulScenario sc = quick_scenario();
  sc.link_kind = LinkKind::DRoF;
  const auto sweep = run_evm_sweep(sc, {10.0}, {1}, 3.5, 1);
  REQUIRE(sweep.points.size() == 1);
  REQUIRE(sweep.points[0].ok());

  FronthaulScenario direct = sc;
  direct.modulator.laser_power_dbm = 10.0;
  direct.wdm_channels = 1;
  CHECK(sweep.points[0].worst_evm_percent() ==
        doctest::Approx(run_link(direct)[0].report.evm_percent_rms));

  CHECK_THROWS_AS(run_evm_sweep(sc, {}, {1}, 3.5, 1), ConfigError);
}

TEST_CASE("dynamic range spans the contiguous compliant run") {
  // D-RoF digital pipe: flat EVM well under threshold across all powers
  FronthaulScenario sc = quick_scenario();
  sc.link_kind = LinkKind::DRoF;
  const std::vector<double> powers{0.0, 1.0, 2.0, 3.0, 4.0};
  const auto sweep = run_evm_sweep(sc, powers, {1}, 3.5, 2);
  REQUIRE(sweep.dynamic_ranges.size() == 1);
  CHECK(sweep.dynamic_ranges[0].range_db == doctest::Approx(4.0));
  CHECK(sweep.dynamic_ranges[0].wdm == 1);

  // an impossible threshold yields zero range
  const auto none = run_evm_sweep(sc, powers, {1}, 1e-9, 2);
  CHECK(none.dynamic_ranges[0].range_db == 0.0);
}

TEST_CASE("figure3 reproduces the 1 GHz headline row") {
  FronthaulScenario sc;
  sc.band = RfBandPlan(28.0, 0.5);
  const auto rows = run_figure3(sc, {1.0});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].arof_bw_ghz == doctest::Approx(48.0));
  CHECK(rows[0].drof_bw_ghz == doctest::Approx(1954.0).epsilon(1.0 / 1954.0));
  CHECK(rows[0].min_sampling_rate_ghz == doctest::Approx(2.0357).epsilon(1e-4));

  const auto full = run_figure3(sc, default_figure3_bw_points());
  REQUIRE(full.size() == 20);
  for (const auto& r : full) {
    // B = 40 * oversampling factor; the factor peaks at (n_z+1)/n_z with
    // n_z >= 28 over this range, so 41.5 is the tight provable bound
    CHECK(r.bandwidth_ratio >= 39.0);
    CHECK(r.bandwidth_ratio <= 41.5);
  }
}

TEST_CASE("figure4 keeps drof above arof with shipped defaults") {
  FronthaulScenario sc;
  std::vector<int> counts{1, 2, 4, 8, 16, 32, 64};
  const auto rows = run_figure4(PowerParams{}, sc, counts);
  REQUIRE(rows.size() == counts.size());
  for (const auto& r : rows) CHECK(r.drof_watts > r.arof_watts);
}

TEST_CASE("scenario hash and config plumbing") {
  FronthaulScenario sc;
  CHECK(sc.hash().size() == 16);
  FronthaulScenario other = sc;
  other.fiber.length_km = 10.0;
  CHECK(sc.hash() != other.hash());
  CHECK(sc.hash() == FronthaulScenario{}.hash());

  const auto dir = fs::temp_directory_path() / "rofbench_harness_test";
  fs::create_directories(dir);
  const auto cfg = dir / "scenario.cfg";
  {
    std::ofstream out(cfg);
    out << "# comment\nwdm_channels = 2\n[fiber]\nlength_km = 5\n"
        << "[modulator]\nlaser_power_dbm = 3\n";
  }
  const auto parsed = FronthaulScenario::from_file(cfg.string());
  CHECK(parsed.wdm_channels == 2);
  CHECK(parsed.fiber.length_km == doctest::Approx(5.0));
  CHECK(parsed.modulator.laser_power_dbm == doctest::Approx(3.0));

  const auto overridden =
      FronthaulScenario::from_file(cfg.string(), {"fiber.length_km=9"});
  CHECK(overridden.fiber.length_km == doctest::Approx(9.0));

  CHECK_THROWS_AS(FronthaulScenario::from_overrides({"no.such_key=1"}), ConfigError);
  CHECK_THROWS_AS(FronthaulScenario::from_overrides({"payload_symbols=10"}),
                  ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("result files carry provenance and reject hash mixing") {
  const auto dir = fs::temp_directory_path() / "rofbench_prov_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto csv = (dir / "figure4.csv").string();
  const std::vector<PowerSweepRow> rows{{4, 100.0, 150.0}};

  write_power_csv(csv, rows, "aaaabbbbccccdddd");
  const auto first = slurp(csv);
  CHECK(first.rfind("# scenario_hash=aaaabbbbccccdddd\n", 0) == 0);

  // same hash appends, different hash is refused
  write_power_csv(csv, rows, "aaaabbbbccccdddd");
  CHECK_THROWS(write_power_csv(csv, rows, "ffffffffffffffff"));
  fs::remove_all(dir);
}

TEST_CASE("sweep csv output is byte-identical across reruns") {
  FronthaulScenario sc = quick_scenario();
  sc.link_kind = LinkKind::DRoF;
  const auto dir = fs::temp_directory_path() / "rofbench_repro_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto emit = [&](const std::string& name) {
    const auto sweep = run_evm_sweep(sc, {0.0, 5.0}, {1, 2}, 3.5, 2);
    const auto path = (dir / name).string();
    write_sweep_csv(path, sweep, sc.hash());
    write_dynrange_csv((dir / ("dr_" + name)).string(), sweep, sc.hash());
    return slurp(path);
  };
  const auto a = emit("a.csv");
  const auto b = emit("b.csv");
  CHECK(a == b);
  CHECK(slurp(dir / "dr_a.csv") == slurp(dir / "dr_b.csv"));
  CHECK(a.find("kind,wdm,laser_dbm,channel,evm_percent") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("run directories are unique and embed the hash prefix") {
  const auto base = (fs::temp_directory_path() / "rofbench_rundir_test").string();
  fs::remove_all(base);
  const auto d1 = make_run_directory(base, "0123456789abcdef");
  const auto d2 = make_run_directory(base, "0123456789abcdef");
  CHECK(d1 != d2);
  CHECK(fs::is_directory(d1));
  CHECK(d1.find("01234567") != std::string::npos);
  fs::remove_all(base);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rofbench/harness.hpp"

namespace py = pybind11;
using namespace rofbench;

PYBIND11_MODULE(_core, m) {
  m.doc() = "A-RoF vs D-RoF fronthaul dimensioning, power and link simulation";

  // ---- dimensioning --------------------------------------------------------
  py::class_<RfBandPlan>(m, "RfBandPlan")
      .def(py::init<double, double>(), py::arg("carrier_freq_ghz"),
           py::arg("baseband_bw_ghz"))
      .def_readonly("carrier_freq_ghz", &RfBandPlan::carrier_freq_ghz)
      .def_readonly("baseband_bw_ghz", &RfBandPlan::baseband_bw_ghz)
      .def("f_min_ghz", &RfBandPlan::f_min_ghz)
      .def("f_max_ghz", &RfBandPlan::f_max_ghz);

  py::class_<MimoGeometry>(m, "MimoGeometry")
      .def(py::init<int, int, int>(), py::arg("tx_antennas"), py::arg("rx_antennas"),
           py::arg("sectors"))
      .def_readonly("tx_antennas", &MimoGeometry::tx_antennas)
      .def_readonly("rx_antennas", &MimoGeometry::rx_antennas)
      .def_readonly("sectors", &MimoGeometry::sectors)
      .def("wavelengths", &MimoGeometry::wavelengths);

  py::class_<CpriCoding>(m, "CpriCoding")
      .def(py::init<int, double, double>(), py::arg("resolution_bits"),
           py::arg("control_overhead"), py::arg("line_code_rate"))
      .def_readonly("resolution_bits", &CpriCoding::resolution_bits)
      .def_readonly("control_overhead", &CpriCoding::control_overhead)
      .def_readonly("line_code_rate", &CpriCoding::line_code_rate);

  py::class_<ModulationScheme>(m, "ModulationScheme")
      .def(py::init<int>(), py::arg("constellation_points"))
      .def_readonly("constellation_points", &ModulationScheme::constellation_points)
      .def("bits_per_symbol", &ModulationScheme::bits_per_symbol);

  py::class_<DimensioningReport>(m, "DimensioningReport")
      .def_readonly("bw_per_wavelength_ghz", &DimensioningReport::bw_per_wavelength_ghz)
      .def_readonly("min_sampling_rate_ghz", &DimensioningReport::min_sampling_rate_ghz)
      .def_readonly("zone_index", &DimensioningReport::zone_index)
      .def_readonly("arof_bw_ghz", &DimensioningReport::arof_bw_ghz)
      .def_readonly("arof_rate_gbps", &DimensioningReport::arof_rate_gbps)
      .def_readonly("drof_bw_ghz", &DimensioningReport::drof_bw_ghz)
      .def_readonly("drof_rate_gbps", &DimensioningReport::drof_rate_gbps)
      .def_readonly("bandwidth_ratio", &DimensioningReport::bandwidth_ratio)
      .def_readonly("rate_ratio", &DimensioningReport::rate_ratio);

  m.def("max_zone_index", &max_zone_index, py::arg("band"));
  m.def("sampling_rate_range", &sampling_rate_range, py::arg("band"), py::arg("zone"));
  m.def("min_sampling_rate", &min_sampling_rate, py::arg("band"));
  m.def("arof_bandwidth_ghz", &arof_bandwidth_ghz, py::arg("band"), py::arg("geom"));
  m.def("arof_bit_rate_gbps", &arof_bit_rate_gbps, py::arg("band"), py::arg("geom"),
        py::arg("mod"));
  m.def("drof_bit_rate_gbps", &drof_bit_rate_gbps, py::arg("band"), py::arg("geom"),
        py::arg("coding"));
  m.def("drof_bandwidth_ghz", &drof_bandwidth_ghz, py::arg("band"), py::arg("geom"),
        py::arg("coding"));
  m.def("bandwidth_ratio", &bandwidth_ratio, py::arg("band"), py::arg("coding"));
  m.def("rate_ratio", &rate_ratio, py::arg("band"), py::arg("coding"), py::arg("mod"));
  m.def("dimension_report", &dimension_report, py::arg("band"), py::arg("geom"),
        py::arg("coding"), py::arg("mod"));
  m.def("dimension_sweep", &dimension_sweep, py::arg("carrier_freq_ghz"),
        py::arg("geom"), py::arg("coding"), py::arg("mod"), py::arg("bw_points_ghz"));

  // ---- power model ---------------------------------------------------------
  py::enum_<LinkKind>(m, "LinkKind")
      .value("ARoF", LinkKind::ARoF)
      .value("DRoF", LinkKind::DRoF);

  py::class_<PowerParams>(m, "PowerParams")
      .def(py::init<>())
      .def_static("from_file", &PowerParams::from_file, py::arg("path"))
      .def_readwrite("climate_control", &PowerParams::climate_control)
      .def_readwrite("cu_supply", &PowerParams::cu_supply)
      .def_readwrite("cu_sp_base", &PowerParams::cu_sp_base)
      .def_readwrite("cu_sp_per_antenna", &PowerParams::cu_sp_per_antenna)
      .def_readwrite("eo_per_wavelength", &PowerParams::eo_per_wavelength)
      .def_readwrite("oe_per_wavelength", &PowerParams::oe_per_wavelength)
      .def_readwrite("rrh_supply", &PowerParams::rrh_supply)
      .def_readwrite("rrh_sp_base", &PowerParams::rrh_sp_base)
      .def_readwrite("rrh_sp_per_antenna", &PowerParams::rrh_sp_per_antenna)
      .def_readwrite("adc_per_converter", &PowerParams::adc_per_converter)
      .def_readwrite("dac_per_converter", &PowerParams::dac_per_converter)
      .def_readwrite("drof_sp_extra_per_antenna",
                     &PowerParams::drof_sp_extra_per_antenna);

  py::class_<PowerBreakdown::Cu>(m, "CuBreakdown")
      .def_readonly("climate", &PowerBreakdown::Cu::climate)
      .def_readonly("supply", &PowerBreakdown::Cu::supply)
      .def_readonly("signal_processing", &PowerBreakdown::Cu::signal_processing)
      .def_readonly("eo", &PowerBreakdown::Cu::eo)
      .def_readonly("adc", &PowerBreakdown::Cu::adc)
      .def("total", &PowerBreakdown::Cu::total);
  py::class_<PowerBreakdown::Rrh>(m, "RrhBreakdown")
      .def_readonly("oe", &PowerBreakdown::Rrh::oe)
      .def_readonly("supply", &PowerBreakdown::Rrh::supply)
      .def_readonly("signal_processing", &PowerBreakdown::Rrh::signal_processing)
      .def_readonly("dac", &PowerBreakdown::Rrh::dac)
      .def("total", &PowerBreakdown::Rrh::total);
  py::class_<PowerBreakdown>(m, "PowerBreakdown")
      .def_readonly("cu", &PowerBreakdown::cu)
      .def_readonly("rrh", &PowerBreakdown::rrh)
      .def_readonly("total_watts", &PowerBreakdown::total_watts);
  py::class_<PowerSweepRow>(m, "PowerSweepRow")
      .def_readonly("n_t", &PowerSweepRow::n_t)
      .def_readonly("arof_watts", &PowerSweepRow::arof_watts)
      .def_readonly("drof_watts", &PowerSweepRow::drof_watts);

  m.def("link_power", &link_power, py::arg("params"), py::arg("geom"), py::arg("kind"));
  m.def("power_sweep", &power_sweep, py::arg("params"), py::arg("geom_template"),
        py::arg("antenna_counts"));

  // ---- scenario + harness --------------------------------------------------
  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<FronthaulScenario>(m, "FronthaulScenario")
      .def(py::init<>())
      .def_static("from_file", &FronthaulScenario::from_file, py::arg("path"),
                  py::arg("overrides") = std::vector<std::string>{})
      .def_static("from_overrides", &FronthaulScenario::from_overrides,
                  py::arg("overrides"))
      .def("hash", &FronthaulScenario::hash)
      .def("canonical_serialization", &FronthaulScenario::canonical_serialization)
      .def("symbol_rate_gbaud", &FronthaulScenario::symbol_rate_gbaud);

  py::class_<EvmReport>(m, "EvmReport")
      .def_readonly("evm_percent_rms", &EvmReport::evm_percent_rms)
      .def_readonly("symbols_used", &EvmReport::symbols_used);
  py::class_<ChannelEvm>(m, "ChannelEvm")
      .def_readonly("channel", &ChannelEvm::channel)
      .def_readonly("report", &ChannelEvm::report);
  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("kind", &SweepPoint::kind)
      .def_readonly("wdm", &SweepPoint::wdm)
      .def_readonly("laser_dbm", &SweepPoint::laser_dbm)
      .def_readonly("channels", &SweepPoint::channels)
      .def_readonly("error", &SweepPoint::error)
      .def("ok", &SweepPoint::ok)
      .def("worst_evm_percent", &SweepPoint::worst_evm_percent);
  py::class_<DynamicRange>(m, "DynamicRange")
      .def_readonly("kind", &DynamicRange::kind)
      .def_readonly("wdm", &DynamicRange::wdm)
      .def_readonly("threshold_percent", &DynamicRange::threshold_percent)
      .def_readonly("range_db", &DynamicRange::range_db);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("laser_powers_dbm", &SweepResult::laser_powers_dbm)
      .def_readonly("wdm_counts", &SweepResult::wdm_counts)
      .def_readonly("points", &SweepResult::points)
      .def_readonly("dynamic_ranges", &SweepResult::dynamic_ranges);

  m.def("run_link", &run_link, py::arg("scenario"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_evm_sweep", &run_evm_sweep, py::arg("scenario_template"),
        py::arg("laser_powers_dbm"), py::arg("wdm_counts"),
        py::arg("threshold_percent"), py::arg("jobs") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("run_figure3", &run_figure3, py::arg("scenario"), py::arg("bw_points_ghz"));
  m.def("default_figure3_bw_points", &default_figure3_bw_points);
  m.def("run_figure4", &run_figure4, py::arg("params"), py::arg("scenario"),
        py::arg("antenna_counts"));
  m.def("write_dimension_csv", &write_dimension_csv, py::arg("path"), py::arg("rows"),
        py::arg("scenario_hash") = "");
  m.def("write_power_csv", &write_power_csv, py::arg("path"), py::arg("rows"),
        py::arg("scenario_hash") = "");
  m.def("write_sweep_csv", &write_sweep_csv, py::arg("path"), py::arg("result"),
        py::arg("scenario_hash"));
  m.def("write_dynrange_csv", &write_dynrange_csv, py::arg("path"), py::arg("result"),
        py::arg("scenario_hash"));
  m.def("make_run_directory", &make_run_directory, py::arg("base"), py::arg("hash"));
}

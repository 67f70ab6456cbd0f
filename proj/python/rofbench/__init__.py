"""A-RoF vs D-RoF fronthaul toolkit: dimensioning, power model and
waveform-level link simulation."""

from ._core import (  # noqa: F401
    ChannelEvm,
    ConfigError,
    CpriCoding,
    DimensioningReport,
    DynamicRange,
    EvmReport,
    FronthaulScenario,
    LinkKind,
    MimoGeometry,
    ModulationScheme,
    PowerBreakdown,
    PowerParams,
    PowerSweepRow,
    RfBandPlan,
    SweepPoint,
    SweepResult,
    arof_bandwidth_ghz,
    arof_bit_rate_gbps,
    bandwidth_ratio,
    default_figure3_bw_points,
    dimension_report,
    dimension_sweep,
    drof_bandwidth_ghz,
    drof_bit_rate_gbps,
    link_power,
    make_run_directory,
    max_zone_index,
    min_sampling_rate,
    power_sweep,
    rate_ratio,
    run_evm_sweep,
    run_figure3,
    run_figure4,
    run_link,
    sampling_rate_range,
    write_dimension_csv,
    write_dynrange_csv,
    write_power_csv,
    write_sweep_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

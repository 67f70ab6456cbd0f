import math

import pytest

import rofbench as rb


def test_dimensioning_golden_numbers():
    band = rb.RfBandPlan(28.0, 0.5)
    geom = rb.MimoGeometry(16, 16, 3)
    coding = rb.CpriCoding(15, 16.0 / 15.0, 10.0 / 8.0)
    mod = rb.ModulationScheme(256)

    assert rb.max_zone_index(band) == 28
    assert rb.min_sampling_rate(band) == pytest.approx(2.0357, abs=1e-4)
    assert rb.arof_bandwidth_ghz(band, geom) == 48.0
    assert rb.arof_bit_rate_gbps(band, geom, mod) == 384.0
    assert rb.drof_bandwidth_ghz(band, geom, coding) == pytest.approx(1954.0, abs=1.0)
    assert rb.bandwidth_ratio(band, coding) == pytest.approx(40.7, abs=0.1)

    lo, hi = rb.sampling_rate_range(band, 1)
    assert lo == pytest.approx(57.0)
    assert math.isinf(hi)


def test_dimension_sweep():
    geom = rb.MimoGeometry(16, 16, 3)
    coding = rb.CpriCoding(15, 16.0 / 15.0, 10.0 / 8.0)
    rows = rb.dimension_sweep(28.0, geom, coding, rb.ModulationScheme(256),
                              rb.default_figure3_bw_points())
    assert len(rows) == 20
    assert rows[-1].arof_bw_ghz == pytest.approx(48.0)
    assert all(39.0 <= r.bandwidth_ratio <= 41.5 for r in rows)


def test_power_model():
    params = rb.PowerParams()
    geom = rb.MimoGeometry(16, 16, 3)
    arof = rb.link_power(params, geom, rb.LinkKind.ARoF)
    drof = rb.link_power(params, geom, rb.LinkKind.DRoF)
    assert drof.total_watts > arof.total_watts
    assert arof.total_watts == pytest.approx(arof.cu.total() + arof.rrh.total())

    rows = rb.power_sweep(params, rb.MimoGeometry(1, 1, 3), [1, 8, 64])
    assert [r.n_t for r in rows] == [1, 8, 64]
    assert all(r.drof_watts > r.arof_watts for r in rows)


def test_scenario_and_link():
    sc = rb.FronthaulScenario.from_overrides(
        ["link_kind=drof", "payload_symbols=2048", "wdm_channels=2",
         "fiber.length_km=0"]
    )
    assert len(sc.hash()) == 16
    assert sc.symbol_rate_gbaud() == pytest.approx(2.5)

    evm = rb.run_link(sc)
    assert [c.channel for c in evm] == [0, 1]
    for c in evm:
        assert c.report.evm_percent_rms < 0.5
        assert c.report.symbols_used == 2048

    with pytest.raises(rb.ConfigError):
        rb.FronthaulScenario.from_overrides(["no.such_key=1"])


def test_sweep_and_csv(tmp_path):
    sc = rb.FronthaulScenario.from_overrides(
        ["link_kind=drof", "payload_symbols=2048"]
    )
    result = rb.run_evm_sweep(sc, [8.0, 10.0], [1, 2], 3.5, 2)
    assert len(result.points) == 4
    assert all(p.ok() for p in result.points)
    assert len(result.dynamic_ranges) == 2
    # digital pipe stays below threshold over the whole 2 dB span
    assert result.dynamic_ranges[0].range_db == pytest.approx(2.0)

    out = tmp_path / "sweep.csv"
    rb.write_sweep_csv(str(out), result, sc.hash())
    text = out.read_text()
    assert text.startswith(f"# scenario_hash={sc.hash()}\n")
    assert "kind,wdm,laser_dbm,channel,evm_percent" in text
    with pytest.raises(RuntimeError):
        rb.write_sweep_csv(str(out), result, "f" * 16)

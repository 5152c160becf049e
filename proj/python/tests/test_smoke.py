import math

import numpy as np
import pytest

import tqdfock


def test_presets_listed():
    names = tqdfock.presets()
    assert "fig2_stirap" in names
    assert "fig3_full" in names


def test_counterdiabatic_peak():
    assert tqdfock.counterdiabatic_amplitude(0.0) == pytest.approx(1.0, rel=1e-14)
    assert tqdfock.counterdiabatic_amplitude(0.0, omega0=0.0) == 0.0


def test_auxiliary_pair_reproduces_coupling():
    for t in np.linspace(-3.0, 3.0, 13):
        g_m, omega_m = tqdfock.physical_pulse_pair(t)
        assert omega_m * g_m / 18.0 == pytest.approx(
            tqdfock.counterdiabatic_amplitude(t), rel=1e-12
        )


def test_dark_state_is_null_vector():
    es = tqdfock.analytic_eigensystem(1.3, 0.7, 1.0)
    assert es["eigenvalues"][0] == pytest.approx(0.0, abs=1e-14)
    dark = np.asarray(es["eigenvectors"][0])
    assert abs(dark[0]) == pytest.approx(math.cos(es["theta"]), abs=1e-14)
    assert np.linalg.norm(dark) == pytest.approx(1.0, abs=1e-14)


def test_run_tqd_transfers_population():
    out = tqdfock.run("fig2_tqd")
    s = out["summary"]
    assert s["final_p_g2_1"] >= 0.999
    assert s["max_p_e_0"] <= 1e-3
    lines = out["csv"].splitlines()
    assert lines[0].startswith("t_over_T,p_g1_0")
    assert len(lines) == 802


def test_run_overrides():
    s = tqdfock.run("fig2_stirap", {"omega0_T": 5})["summary"]
    assert s["final_p_g2_1"] > 0.9
    lossless = tqdfock.run("fig2f_dissipative_tqd", {"gamma_T": None, "kappa_T": None})
    assert lossless["summary"]["final_mandel_q"] == pytest.approx(-1.0, abs=1e-3)


def test_sweep_preserves_order():
    rows = tqdfock.sweep("fig2_stirap", "omega0_T", [2.0, 5.0])
    assert len(rows) == 2
    assert rows[0]["final_p_g2_1"] == pytest.approx(0.7353, abs=1e-3)
    assert rows[1]["final_p_g2_1"] > rows[0]["final_p_g2_1"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        tqdfock.run("no_such_preset")
    with pytest.raises(ValueError):
        tqdfock.run("fig2_tqd", {"dt_over_T": -1})
    with pytest.raises(ValueError):
        tqdfock.run("fig3_full", {"gamma_T": 5})

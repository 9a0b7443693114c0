import json
import math
import os
import subprocess

import pytest

import blockage_geom as bg


def test_baseline_analytic_values():
    p = bg.baseline_params(100.0)
    assert bg.eta_x(p) == pytest.approx(715.0 / 940.0, abs=1e-14)
    assert bg.eta_tilde(p) == pytest.approx(0.898143956541422, abs=1e-12)
    assert bg.p_los_point(p) == pytest.approx(0.612717643208, abs=1e-10)
    assert bg.mean_los_length(p) == pytest.approx(69.1557303146, abs=1e-8)
    r_star, r_eq = bg.critical_radii(p)
    assert r_star == pytest.approx(204.143682405, abs=1e-8)
    assert r_eq / r_star == pytest.approx(math.log(2.0), abs=1e-14)


def test_validation_error_is_value_error():
    p = bg.baseline_params()
    p.lambda_ = 0.0
    with pytest.raises(ValueError):
        bg.validate(p)
    p = bg.baseline_params()
    p.h_bs = p.h_user
    with pytest.raises(bg.ValidationError):
        bg.validate(p)


def test_shadow_and_merge():
    p = bg.baseline_params(100.0, 200.0)
    assert bg.shadow_of_building(bg.Building(50, 50, 20, 30), p) == (80.0, 120.0)
    assert bg.shadow_of_building(bg.Building(50, 20, 20, 20), p) is None
    ivs = bg.merge_shadows([(10, 30), (20, 50), (100, 120)], 200.0)
    assert [(iv.start, iv.end, iv.kind == bg.Kind.LOS) for iv in ivs] == [
        (0, 10, True), (10, 50, False), (50, 100, True), (100, 120, False), (120, 200, True)]
    with pytest.raises(bg.DomainError):
        bg.shadow_of_building(bg.Building(50, 150, 20, 30), p)


def test_simulation_is_reproducible_and_thread_independent():
    p = bg.baseline_params(100.0, 2000.0)
    a = bg.run_trials(p, 20, seed=4)
    b = bg.run_trials(p, 20, seed=4, threads=3)
    assert a.los_lengths == b.los_lengths
    assert a.nlos_lengths == b.nlos_lengths
    assert 0.4 < a.point_los_frequency < 0.8


def test_empirical_cdf():
    assert bg.empirical_cdf([1.0, 2.0, 3.0], [0.0, 2.0, 5.0]) == pytest.approx([0.0, 2.0 / 3.0, 1.0])
    with pytest.raises(bg.EmptySample):
        bg.empirical_cdf([], [1.0])


def test_layout_round_trip_matches_simulation():
    p = bg.baseline_params(150.0, 1500.0)
    scene = bg.sample_scene(p, seed=3, index=0)
    simulated = bg.extract_intervals(scene, p)
    doc = bg.scene_to_layout_json(scene, p)
    evaluated = bg.evaluate_layout(doc, 0.0, 0.0, p.h_bs, p.r, 0.0, p.d, p.h_user)
    assert [(iv.start, iv.end, iv.kind, iv.censored) for iv in simulated] == [
        (iv.start, iv.end, iv.kind, iv.censored) for iv in evaluated]
    assert bg.estimate_density(json.dumps({"units": "m", "buildings": [
        {"u_lo": 0, "u_hi": 1, "v_lo": 0, "v_hi": 1, "h": 5}]})) == 1.0
    with pytest.raises(bg.LayoutError):
        bg.estimate_density('{"units": "ft"}')


@pytest.mark.skipif("BLOCKAGE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_analytic(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"lambda": 3.22e-4, "r": 100, "d": 1000, "h_bs": 25, "h_user": 1.5,
                               "l_min": 10, "l_max": 30, "h_min": 10, "h_max": 30}))
    out = tmp_path / "out"
    subprocess.run([os.environ["BLOCKAGE_CLI"], "analytic", "--config", str(cfg), "--out", str(out)], check=True)
    summary = json.loads((out / "analytic_summary.json").read_text())
    assert summary["eta_x"] == pytest.approx(0.760638, abs=1e-6)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"lambda": 0}))
    rc = subprocess.run([os.environ["BLOCKAGE_CLI"], "analytic", "--config", str(bad), "--out", str(out)]).returncode
    assert rc == 2

"""Monte Carlo drivers: intervals, CSV records, threshold search, validations."""

import dataclasses
import math
import random

import pytest

from dcl import (
    ExperimentConfig,
    estimate_probability,
    fkg_experiment,
    format_csv,
    locate_threshold,
    moment_validation,
    scan,
    sharpness_width,
    wilson_interval,
    write_csv,
)
from dcl.experiments import _CSV_HEADER

Z95 = 1.96  # the module's documented default


def wilson_by_hand(sat, trials, z=Z95):
    p = sat / trials
    centre = (p + z * z / (2 * trials)) / (1 + z * z / trials)
    half = z * math.sqrt((p * (1 - p) + z * z / (4 * trials)) / trials) / (1 + z * z / trials)
    return centre - half, centre + half


def strip_wall(rec):
    return dataclasses.replace(rec, wall_ms=0.0)


def test_wilson_interval_formula_and_containment():
    for sat, trials in ((0, 10), (3, 10), (10, 10), (17, 60), (999, 1000)):
        p, lo, hi = wilson_interval(sat, trials)
        want_lo, want_hi = wilson_by_hand(sat, trials)
        assert p == sat / trials
        assert lo == pytest.approx(max(0.0, want_lo), abs=1e-12)
        assert hi == pytest.approx(min(1.0, want_hi), abs=1e-12)
        assert 0.0 <= lo <= p <= hi <= 1.0
    with pytest.raises(ValueError):
        wilson_interval(1, 0)
    with pytest.raises(ValueError):
        wilson_interval(11, 10)
    with pytest.raises(ValueError):
        wilson_interval(-1, 10)


def test_wilson_interval_coverage():
    # 95% interval should cover the true p about 95% of the time
    rng = random.Random(50)
    true_p = 0.3
    covered = 0
    reps = 1000
    for _ in range(reps):
        sat = sum(1 for _ in range(60) if rng.random() < true_p)
        _, lo, hi = wilson_interval(sat, 60)
        covered += lo <= true_p <= hi
    assert 0.92 <= covered / reps <= 0.98


def test_config_guards():
    with pytest.raises(ValueError):
        ExperimentConfig(n=10, k=2, trials=0, seed=0, m=5)
    with pytest.raises(ValueError):
        ExperimentConfig(n=10, k=2, trials=1, seed=0, m=5, p=0.1)
    with pytest.raises(ValueError):
        ExperimentConfig(n=10, k=2, trials=1, seed=0)  # no parameter, no grid
    with pytest.raises(ValueError):
        ExperimentConfig(n=10, k=2, trials=1, seed=0, m=5, solver="magic")
    cfg = ExperimentConfig(n=10, k=2, trials=1, seed=0, p=0.2)
    assert cfg.model == "p" and cfg.param == 0.2
    cfg_s = ExperimentConfig(n=10, k=2, trials=1, seed=0, s=30)
    assert cfg_s.model == "lists" and cfg_s.param == 30


def test_estimate_probability_deterministic_across_workers():
    cfg = ExperimentConfig(n=24, k=2, trials=60, seed=7, m=10)
    a = estimate_probability(cfg)
    b = estimate_probability(cfg)
    c = estimate_probability(dataclasses.replace(cfg, workers=2))
    assert strip_wall(a) == strip_wall(b) == strip_wall(c)
    assert a.model == "m" and a.param == 10 and a.density == pytest.approx(10 / 24)
    assert a.ci_lo <= a.p_hat <= a.ci_hi


def test_estimate_probability_other_models():
    rec_p = estimate_probability(ExperimentConfig(n=20, k=2, trials=30, seed=9, p=0.02))
    assert rec_p.model == "p" and rec_p.density == pytest.approx(0.02 * 20)
    rec_s = estimate_probability(ExperimentConfig(n=5, k=2, trials=30, seed=9, s=12))
    assert rec_s.model == "lists" and rec_s.density == pytest.approx(5 / 12)


def test_solver_compatibility_guards():
    with pytest.raises(ValueError):
        estimate_probability(ExperimentConfig(n=10, k=3, trials=5, seed=0, m=5))  # decide2 needs k=2
    with pytest.raises(ValueError):
        estimate_probability(
            ExperimentConfig(n=40, k=2, trials=5, seed=0, m=5, solver="brute"))  # brute capped


def test_scan_plain_and_nested():
    grid = (4, 10, 16, 22)
    cfg = ExperimentConfig(n=20, k=2, trials=50, seed=11, grid=grid)
    recs = scan(cfg)
    assert [r.param for r in recs] == list(grid)
    assert all(r.model == "m" and r.trials == 50 for r in recs)

    nested = scan(dataclasses.replace(cfg, nested=True))
    sats = [r.sat for r in nested]
    assert sats == sorted(sats, reverse=True)  # coupled trials can only lose covers
    again = scan(dataclasses.replace(cfg, nested=True))
    assert [strip_wall(r) for r in nested] == [strip_wall(r) for r in again]


def test_scan_guards():
    base = ExperimentConfig(n=20, k=2, trials=5, seed=0, grid=(3, 2))
    with pytest.raises(ValueError, match="ascending"):
        scan(base)
    with pytest.raises(ValueError, match="nonempty"):
        scan(ExperimentConfig(n=20, k=2, trials=5, seed=0, m=3, grid=()))
    with pytest.raises(ValueError, match="m model"):
        scan(ExperimentConfig(n=20, k=2, trials=5, seed=0, p=0.1,
                              grid=(0.1, 0.2), nested=True))


def test_csv_shape():
    cfg = ExperimentConfig(n=20, k=2, trials=40, seed=13, grid=(5, 12))
    recs = scan(cfg)
    text = format_csv(recs)
    lines = text.splitlines()
    assert lines[0] == _CSV_HEADER
    assert _CSV_HEADER == ("k,n,model,param,density,trials,sat,p_hat,ci_lo,ci_hi,"
                          "seed,solver,mode,wall_ms")
    assert len(lines) == 3
    assert text.endswith("\n")
    first = lines[1].split(",")
    assert first[0] == "2" and first[1] == "20" and first[2] == "m"
    assert first[4] == f"{5 / 20:.6g}"
    assert first[12] == "simple"


def test_write_csv_round_trip(tmp_path):
    cfg = ExperimentConfig(n=16, k=2, trials=20, seed=17, grid=(4, 8))
    recs = scan(cfg)
    path = tmp_path / "scan.csv"
    write_csv(recs, str(path))
    assert path.read_text() == format_csv(recs)


def test_locate_threshold_small_pair_case():
    res = locate_threshold(60, 2, trials=100, seed=21, tol=0.1)
    assert res.flag in ("converged", "straddle", "budget_exhausted")
    assert res.bracket_lo <= res.estimate <= res.bracket_hi
    assert 0.2 < res.estimate < 0.9  # the k=2 transition sits near density 1/2
    assert res.records
    assert all(r.n == 60 and r.k == 2 and r.solver == "decide2" for r in res.records)


def test_locate_threshold_guards():
    with pytest.raises(ValueError):
        locate_threshold(20, 1)
    with pytest.raises(ValueError):
        locate_threshold(20, 2, target=0.0)


def test_sharpness_width_arithmetic():
    recs = sharpness_width(2, [40], trials=120, seed=23, tol=0.05)
    assert len(recs) == 1
    rec = recs[0]
    assert rec.n == 40
    assert rec.width == pytest.approx(rec.density_lo - rec.density_hi, abs=1e-12)
    assert rec.width > 0  # losing covers takes more density than keeping them


def test_fkg_experiment_chain():
    rep = fkg_experiment(60, 0.5, 400, seed=25)
    assert rep.violations == 0
    assert rep.greedy_sat <= rep.decide2_sat
    assert rep.bound == pytest.approx(math.exp(-8), rel=1e-12)
    assert not rep.vacuous
    assert fkg_experiment(60, 0.5, 10, seed=25).vacuous
    for bad in (0.0, 1.0, -0.5):
        with pytest.raises(ValueError):
            fkg_experiment(60, bad, 10)


def test_moment_validation_edgeless_exact():
    rep = moment_validation(4, 3, 0.0, 1.0, trials=50, seed=27)
    assert rep.sample_mean == 6.0  # every instance counts all balanced covers
    assert rep.std_error == 0.0
    assert rep.closed_binom == pytest.approx(6.0, rel=1e-12)
    assert rep.closed_paper == pytest.approx(12.0, rel=1e-12)
    assert rep.supported == "binom"


def test_moment_validation_small_stochastic():
    rep = moment_validation(6, 2, 1.0, 0.8, trials=4000, seed=29)
    assert rep.closed_paper == pytest.approx(2 * rep.closed_binom, rel=1e-12)
    assert abs(rep.sample_mean - rep.closed_binom) <= 5 * rep.std_error
    assert rep.supported in ("binom", "both")


def test_moment_validation_guards():
    with pytest.raises(ValueError):
        moment_validation(4, 3, 0.0, 1.0, trials=5, mode="simple")
    with pytest.raises(ValueError):
        moment_validation(5, 3, 0.0, 1.0, trials=5)
    with pytest.raises(ValueError):
        moment_validation(16, 3, 0.0, 1.0, trials=5)
    with pytest.raises(ValueError):
        moment_validation(4, 3, 0.3, 1.0, trials=5)  # r*n not an integer

"""Monte Carlo harness: probability estimates, scans, threshold location,
correlation-bound checks, and moment-formula validation.

Determinism contract: every record is a pure function of its config; trial t
at grid point g uses the seed derive_seed(master, g, t) (nested scans drop the
grid token so one edge stream serves the whole grid).  Worker processes only
change wall-clock fields, never results.  CSV rows carry the exact column set
in _CSV_HEADER with floats at 6 significant digits and LF endings.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import MODE_REPLACEMENT, MODE_SIMPLE, MODES, TwoColouredHypergraph, build
from .sampler import (
    STREAM_BLUE,
    STREAM_RED,
    SplitMix64,
    derive_seed,
    edge_sequence,
    sample_lists,
    sample_pair_m,
    sample_pair_p,
)
from .reduction import lists_to_hypergraphs
from .solver2 import decide2, greedy_peel
from .solvergen import brute_force, dpll, weighted_balanced_X
from .analytics import alt_cycle_free_lower_bound, expected_weighted_X

_CSV_HEADER = "k,n,model,param,density,trials,sat,p_hat,ci_lo,ci_hi,seed,solver,mode,wall_ms"

_MODELS = ("m", "p", "lists")
_SOLVERS = ("decide2", "dpll", "brute")

_Z95 = 1.96


def wilson_interval(sat: int, trials: int, z: float = _Z95) -> tuple[float, float, float]:
    """(p_hat, lo, hi): 95% score interval; always contains p_hat."""
    if trials <= 0:
        raise ValueError(f"trials must be positive, got {trials}")
    if not 0 <= sat <= trials:
        raise ValueError(f"sat={sat} outside [0, trials={trials}]")
    p = sat / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    centre = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials)) / denom
    # the score interval contains p in exact arithmetic; rounding can leave
    # centre+half a hair below p at the endpoints, so clamp both ways
    lo = min(p, max(0.0, centre - half))
    hi = max(p, min(1.0, centre + half))
    return p, lo, hi


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    k: int
    trials: int
    seed: int
    solver: str = "decide2"
    mode: str = MODE_SIMPLE
    m: Optional[int] = None
    p: Optional[float] = None
    s: Optional[int] = None
    grid: Optional[tuple] = None
    nested: bool = False
    workers: Optional[int] = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.solver not in _SOLVERS:
            raise ValueError(f"solver must be one of {_SOLVERS}, got {self.solver!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        set_fields = [f for f, v in (("m", self.m), ("p", self.p), ("s", self.s)) if v is not None]
        if len(set_fields) > 1:
            raise ValueError(f"at most one of m/p/s may be set, got {set_fields}")
        if not set_fields and self.grid is None:
            raise ValueError("one of m, p, s or a grid is required")

    @property
    def model(self) -> str:
        if self.p is not None:
            return "p"
        if self.s is not None:
            return "lists"
        return "m"

    @property
    def param(self):
        return {"m": self.m, "p": self.p, "lists": self.s}[self.model]


@dataclass(frozen=True)
class ThresholdRecord:
    k: int
    n: int
    model: str
    param: float
    density: float
    trials: int
    sat: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    seed: int
    solver: str
    mode: str
    wall_ms: float


def _density(model: str, n: int, param) -> float:
    if model == "m":
        return param / n
    if model == "p":
        return param * n
    return n / param  # lists: n items over palette s; threshold near s = 2n


def _check_solver(cfg: ExperimentConfig):
    if cfg.solver == "decide2" and cfg.k != 2:
        raise ValueError(f"decide2 requires k=2, got k={cfg.k}")
    if cfg.solver == "brute":
        limit = cfg.s if cfg.model == "lists" else cfg.n
        if limit is not None and limit > 30:
            raise ValueError("brute solver capped at 30 vertices")


def _build_instance(n: int, k: int, model: str, param, mode: str, seed: int) -> TwoColouredHypergraph:
    if model == "m":
        return sample_pair_m(n, k, int(param), seed, mode)
    if model == "p":
        return sample_pair_p(n, k, float(param), seed)
    scheme = sample_lists(n, k, int(param), seed)
    return lists_to_hypergraphs(scheme)


def _solve(h: TwoColouredHypergraph, solver: str) -> bool:
    if solver == "decide2":
        return decide2(h).satisfiable
    if solver == "dpll":
        return dpll(h).satisfiable
    return brute_force(h).satisfiable


def _dispatch(payload):
    kind = payload[0]
    if kind == "trial":
        _, n, k, model, param, mode, solver, seed = payload
        return _solve(_build_instance(n, k, model, param, mode, seed), solver)
    if kind == "nested":
        _, n, k, grid, mode, solver, seed = payload
        m_max = int(grid[-1])
        red = edge_sequence(n, k, m_max, SplitMix64(derive_seed(seed, STREAM_RED)), mode)
        blue = edge_sequence(n, k, m_max, SplitMix64(derive_seed(seed, STREAM_BLUE)), mode)
        sats = []
        for m in grid:
            m = int(m)
            h = build(n, k, red[:m], blue[:m], mode)
            sats.append(_solve(h, solver))
        for i in range(len(sats) - 1):
            # instances are nested, so satisfiability is monotone down the grid
            if sats[i + 1] and not sats[i]:
                raise RuntimeError(
                    f"monotone coupling violated at grid m={grid[i]} vs {grid[i + 1]} (seed {seed})"
                )
        return sats
    if kind == "fkg":
        _, n, p, seed = payload
        h = sample_pair_p(n, 2, p, seed)
        g = greedy_peel(h).satisfiable
        d = decide2(h).satisfiable
        return g, d
    if kind == "moment":
        _, n, k, m, gamma, seed = payload
        h = sample_pair_m(n, k, m, seed, MODE_REPLACEMENT)
        return weighted_balanced_X(h, gamma)
    raise ValueError(f"unknown payload kind {kind!r}")


def _resolve_workers(cfg_workers: Optional[int]) -> int:
    if cfg_workers is not None:
        return max(1, cfg_workers)
    env = os.environ.get("DCL_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _map_payloads(payloads: list, workers: int) -> list:
    if workers <= 1 or len(payloads) < 2:
        return [_dispatch(p) for p in payloads]
    chunk = max(1, len(payloads) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_dispatch, payloads, chunksize=chunk))


def _estimate_at(cfg: ExperimentConfig, grid_index: int, param) -> ThresholdRecord:
    start = time.perf_counter()
    payloads = [
        (
            "trial",
            cfg.n,
            cfg.k,
            cfg.model,
            param,
            cfg.mode,
            cfg.solver,
            derive_seed(cfg.seed, grid_index, t),
        )
        for t in range(cfg.trials)
    ]
    results = _map_payloads(payloads, _resolve_workers(cfg.workers))
    sat = sum(1 for r in results if r)
    p_hat, lo, hi = wilson_interval(sat, cfg.trials)
    wall_ms = (time.perf_counter() - start) * 1000.0
    return ThresholdRecord(
        k=cfg.k,
        n=cfg.n,
        model=cfg.model,
        param=param,
        density=_density(cfg.model, cfg.n, param),
        trials=cfg.trials,
        sat=sat,
        p_hat=p_hat,
        ci_lo=lo,
        ci_hi=hi,
        seed=cfg.seed,
        solver=cfg.solver,
        mode=cfg.mode,
        wall_ms=wall_ms,
    )


def estimate_probability(cfg: ExperimentConfig) -> ThresholdRecord:
    """Estimate Pr[instance admits disjoint covers] at the config's parameter."""
    if cfg.param is None:
        raise ValueError("estimate_probability needs one of m, p, s set")
    _check_solver(cfg)
    return _estimate_at(cfg, 0, cfg.param)


def scan(cfg: ExperimentConfig) -> list[ThresholdRecord]:
    """One record per grid point, ascending; nested mode couples the points.

    Nested scans reuse a single per-trial edge stream so the instance at a
    smaller m is a prefix sub-hypergraph of the larger ones, and assert that
    satisfiability never increases with density within a trial.  Nested mode
    requires the m model.
    """
    if not cfg.grid:
        raise ValueError("scan needs a nonempty grid")
    grid = list(cfg.grid)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly ascending")
    _check_solver(cfg)
    if not cfg.nested:
        return [_estimate_at(cfg, gi, param) for gi, param in enumerate(grid)]
    if cfg.model != "m":
        raise ValueError("nested scans support only the m model")
    start = time.perf_counter()
    payloads = [
        ("nested", cfg.n, cfg.k, tuple(grid), cfg.mode, cfg.solver, derive_seed(cfg.seed, t))
        for t in range(cfg.trials)
    ]
    columns = _map_payloads(payloads, _resolve_workers(cfg.workers))
    wall_ms = (time.perf_counter() - start) * 1000.0
    records = []
    for gi, param in enumerate(grid):
        sat = sum(1 for col in columns if col[gi])
        p_hat, lo, hi = wilson_interval(sat, cfg.trials)
        records.append(
            ThresholdRecord(
                k=cfg.k,
                n=cfg.n,
                model=cfg.model,
                param=param,
                density=_density(cfg.model, cfg.n, param),
                trials=cfg.trials,
                sat=sat,
                p_hat=p_hat,
                ci_lo=lo,
                ci_hi=hi,
                seed=cfg.seed,
                solver=cfg.solver,
                mode=cfg.mode,
                wall_ms=wall_ms,
            )
        )
    return records


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def format_csv(records: Sequence[ThresholdRecord]) -> str:
    lines = [_CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    r.k,
                    r.n,
                    r.model,
                    r.param,
                    r.density,
                    r.trials,
                    r.sat,
                    r.p_hat,
                    r.ci_lo,
                    r.ci_hi,
                    r.seed,
                    r.solver,
                    r.mode,
                    r.wall_ms,
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_csv(records: Sequence[ThresholdRecord], path: str):
    with open(path, "w", newline="") as fh:
        fh.write(format_csv(records))


# ---------------------------------------------------------------------------
# threshold location
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocateResult:
    estimate: float
    bracket_lo: float
    bracket_hi: float
    flag: str  # converged | straddle | budget_exhausted
    records: tuple[ThresholdRecord, ...]


def locate_threshold(
    n: int,
    k: int,
    target: float = 0.5,
    tol: float = 0.05,
    *,
    trials: int = 200,
    seed: int = 0,
    solver: Optional[str] = None,
    mode: str = MODE_SIMPLE,
    lo: float = 0.1,
    hi: float = 1.0,
    budget: int = 24,
    workers: Optional[int] = None,
) -> LocateResult:
    """Bisect on density m/n until the interval excludes `target` on both
    flanks or the bracket is narrower than `tol`.

    The starting bracket expands geometrically (up to 8 doublings each way)
    until p_hat at `lo` sits above target and at `hi` below it.  Returns the
    midpoint, the bracket, a status flag, and every record evaluated.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 0 < target < 1:
        raise ValueError(f"target must lie in (0,1), got {target}")
    if solver is None:
        solver = "decide2" if k == 2 else "dpll"
    records: list[ThresholdRecord] = []
    used = 0

    def measure(density: float) -> ThresholdRecord:
        nonlocal used
        used += 1
        cfg = ExperimentConfig(
            n=n,
            k=k,
            trials=trials,
            seed=derive_seed(seed, used),
            solver=solver,
            mode=mode,
            m=max(0, round(density * n)),
            workers=workers,
        )
        rec = estimate_probability(cfg)
        records.append(rec)
        return rec

    for _ in range(8):
        rec = measure(lo)
        if rec.ci_lo > target:
            break
        lo /= 2.0
    else:
        return LocateResult((lo + hi) / 2, lo, hi, "budget_exhausted", tuple(records))
    for _ in range(8):
        rec = measure(hi)
        if rec.ci_hi < target:
            break
        hi *= 2.0
    else:
        return LocateResult((lo + hi) / 2, lo, hi, "budget_exhausted", tuple(records))

    flag = "budget_exhausted"
    while used < budget:
        if hi - lo <= tol:
            flag = "converged"
            break
        mid = (lo + hi) / 2.0
        rec = measure(mid)
        if rec.ci_lo > target:
            lo = mid
        elif rec.ci_hi < target:
            hi = mid
        else:
            flag = "straddle"
            break
    if hi - lo <= tol and flag == "budget_exhausted":
        flag = "converged"
    return LocateResult((lo + hi) / 2.0, lo, hi, flag, tuple(records))


@dataclass(frozen=True)
class WidthRecord:
    n: int
    density_hi: float  # density where p_hat ~ hi (the easy side)
    density_lo: float  # density where p_hat ~ lo
    width: float


def sharpness_width(
    k: int,
    n_list: Sequence[int],
    lo: float = 0.1,
    hi: float = 0.9,
    *,
    trials: int = 600,
    seed: int = 0,
    solver: Optional[str] = None,
    tol: float = 0.02,
    workers: Optional[int] = None,
) -> list[WidthRecord]:
    """Transition-window width (in density units m/n) for each n."""
    if lo >= hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    out = []
    for i, n in enumerate(n_list):
        r_hi = locate_threshold(
            n, k, target=hi, tol=tol, trials=trials, seed=derive_seed(seed, i, 0),
            solver=solver, workers=workers,
        )
        r_lo = locate_threshold(
            n, k, target=lo, tol=tol, trials=trials, seed=derive_seed(seed, i, 1),
            solver=solver, workers=workers,
        )
        out.append(WidthRecord(n, r_hi.estimate, r_lo.estimate, r_lo.estimate - r_hi.estimate))
    return out


# ---------------------------------------------------------------------------
# correlation-bound experiment
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FkgReport:
    n: int
    c: float
    trials: int
    greedy_sat: int
    decide2_sat: int
    greedy_p_hat: float
    decide2_p_hat: float
    bound: float
    vacuous: bool
    violations: int


def fkg_experiment(
    n: int, c: float, trials: int, *, seed: int = 0, workers: Optional[int] = None
) -> FkgReport:
    """Check the peeling/exact chain against the cycle-free lower bound.

    Samples pair graphs with independent edge probability c/n per colour,
    then requires greedy-Sat => decide2-Sat per instance and compares both
    success rates with alt_cycle_free_lower_bound(c).  The bound is flagged
    vacuous when it is too small for `trials` samples to resolve.
    """
    if not 0 < c < 1:
        raise ValueError(f"c must lie in (0,1), got {c}")
    p = c / n
    payloads = [("fkg", n, p, derive_seed(seed, 0, t)) for t in range(trials)]
    results = _map_payloads(payloads, _resolve_workers(workers))
    greedy_sat = sum(1 for g, _ in results if g)
    exact_sat = sum(1 for _, d in results if d)
    violations = sum(1 for g, d in results if g and not d)
    bound = alt_cycle_free_lower_bound(c)
    return FkgReport(
        n=n,
        c=c,
        trials=trials,
        greedy_sat=greedy_sat,
        decide2_sat=exact_sat,
        greedy_p_hat=greedy_sat / trials,
        decide2_p_hat=exact_sat / trials,
        bound=bound,
        vacuous=bound < 1.0 / (10.0 * trials),
        violations=violations,
    )


# ---------------------------------------------------------------------------
# moment validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MomentReport:
    n: int
    k: int
    r: float
    gamma: float
    trials: int
    sample_mean: float
    std_error: float
    closed_binom: float
    closed_paper: float
    supported: str  # binom | paper | both | neither


def moment_validation(
    n: int,
    k: int,
    r: float,
    gamma: float,
    trials: int,
    *,
    seed: int = 0,
    mode: str = MODE_REPLACEMENT,
    workers: Optional[int] = None,
) -> MomentReport:
    """Monte Carlo adjudication of the balanced weighted-sum formula.

    Samples replacement-mode instances with m = r*n edges per colour,
    averages weighted_balanced_X, and reports which closed-form prefactor
    convention the data supports within 3 standard errors.
    """
    if mode != MODE_REPLACEMENT:
        raise ValueError("moment_validation requires replacement mode (the formula assumes it)")
    if n % 2 != 0 or n <= 0 or n > 14:
        raise ValueError(f"n must be even and in [2, 14], got {n}")
    m_float = r * n
    m = round(m_float)
    if abs(m_float - m) > 1e-9:
        raise ValueError(f"r*n must be an integer edge count, got {m_float}")
    payloads = [("moment", n, k, m, gamma, derive_seed(seed, 0, t)) for t in range(trials)]
    values = np.array(_map_payloads(payloads, _resolve_workers(workers)), dtype=np.float64)
    mean = float(values.mean())
    if trials > 1:
        se = float(values.std(ddof=1) / math.sqrt(trials))
    else:
        se = 0.0
    closed_b = math.exp(expected_weighted_X(n, k, r, gamma, "binom"))
    closed_p = math.exp(expected_weighted_X(n, k, r, gamma, "paper"))
    # widen by a relative epsilon so exact zero-variance cases (r=0) compare
    # against the lgamma-rounded closed form sanely
    tol_b = max(3.0 * se, 1e-9 * abs(closed_b))
    tol_p = max(3.0 * se, 1e-9 * abs(closed_p))
    ok_b = abs(mean - closed_b) <= tol_b
    ok_p = abs(mean - closed_p) <= tol_p
    supported = {(True, False): "binom", (False, True): "paper", (True, True): "both"}.get(
        (ok_b, ok_p), "neither"
    )
    return MomentReport(
        n=n,
        k=k,
        r=r,
        gamma=gamma,
        trials=trials,
        sample_mean=mean,
        std_error=se,
        closed_binom=closed_b,
        closed_paper=closed_p,
        supported=supported,
    )

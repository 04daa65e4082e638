"""Closed-form threshold constants and moment-method numerics.

Everything here is a pure function of small scalars.  Large combinatorial
factors go through math.lgamma and sums through a max-shifted log-sum-exp, so
n in the thousands stays finite.  Weighted-moment factors:

    psi(gamma, k)     = ((gamma + 1/gamma)/2)**k - (2*gamma)**(-k)
    f_alpha(a, g, k)  = (1 - 2a + a(g^2 + g^-2))**k
                        - 2*(a g^-2 + (1-2a)/2)**k + a**k g**(-2k)
    g_alpha(a,g,k,r)  = f_alpha(a/2)**(2r) / (a**a (1-a)**(1-a)),  0**0 := 1

psi is the per-edge factor of the weighted first moment over balanced
assignments; f the per-edge factor of the second moment at overlap fraction
alpha; g the Laplace-method integrand whose strict interior maximum at 1/2
certifies a bounded second-moment ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import math

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class MomentParams:
    k: int
    r: float
    gamma: float
    alpha: float

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not 0 <= self.alpha <= 1:
            raise ValueError(f"alpha must lie in [0,1], got {self.alpha}")


@dataclass(frozen=True)
class ThresholdConstants:
    upper: float
    lower: float
    ap_condition: float
    first_moment_root: float


@dataclass(frozen=True)
class LaplaceReport:
    passed: bool
    grid_max_location: float
    g_at_half: float
    second_difference_at_half: float
    failure_reason: Optional[str]


@dataclass(frozen=True)
class FirstMomentRate:
    rate_at_half: float
    max_rate: float
    argmax_x: float


def psi(gamma: float, k: int) -> float:
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    return ((gamma + 1.0 / gamma) / 2.0) ** k - (2.0 * gamma) ** (-k)


def f_alpha(alpha: float, gamma: float, k: int) -> float:
    if not 0 <= alpha <= 0.5:
        raise ValueError(f"alpha must lie in [0, 1/2], got {alpha}")
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    g2 = gamma * gamma
    ig2 = 1.0 / g2
    t1 = (1.0 - 2.0 * alpha + alpha * (g2 + ig2)) ** k
    t2 = 2.0 * (alpha * ig2 + (1.0 - 2.0 * alpha) / 2.0) ** k
    t3 = alpha**k * gamma ** (-2 * k)
    return t1 - t2 + t3


def _xlogx(x: float) -> float:
    # 0**0 := 1 convention at the endpoints
    return 0.0 if x == 0.0 else x * math.log(x)


def _ln_g(alpha: float, gamma: float, k: int, r: float) -> float:
    """ln g_alpha; raises ValueError when f(alpha/2) <= 0."""
    fv = f_alpha(alpha / 2.0, gamma, k)
    if fv <= 0:
        raise ValueError(f"f(alpha/2) <= 0 at alpha={alpha} (f={fv})")
    return 2.0 * r * math.log(fv) - _xlogx(alpha) - _xlogx(1.0 - alpha)


def g_alpha(alpha: float, gamma: float, k: int, r: float) -> float:
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0,1], got {alpha}")
    return math.exp(_ln_g(alpha, gamma, k, r))


def laplace_check(k: int, r: float, gamma: float, grid_size: int = 10000) -> LaplaceReport:
    """Grid test of the second-moment rate function's shape.

    Evaluates g on a uniform grid over [0,1] plus alpha=1/2 exactly.  Passes
    iff f(alpha/2) stays positive everywhere, the strict grid maximum sits at
    1/2, and the central second difference of g at 1/2 (h=1e-4) is negative.
    """
    if grid_size < 1000:
        raise ValueError(f"grid_size must be at least 1000, got {grid_size}")
    half_ln = None
    best_other = -math.inf
    best_other_loc = 0.0
    points = [i / grid_size for i in range(grid_size + 1)]
    if 0.5 not in points:
        points.append(0.5)
    try:
        for a in points:
            lg = _ln_g(a, gamma, k, r)
            if a == 0.5:
                half_ln = lg
            elif lg > best_other:
                best_other = lg
                best_other_loc = a
    except ValueError as exc:
        return LaplaceReport(False, math.nan, math.nan, math.nan, str(exc))
    g_half = math.exp(half_ln)
    h = 1e-4
    try:
        second = (
            math.exp(_ln_g(0.5 + h, gamma, k, r))
            - 2.0 * g_half
            + math.exp(_ln_g(0.5 - h, gamma, k, r))
        ) / (h * h)
    except (ValueError, OverflowError) as exc:
        return LaplaceReport(False, 0.5, g_half, math.nan, str(exc))
    if half_ln <= best_other:
        return LaplaceReport(
            False,
            best_other_loc,
            g_half,
            second,
            f"grid maximum at alpha={best_other_loc}, not 1/2",
        )
    if second >= 0:
        return LaplaceReport(False, 0.5, g_half, second, "second difference at 1/2 is nonnegative")
    return LaplaceReport(True, 0.5, g_half, second, None)


def find_gamma(k: int, r: float) -> Optional[float]:
    """Deterministic search for a weight passing laplace_check.

    Coarse log-spaced sweep of gamma in (0, 1], scored by the margin between
    ln g(1/2) and the best other grid point, then golden-section refinement of
    that margin around the sweep winner, then a full-resolution check.
    """
    if k < 3:
        raise ValueError(f"find_gamma needs k >= 3, got {k}")

    coarse = 1000

    def margin(gamma: float) -> float:
        half = None
        other = -math.inf
        try:
            for i in range(coarse + 1):
                a = i / coarse
                lg = _ln_g(a, gamma, k, r)
                if a == 0.5:
                    half = lg
                elif lg > other:
                    other = lg
        except ValueError:
            return -math.inf
        return half - other

    sweep = [math.exp(-j / 12.0) for j in range(0, 61)]  # 1.0 down to ~6.7e-3
    scores = [margin(g) for g in sweep]
    best = max(range(len(sweep)), key=lambda i: scores[i])
    if scores[best] == -math.inf:
        return None
    lo = math.log(sweep[min(best + 1, len(sweep) - 1)])
    hi = math.log(sweep[max(best - 1, 0)])
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = margin(math.exp(c)), margin(math.exp(d))
    for _ in range(50):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = margin(math.exp(c))
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = margin(math.exp(d))
    gamma = math.exp((a + b) / 2.0)
    for cand in (gamma, sweep[best]):
        if laplace_check(k, r, cand).passed:
            return cand
    return None


def constants(k: int) -> ThresholdConstants:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    upper = 2 ** (k - 1) * _LN2
    lower = upper - (k + 1) * _LN2 - 1.0
    ap = upper - (k + 1) * _LN2 - 0.5 - 1.5 / k
    root = _LN2 / (-2.0 * math.log1p(-(2.0 ** (-k))))
    return ThresholdConstants(upper, lower, ap, root)


def first_moment_rate(k: int, r: float, grid_size: int = 10000) -> FirstMomentRate:
    """Exponential growth rate of the expected cover count at split fraction x.

    rate(x) = H(x) + r*ln((1 - x^k)(1 - (1-x)^k)) with natural-log entropy H.
    A negative maximum certifies that covers vanish in expectation.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    at_half = _LN2 + 2.0 * r * math.log1p(-(2.0 ** (-k)))

    def rate(x: float) -> float:
        cover = (1.0 - x**k) * (1.0 - (1.0 - x) ** k)
        if cover <= 0:
            return -math.inf
        return -_xlogx(x) - _xlogx(1.0 - x) + r * math.log(cover)

    points = [i / grid_size for i in range(1, grid_size)]
    if 0.5 not in points:
        points.append(0.5)
    best_x = 0.5
    best = rate(0.5)
    for x in points:
        v = rate(x)
        if v > best:
            best = v
            best_x = x
    return FirstMomentRate(at_half, best, best_x)


_CONVENTIONS = ("binom", "paper")


def expected_weighted_X(n: int, k: int, r: float, gamma: float, convention: str = "binom") -> float:
    """ln of the expected weighted balanced-cover sum, replacement model.

    ln E[X] = ln C(n, n/2) + 2*r*n*ln psi(gamma, k), plus ln 2 under the
    "paper" convention (which counts each balanced split twice).  The Monte
    Carlo adjudication of the two conventions lives in the experiments module.
    """
    if n % 2 != 0 or n <= 0:
        raise ValueError(f"n must be positive and even, got {n}")
    if convention not in _CONVENTIONS:
        raise ValueError(f"convention must be one of {_CONVENTIONS}, got {convention!r}")
    p = psi(gamma, k)
    if p <= 0:
        raise ValueError(f"psi(gamma={gamma}, k={k}) = {p} <= 0")
    ln_choose = math.lgamma(n + 1) - 2.0 * math.lgamma(n / 2 + 1)
    out = ln_choose + 2.0 * r * n * math.log(p)
    if convention == "paper":
        out += _LN2
    return out


def second_moment_ratio(n: int, k: int, r: float, gamma: float) -> float:
    """E[X^2] / E[X]^2 for the weighted balanced-cover count.

    Sum over overlap counts z of C(n/2,z)^2 f(z/n)^(2rn), divided by
    C(n,n/2) psi^(4rn); accumulated in log space.  The r=0 case returns 1.0
    exactly without touching floats (Vandermonde identity).
    """
    if n % 2 != 0 or n <= 0:
        raise ValueError(f"n must be positive and even, got {n}")
    if r == 0:
        # sum of C(n/2,z)^2 equals C(n,n/2) exactly; keep this path integral
        return 1.0
    half = n // 2
    logs = []
    for z in range(half + 1):
        fv = f_alpha(z / n, gamma, k)
        if fv <= 0:
            raise ValueError(f"f(z/n) <= 0 at z={z} (f={fv})")
        lc = math.lgamma(half + 1) - math.lgamma(z + 1) - math.lgamma(half - z + 1)
        logs.append(2.0 * lc + 2.0 * r * n * math.log(fv))
    m = max(logs)
    lse = m + math.log(math.fsum(math.exp(x - m) for x in logs))
    p = psi(gamma, k)
    if p <= 0:
        raise ValueError(f"psi(gamma={gamma}, k={k}) = {p} <= 0")
    denom = math.lgamma(n + 1) - 2.0 * math.lgamma(half + 1) + 4.0 * r * n * math.log(p)
    return math.exp(lse - denom)


def bicycle_expectation_bound(c: float, n: int) -> float:
    """Expected count bound for the two-cycle obstruction at edge density c/n."""
    if not 0 <= c < 1:
        raise ValueError(f"c must lie in [0, 1), got {c}")
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    return (2.0 * c / n) * (1.0 / (1.0 - c)) ** 3


def alt_cycle_free_lower_bound(c: float) -> float:
    """Correlation-inequality lower bound on avoiding all alternating cycles."""
    if not 0 <= c < 1:
        raise ValueError(f"c must lie in [0, 1), got {c}")
    return math.exp(-4.0 / (1.0 - c))

"""Seeded random instance generators.

Determinism contract: every sampler output is a pure function of its explicit
parameters.  Randomness comes from SplitMix64 (Steele/Lea/Flood finalizer,
constants below), so streams never depend on library versions.  Sub-streams
are derived from (seed, label, index) with the same mixing function; the red
and blue edge streams of one instance are decorrelated by construction.

Conventions:
- simple mode: edges are k-subsets, distinct within a colour, drawn by
  rejection against a seen-set (uniform over m-subsets of the C(n,k) edges);
- replacement mode: each edge is k independent uniform vertex draws, repeats
  kept, stored sorted (a multiset edge);
- p-model: every one of the C(n,k) possible edges included independently with
  probability p, realized by geometric skip sampling in lexicographic rank
  order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import (MODE_REPLACEMENT, MODE_SIMPLE, MODES, ListScheme,
                   TwoColouredHypergraph, build)

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

# Stream labels (arbitrary fixed integers; letters R, B, L, G).
STREAM_RED = 0x52
STREAM_BLUE = 0x42
STREAM_LEFT = 0x4C
STREAM_RIGHT = 0x47


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a fixed 64-bit bijective scrambler."""
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *tokens: int) -> int:
    """Fold (seed, token, token, ...) into one 64-bit sub-stream seed."""
    h = mix64(seed & MASK64)
    for t in tokens:
        h = mix64(h ^ mix64((t + _GOLDEN) & MASK64))
    return h


class SplitMix64:
    """The raw generator: state += golden ratio; output = mix64(state)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound); bound may exceed 64 bits."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        words = max(1, (bound.bit_length() + 63) // 64)
        span = 1 << (64 * words)
        limit = (span // bound) * bound  # rejection keeps the draw unbiased
        while True:
            x = 0
            for _ in range(words):
                x = (x << 64) | self.next_u64()
            if x < limit:
                return x % bound

    def float01(self) -> float:
        """Uniform float in (0, 1]."""
        return ((self.next_u64() >> 11) + 1) * 2.0 ** -53

    def sample_sorted(self, n: int, k: int) -> tuple[int, ...]:
        """Uniform k-subset of 1..n (Floyd's algorithm), sorted ascending."""
        if k > n:
            raise ValueError(f"cannot draw {k} distinct vertices from 1..{n}")
        chosen: set[int] = set()
        for j in range(n - k + 1, n + 1):
            t = 1 + self.below(j)
            if t in chosen:
                chosen.add(j)
            else:
                chosen.add(t)
        return tuple(sorted(chosen))


@dataclass(frozen=True)
class SampleConfig:
    n: int
    k: int
    seed: int
    m: Optional[int] = None
    p: Optional[float] = None
    mode: str = MODE_SIMPLE


def sample(cfg: SampleConfig) -> TwoColouredHypergraph:
    """Dispatch on the configured model (exactly one of m, p must be set)."""
    if (cfg.m is None) == (cfg.p is None):
        raise ValueError("exactly one of m and p must be given")
    if cfg.m is not None:
        return sample_pair_m(cfg.n, cfg.k, cfg.m, cfg.seed, cfg.mode)
    return sample_pair_p(cfg.n, cfg.k, cfg.p, cfg.seed)


def _check_nk(n: int, k: int, mode: str):
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == MODE_SIMPLE and k > n:
        raise ValueError(f"simple mode needs k <= n, got k={k}, n={n}")


def edge_sequence(n: int, k: int, m: int, stream: SplitMix64,
                  mode: str = MODE_SIMPLE) -> tuple[tuple[int, ...], ...]:
    """An ordered sequence of m edges; any prefix is itself a valid sample.

    In simple mode the first j edges of the sequence are a uniform j-subset of
    the possible edges, which is what makes nested (coupled) density scans
    possible.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if mode == MODE_REPLACEMENT:
        return tuple(tuple(sorted(1 + stream.below(n) for _ in range(k)))
                     for _ in range(m))
    total = math.comb(n, k)
    if m > total:
        raise ValueError(f"m={m} exceeds the {total} possible edges")
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    while len(out) < m:
        e = stream.sample_sorted(n, k)
        if e not in seen:
            seen.add(e)
            out.append(e)
    return tuple(out)


def sample_pair_m(n: int, k: int, m: int, seed: int,
                  mode: str = MODE_SIMPLE) -> TwoColouredHypergraph:
    """m red and m blue edges from decorrelated sub-streams of seed."""
    _check_nk(n, k, mode)
    red = edge_sequence(n, k, m, SplitMix64(derive_seed(seed, STREAM_RED)), mode)
    blue = edge_sequence(n, k, m, SplitMix64(derive_seed(seed, STREAM_BLUE)), mode)
    return build(n, k, red, blue, mode)


def _unrank_pair(rank: int, n: int) -> tuple[int, int]:
    # Lexicographic rank -> pair (a, b), 1 <= a < b <= n.  Ranks with first
    # element <= a total S(a) = a*n - a*(a+1)/2; invert by sqrt then adjust.
    disc = (2 * n - 1) ** 2 - 8 * (rank + 1)
    a = (2 * n - 1 - math.isqrt(disc)) // 2
    while a * n - a * (a + 1) // 2 < rank + 1:
        a += 1
    while a > 1 and (a - 1) * n - a * (a - 1) // 2 >= rank + 1:
        a -= 1
    before = (a - 1) * n - a * (a - 1) // 2
    b = a + 1 + (rank - before)
    return a, b


def _unrank_combination(rank: int, n: int, k: int) -> tuple[int, ...]:
    """Lexicographic unranking of k-subsets of 1..n."""
    if k == 2:
        return _unrank_pair(rank, n)
    out = []
    x = 1
    r = rank
    for i in range(k, 0, -1):
        while True:
            cnt = math.comb(n - x, i - 1)
            if r < cnt:
                out.append(x)
                x += 1
                break
            r -= cnt
            x += 1
    return tuple(out)


def _p_edges(n: int, k: int, p: float, stream: SplitMix64) -> tuple[tuple[int, ...], ...]:
    total = math.comb(n, k)
    if p == 0.0:
        return ()
    if p == 1.0:
        return tuple(_unrank_combination(r, n, k) for r in range(total))
    log_q = math.log1p(-p)
    out = []
    idx = -1
    while True:
        gap = int(math.log(stream.float01()) / log_q)
        idx += 1 + gap
        if idx >= total:
            break
        out.append(_unrank_combination(idx, n, k))
    return tuple(out)


def sample_pair_p(n: int, k: int, p: float, seed: int) -> TwoColouredHypergraph:
    """Independent-inclusion model; always simple mode."""
    _check_nk(n, k, MODE_SIMPLE)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    red = _p_edges(n, k, p, SplitMix64(derive_seed(seed, STREAM_RED)))
    blue = _p_edges(n, k, p, SplitMix64(derive_seed(seed, STREAM_BLUE)))
    return build(n, k, red, blue, MODE_SIMPLE)


def sample_lists(n: int, k: int, s: int, seed: int) -> ListScheme:
    """2n uniform k-subsets of 1..s: n left lists, n right lists."""
    if s < k:
        raise ValueError(f"need s >= k, got s={s}, k={k}")
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be >= 1, got n={n}, k={k}")
    left_stream = SplitMix64(derive_seed(seed, STREAM_LEFT))
    right_stream = SplitMix64(derive_seed(seed, STREAM_RIGHT))
    left = tuple(left_stream.sample_sorted(s, k) for _ in range(n))
    right = tuple(right_stream.sample_sorted(s, k) for _ in range(n))
    return ListScheme(n, k, s, left, right)

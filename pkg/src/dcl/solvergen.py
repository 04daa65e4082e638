"""Exact solvers and counters for any k: reference oracles and a DPLL search.

brute_force and count_all_covers sweep all 2^n colourings with numpy in
chunks; dpll is a backtracking search with unit and pure-vertex propagation.
Vertex i maps to bit (n - i) so that ascending masks enumerate assignments in
lexicographic order with Red < Blue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import math
import sys

import numpy as np

from .core import Assignment, Colour, TwoColouredHypergraph

_CHUNK = 1 << 20


@dataclass(frozen=True)
class Decision:
    satisfiable: bool
    assignment: Optional[Assignment] = None


def _edge_bits(h: TwoColouredHypergraph):
    n = h.n
    red = [0] * len(h.red_edges)
    for i, e in enumerate(h.red_edges):
        for v in set(e.vertices):
            red[i] |= 1 << (n - v)
    blue = [0] * len(h.blue_edges)
    for i, e in enumerate(h.blue_edges):
        for v in set(e.vertices):
            blue[i] |= 1 << (n - v)
    return red, blue


def _assignment_from_mask(mask: int, n: int) -> Assignment:
    return Assignment(tuple(Colour((mask >> (n - i)) & 1) for i in range(1, n + 1)))


def _covered(masks: np.ndarray, red, blue) -> np.ndarray:
    ok = np.ones(masks.shape, dtype=bool)
    for em in red:  # red edge misses iff every vertex bit is 1 (all Blue)
        ok &= (masks & em) != em
    for em in blue:  # blue edge misses iff no vertex bit is 1
        ok &= (masks & em) != 0
    return ok


def brute_force(h: TwoColouredHypergraph) -> Decision:
    """Exhaustive check over all 2^n assignments; n <= 30.

    Returns the lexicographically first satisfying assignment (Red < Blue,
    vertex 1 most significant).
    """
    if h.n > 30:
        raise ValueError(f"brute_force is capped at n=30, got n={h.n}")
    red, blue = _edge_bits(h)
    total = 1 << h.n
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        masks = np.arange(lo, hi, dtype=np.uint64)
        ok = _covered(masks, red, blue)
        if ok.any():
            mask = lo + int(np.argmax(ok))
            return Decision(True, _assignment_from_mask(mask, h.n))
    return Decision(False)


def count_all_covers(h: TwoColouredHypergraph) -> int:
    """Number of satisfying assignments; n <= 24."""
    if h.n > 24:
        raise ValueError(f"count_all_covers is capped at n=24, got n={h.n}")
    red, blue = _edge_bits(h)
    total = 1 << h.n
    count = 0
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        masks = np.arange(lo, hi, dtype=np.uint64)
        count += int(np.count_nonzero(_covered(masks, red, blue)))
    return count


# ---------------------------------------------------------------------------
# balanced weighted sum
# ---------------------------------------------------------------------------

_balanced_cache: dict[int, np.ndarray] = {}


def _balanced_bits(n: int) -> np.ndarray:
    """(C(n, n/2), n) int8 matrix; row = one balanced colouring, 1 = Blue."""
    bits = _balanced_cache.get(n)
    if bits is None:
        from itertools import combinations
        half = n // 2
        rows = []
        for blues in combinations(range(n), half):
            row = np.zeros(n, dtype=np.int8)
            row[list(blues)] = 1
            rows.append(row)
        bits = np.array(rows, dtype=np.int8)
        _balanced_cache[n] = bits
    return bits


def weighted_balanced_X(h: TwoColouredHypergraph, gamma: float) -> float:
    """Sum of gamma**(total colour agreement weight) over balanced covers.

    The weight of an edge is (#same-colour - #opposite-colour) vertex slots
    under the assignment, counted with multiplicity for multiset edges.  The
    outer sum is compensated (math.fsum).  Needs n even, n <= 20, gamma > 0.
    """
    if h.n % 2 != 0:
        raise ValueError(f"n must be even, got {h.n}")
    if h.n > 20:
        raise ValueError(f"weighted_balanced_X is capped at n=20, got n={h.n}")
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    bits = _balanced_bits(h.n)
    nrows = bits.shape[0]
    w = np.zeros(nrows, dtype=np.int64)
    cov = np.ones(nrows, dtype=bool)
    k = h.k
    for e in h.red_edges:
        idx = [v - 1 for v in e.vertices]
        sb = bits[:, idx].sum(axis=1, dtype=np.int64)  # Blue slots in the edge
        w += k - 2 * sb
        cov &= sb != k
    for e in h.blue_edges:
        idx = [v - 1 for v in e.vertices]
        sb = bits[:, idx].sum(axis=1, dtype=np.int64)
        w += 2 * sb - k
        cov &= sb > 0
    terms = np.power(float(gamma), w[cov].astype(np.float64))
    return math.fsum(terms.tolist())


# ---------------------------------------------------------------------------
# DPLL
# ---------------------------------------------------------------------------

def dpll(h: TwoColouredHypergraph) -> Decision:
    """Backtracking search with unit and pure-vertex propagation.

    Unit rule: an unsatisfied edge with one unassigned vertex and all others
    opposite-coloured forces the last vertex to the edge colour.  Pure rule: a
    vertex whose active edges are all one colour takes that colour (vertices
    with no active edges default Red).  Branching: highest active degree,
    lowest id on ties, Red first.

    Propagation is delta-driven: assignments record edges that drop to one
    unassigned vertex and vertices that lose their last active edge of a
    colour, so the fixpoint loop never rescans the whole instance.
    """
    n = h.n
    everts: list[tuple[int, ...]] = []
    ecol: list[int] = []
    for e in h.red_edges:
        everts.append(tuple(sorted(set(e.vertices))))
        ecol.append(0)
    for e in h.blue_edges:
        everts.append(tuple(sorted(set(e.vertices))))
        ecol.append(1)
    m = len(everts)
    adj: list[tuple[int, ...]] = [()] * (n + 1)
    inc: list[list[int]] = [[] for _ in range(n + 1)]
    for eid, vs in enumerate(everts):
        for v in vs:
            inc[v].append(eid)
    for v in range(1, n + 1):
        adj[v] = tuple(inc[v])

    col = [-1] * (n + 1)
    sat = [False] * m
    unassigned = [len(vs) for vs in everts]
    active_r = [0] * (n + 1)  # active (unsatisfied) red incidences
    active_b = [0] * (n + 1)
    for eid, vs in enumerate(everts):
        acc = active_r if ecol[eid] == 0 else active_b
        for v in vs:
            acc[v] += 1

    trail: list[tuple[int, list[int]]] = []
    units: list[int] = []  # edge ids that may have become unit
    pures: list[int] = []  # vertex ids that may have become pure

    def assign(v: int, c: int) -> bool:
        """Set col[v]=c, update counters; False on an emptied edge."""
        col[v] = c
        newly: list[int] = []
        ok = True
        for eid in adj[v]:
            if sat[eid]:
                unassigned[eid] -= 1
                continue
            if ecol[eid] == c:
                sat[eid] = True
                newly.append(eid)
                unassigned[eid] -= 1
                acc = active_r if c == 0 else active_b
                for u in everts[eid]:
                    if col[u] == -1:
                        acc[u] -= 1
                        if acc[u] == 0:
                            pures.append(u)
            else:
                left = unassigned[eid] - 1
                unassigned[eid] = left
                if left == 1:
                    units.append(eid)
                elif left == 0:
                    ok = False  # edge fully assigned opposite
        trail.append((v, newly))
        return ok

    def undo_to(mark: int):
        while len(trail) > mark:
            v, newly = trail.pop()
            for eid in newly:
                sat[eid] = False
                acc = active_r if ecol[eid] == 0 else active_b
                for u in everts[eid]:
                    if col[u] == -1:
                        acc[u] += 1
            for eid in adj[v]:
                unassigned[eid] += 1
            col[v] = -1
        # pending queue entries refer to the abandoned branch
        units.clear()
        pures.clear()

    def propagate() -> bool:
        """Drain unit and pure queues to fixpoint; False on conflict."""
        while units or pures:
            while units:
                eid = units.pop()
                if sat[eid] or unassigned[eid] != 1:
                    continue
                for u in everts[eid]:
                    if col[u] == -1:
                        if not assign(u, ecol[eid]):
                            return False
                        break
            if pures:
                u = pures.pop()
                if col[u] != -1:
                    continue
                if active_b[u] == 0:
                    if not assign(u, 0):
                        return False
                elif active_r[u] == 0:
                    if not assign(u, 1):
                        return False
        return True

    def search() -> bool:
        mark = len(trail)
        if not propagate():
            undo_to(mark)
            return False
        best, best_deg = 0, -1
        for v in range(1, n + 1):
            if col[v] == -1:
                d = active_r[v] + active_b[v]
                if d > best_deg:
                    best, best_deg = v, d
        if best == 0:
            return True  # everything assigned, no conflict: satisfied
        for c in (0, 1):
            m2 = len(trail)
            if assign(best, c) and search():
                return True
            undo_to(m2)
        undo_to(mark)
        return False

    # seed the queues with conditions present before any assignment
    for eid in range(m):
        if unassigned[eid] == 1:
            units.append(eid)
    for v in range(1, n + 1):
        if active_r[v] == 0 or active_b[v] == 0:
            pures.append(v)

    limit = sys.getrecursionlimit()
    needed = 4 * n + 200
    if needed > limit:
        sys.setrecursionlimit(needed)
    try:
        found = search()
    finally:
        if needed > limit:
            sys.setrecursionlimit(limit)
    if found:
        for v in range(1, n + 1):
            if col[v] == -1:
                col[v] = 0
        return Decision(True, Assignment(tuple(Colour(c) for c in col[1:])))
    return Decision(False)

"""Pair-edge (k=2) decision procedures, witnesses, and structure probes.

The unsatisfiability witness is an odd bicycle: two vertex-disjoint odd
alternating cycles, each with exactly one colour repeat at its anchor, joined
by an alternating path whose end edges mismatch the anchor edge colours.  The
decision procedure inserts vertices in ascending id order, keeps a valid
partial colouring by local flip repairs, and falls back on a strongly
connected component analysis of the implication digraph when both repairs
fail.  That digraph has nodes a_i ("i is Blue") and b_i ("i is Red"); a red
edge {i,j} adds arcs a_i->b_j and a_j->b_i, a blue edge adds b_i->a_j and
b_j->a_i.  The instance is uncoverable exactly when some a_x and b_x share a
component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import (
    Assignment,
    BLUE,
    Colour,
    MODE_SIMPLE,
    OddBicycleCertificate,
    RED,
    TwoColouredHypergraph,
)


@dataclass(frozen=True)
class Decision2:
    """Verdict of decide2.

    An Unsat verdict usually carries a checked witness.  certificate=None on
    an Unsat verdict means no witness of the two-cycle shape could be found;
    degenerate uncoverable instances exist in which every anchored odd
    alternating cycle passes through one shared vertex, so no two of them are
    vertex-disjoint (smallest: red and blue copies of all three edges on
    {1,2,3}).  For n <= 20 the search is exhaustive, making None a proof that
    no witness exists; beyond that it is best-effort.  The verdict itself is
    exact either way.
    """

    satisfiable: bool
    assignment: Optional[Assignment] = None
    certificate: Optional[OddBicycleCertificate] = None


@dataclass(frozen=True)
class GreedyResult:
    """Outcome of monochromatic peeling: an assignment, or the stuck core."""

    assignment: Optional[Assignment]
    core: tuple[int, ...]

    @property
    def satisfiable(self) -> bool:
        return self.assignment is not None


@dataclass(frozen=True)
class AuxiliaryDigraph:
    """Implication digraph on 2n nodes; node 2i-2 is a_i, node 2i-1 is b_i."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    @staticmethod
    def node_a(i: int) -> int:
        return 2 * i - 2

    @staticmethod
    def node_b(i: int) -> int:
        return 2 * i - 1


def _check_pair_instance(h: TwoColouredHypergraph, op: str):
    if h.k != 2:
        raise ValueError(f"{op} handles k=2 instances only, got k={h.k}")
    if h.mode != MODE_SIMPLE:
        raise ValueError(f"{op} requires simple mode instances")


def _pair_arcs(red, blue, limit: Optional[int] = None):
    """Arcs of the implication digraph, restricted to vertices <= limit."""
    arcs = []
    for e in red:
        u, w = e.vertices
        if limit is not None and (u > limit or w > limit):
            continue
        arcs.append((2 * u - 2, 2 * w - 1))
        arcs.append((2 * w - 2, 2 * u - 1))
    for e in blue:
        u, w = e.vertices
        if limit is not None and (u > limit or w > limit):
            continue
        arcs.append((2 * u - 1, 2 * w - 2))
        arcs.append((2 * w - 1, 2 * u - 2))
    return arcs


def build_auxiliary_digraph(h: TwoColouredHypergraph) -> AuxiliaryDigraph:
    _check_pair_instance(h, "build_auxiliary_digraph")
    return AuxiliaryDigraph(h.n, tuple(_pair_arcs(h.red_edges, h.blue_edges)))


def has_even_alternating_cycle(h: TwoColouredHypergraph) -> bool:
    """True iff the implication digraph contains a directed cycle.

    Directed cycles in that digraph correspond to closed alternating walks of
    even length in the pair graph, so this reports whether any alternating
    structure exists at all.
    """
    g = build_auxiliary_digraph(h)
    nn = 2 * g.n
    indeg = [0] * nn
    out: list[list[int]] = [[] for _ in range(nn)]
    for a, b in g.arcs:
        out[a].append(b)
        indeg[b] += 1
    queue = deque(i for i in range(nn) if indeg[i] == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed < nn


def _tarjan(adj: list[list[int]], nn: int) -> list[int]:
    """Iterative Tarjan SCC; component ids are in reverse topological order."""
    index = [-1] * nn
    low = [0] * nn
    on = [False] * nn
    comp = [-1] * nn
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(nn):
        if index[root] != -1:
            continue
        call: list[list[int]] = [[root, 0]]
        while call:
            frame = call[-1]
            v, pi = frame
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on[v] = True
            advanced = False
            out = adj[v]
            while frame[1] < len(out):
                w = out[frame[1]]
                frame[1] += 1
                if index[w] == -1:
                    call.append([w, 0])
                    advanced = True
                    break
                if on[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            call.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if call:
                p = call[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
    return comp


# ---------------------------------------------------------------------------
# certificate checking
# ---------------------------------------------------------------------------

def _pair_sets(h: TwoColouredHypergraph):
    red = set()
    for e in h.red_edges:
        red.add(e.vertices)
    blue = set()
    for e in h.blue_edges:
        blue.add(e.vertices)
    return red, blue


def _avail(red, blue, u: int, w: int) -> tuple[int, ...]:
    if u == w:
        return ()
    key = (u, w) if u < w else (w, u)
    out = []
    if key in red:
        out.append(0)
    if key in blue:
        out.append(1)
    return tuple(out)


def _cycle_anchor_colours(red, blue, seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Anchor edge colours under which seq is a valid anchored odd cycle.

    seq lists the cycle vertices with the anchor first.  Edge i runs from
    seq[i] to seq[i+1] (wrapping); colours must strictly alternate at every
    junction except the anchor, where the two incident edges agree.  Returns
    the feasible anchor colours (empty when the sequence is not a cycle).
    """
    p = len(seq)
    if p < 3 or p % 2 == 0:
        return ()
    for v in seq:
        if not 1 <= v <= n:
            return ()
    if len(set(seq)) != p:
        return ()
    feasible = []
    for c0 in (0, 1):
        # strict alternation from the anchor: edge i has colour c0 XOR (i mod 2);
        # with p odd the last edge equals c0, closing the anchor colour repeat
        ok = True
        for i in range(p):
            if (c0 ^ (i % 2)) not in _avail(red, blue, seq[i], seq[(i + 1) % p]):
                ok = False
                break
        if ok:
            feasible.append(c0)
    return tuple(feasible)


def _path_colour_options(red, blue, seq: tuple[int, ...], n: int) -> tuple[tuple[int, int], ...]:
    """(first_colour, last_colour) pairs under which seq alternates validly."""
    if len(seq) < 2:
        return ()
    for v in seq:
        if not 1 <= v <= n:
            return ()
    out = []
    L = len(seq) - 1
    for c0 in (0, 1):
        ok = True
        for i in range(L):
            want = c0 ^ (i % 2)
            if want not in _avail(red, blue, seq[i], seq[i + 1]):
                ok = False
                break
        if ok:
            out.append((c0, c0 ^ ((L - 1) % 2)))
    return tuple(out)


def check_certificate(h: TwoColouredHypergraph, cert: OddBicycleCertificate) -> bool:
    """Verify every structural invariant of an odd bicycle witness.

    Checks: both cycles are odd alternating cycles in h anchored at their
    first vertex, vertex-disjoint from each other; the path runs between the
    anchors, alternates, and its end edges differ in colour from the
    respective anchor edges.  Path interior vertices may overlap the cycles.
    """
    _check_pair_instance(h, "check_certificate")
    red, blue = _pair_sets(h)
    ca, cb, path = cert.cycle_a, cert.cycle_b, cert.path
    cols_a = _cycle_anchor_colours(red, blue, ca, h.n)
    cols_b = _cycle_anchor_colours(red, blue, cb, h.n)
    if not cols_a or not cols_b:
        return False
    if set(ca) & set(cb):
        return False
    if len(path) < 2 or path[0] != ca[0] or path[-1] != cb[0]:
        return False
    opts = _path_colour_options(red, blue, path, h.n)
    for first, last in opts:
        for a_col in cols_a:
            for b_col in cols_b:
                if first != a_col and last != b_col:
                    return True
    return False


def format_certificate(cert: OddBicycleCertificate) -> str:
    lines = [
        "cycle1: " + " ".join(str(v) for v in cert.cycle_a),
        "cycle2: " + " ".join(str(v) for v in cert.cycle_b),
        "path: " + " ".join(str(v) for v in cert.path),
    ]
    return "\n".join(lines)


def parse_certificate(text: str) -> OddBicycleCertificate:
    parts: dict[str, tuple[int, ...]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"malformed certificate line: {line!r}")
        key, _, rest = line.partition(":")
        key = key.strip()
        if key not in ("cycle1", "cycle2", "path") or key in parts:
            raise ValueError(f"unexpected certificate line: {line!r}")
        try:
            parts[key] = tuple(int(t) for t in rest.split())
        except ValueError:
            raise ValueError(f"non-integer vertex in certificate line: {line!r}") from None
    missing = {"cycle1", "cycle2", "path"} - parts.keys()
    if missing:
        raise ValueError(f"certificate is missing sections: {sorted(missing)}")
    return OddBicycleCertificate(parts["cycle1"], parts["cycle2"], parts["path"])


# ---------------------------------------------------------------------------
# certificate extraction
# ---------------------------------------------------------------------------

def _h_path(adj: list[list[int]], s: int, t: int) -> Optional[list[int]]:
    """Shortest directed path s -> t (node list), or None; s == t needs a cycle."""
    parent = {s: -1}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                if w == t:
                    path = [w]
                    while path[-1] != s:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(w)
    return None


def _walk_of(path: list[int]) -> tuple[list[int], list[int]]:
    """Vertex walk and edge colours of a digraph path; a-source arcs are red."""
    verts = [p // 2 + 1 for p in path]
    cols = [0 if path[i] % 2 == 0 else 1 for i in range(len(path) - 1)]
    return verts, cols


def _reduce_walk(verts: list[int], cols: list[int]):
    """Reduce a closed anchored walk to a simple anchored cycle plus a tail.

    The input walk starts and ends at the same vertex, alternates at every
    interior junction, and its first and last edges share a colour.  Scans for
    the earliest second visit; an odd-length loop is the cycle (tail = the
    prefix walked back to the start), an even-length one is spliced out, which
    preserves alternation and the end-colour invariants.

    Returns (cycle, tail, anchor_colour, base_colour): cycle starts at its
    anchor; tail runs from the anchor back to the walk base; base_colour is
    the colour of the walk's first edge (the tail's edge at the base end).
    """
    base_col = cols[0]
    while True:
        seen = {verts[0]: 0}
        hit = -1
        for j in range(1, len(verts)):
            if verts[j] in seen:
                hit = j
                break
            seen[verts[j]] = j
        assert hit != -1, "closed walk must revisit its base"
        i = seen[verts[hit]]
        if (hit - i) % 2 == 1:
            cycle = verts[i:hit]
            tail = verts[i::-1]
            anchor_col = cols[i]
            assert cols[hit - 1] == anchor_col
            return cycle, tail, anchor_col, base_col
        verts = verts[: i + 1] + verts[hit + 1 :]
        cols = cols[:i] + cols[hit:]


@dataclass
class _Candidate:
    cycle: tuple[int, ...]
    cycle_set: frozenset
    tail: tuple[int, ...]
    anchor_col: int
    base: int
    base_col: int


def _candidate_from_path(path: list[int]) -> _Candidate:
    verts, cols = _walk_of(path)
    cycle, tail, anchor_col, base_col = _reduce_walk(verts, cols)
    return _Candidate(
        cycle=tuple(cycle),
        cycle_set=frozenset(cycle),
        tail=tuple(tail),
        anchor_col=anchor_col,
        base=verts[0],
        base_col=base_col,
    )


def _assemble(
    h: TwoColouredHypergraph,
    adj: list[list[int]],
    ca: _Candidate,
    cb: _Candidate,
) -> Optional[OddBicycleCertificate]:
    if ca.cycle_set & cb.cycle_set:
        return None
    if ca.base == cb.base and ca.base_col != cb.base_col:
        mid = [ca.base]
    else:
        # leave base A by the colour opposite the tail's arrival there, and
        # arrive at base B by the colour opposite its tail edge
        s = 2 * ca.base - 1 if ca.base_col == 0 else 2 * ca.base - 2
        t = 2 * cb.base - 2 if cb.base_col == 0 else 2 * cb.base - 1
        hp = _h_path(adj, s, t)
        if hp is None:
            return None
        mid, _ = _walk_of(hp)
    tail_b = list(cb.tail)
    tail_b.reverse()
    full = list(ca.tail) + mid[1:] + tail_b[1:]
    cert = OddBicycleCertificate(ca.cycle, cb.cycle, tuple(full))
    if check_certificate(h, cert):
        return cert
    return None


def _enumerate_anchored_cycles(red_adj, blue_adj, limit: int) -> list[_Candidate]:
    """All simple anchored odd cycles on vertices <= limit (anchor first).

    Each cycle appears once per anchor vertex and anchor colour; traversal
    direction is deduplicated.  Exponential; used only on small instances.
    """
    out: list[_Candidate] = []
    adj = (red_adj, blue_adj)
    for anchor in range(1, limit + 1):
        for c0 in (0, 1):
            path = [anchor]
            onpath = {anchor}

            def dfs(v: int, nxt: int):
                for w in sorted(adj[nxt][v]):
                    if w > limit:
                        continue
                    if w == anchor:
                        # closure edge colour must repeat the first (anchor);
                        # strict alternation makes that equivalent to odd length
                        if nxt == c0 and len(path) >= 3 and len(path) % 2 == 1 and path[1] < path[-1]:
                            cyc = tuple(path)
                            out.append(
                                _Candidate(
                                    cycle=cyc,
                                    cycle_set=frozenset(cyc),
                                    tail=(anchor,),
                                    anchor_col=c0,
                                    base=anchor,
                                    base_col=c0,
                                )
                            )
                        continue
                    if w in onpath:
                        continue
                    path.append(w)
                    onpath.add(w)
                    dfs(w, 1 - nxt)
                    onpath.discard(w)
                    path.pop()

            dfs(anchor, c0)
    return out


def _extract_certificate(
    h: TwoColouredHypergraph,
    limit: int,
    comp: list[int],
    adj: list[list[int]],
) -> Optional[OddBicycleCertificate]:
    contradicted = [
        x for x in range(1, limit + 1) if comp[2 * x - 2] == comp[2 * x - 1] and comp[2 * x - 2] != -1
    ]
    # the digraph nodes of untouched vertices keep comp >= 0 as singletons,
    # so filter to genuinely contradicted vertices via reachability instead
    cands: dict[tuple[int, int], Optional[_Candidate]] = {}

    def candidate(u: int, side: int) -> Optional[_Candidate]:
        key = (u, side)
        if key not in cands:
            if side == 0:
                path = _h_path(adj, 2 * u - 2, 2 * u - 1)
            else:
                path = _h_path(adj, 2 * u - 1, 2 * u - 2)
            cands[key] = _candidate_from_path(path) if path is not None else None
        return cands[key]

    for x in contradicted:
        ca = candidate(x, 0)
        cb = candidate(x, 1)
        if ca is not None and cb is not None:
            cert = _assemble(h, adj, ca, cb)
            if cert is not None:
                return cert

    # wider search: anchored cycles reachable from any base vertex and side
    pool: list[_Candidate] = []
    for u in range(1, limit + 1):
        for side in (0, 1):
            c = candidate(u, side)
            if c is not None:
                pool.append(c)
    pool.sort(key=lambda c: (len(c.cycle), len(c.tail), c.cycle))
    pool = pool[:400]
    for i in range(len(pool)):
        for j in range(len(pool)):
            if i == j:
                continue
            cert = _assemble(h, adj, pool[i], pool[j])
            if cert is not None:
                return cert

    if limit <= 20:
        red_adj: list[set] = [set() for _ in range(limit + 1)]
        blue_adj: list[set] = [set() for _ in range(limit + 1)]
        for e in h.red_edges:
            u, w = e.vertices
            if u <= limit and w <= limit:
                red_adj[u].add(w)
                red_adj[w].add(u)
        for e in h.blue_edges:
            u, w = e.vertices
            if u <= limit and w <= limit:
                blue_adj[u].add(w)
                blue_adj[w].add(u)
        allc = _enumerate_anchored_cycles(red_adj, blue_adj, limit)
        for ca in allc:
            for cb in allc:
                if ca is cb:
                    continue
                cert = _assemble(h, adj, ca, cb)
                if cert is not None:
                    return cert

    return None


# ---------------------------------------------------------------------------
# the incremental decision procedure
# ---------------------------------------------------------------------------

def decide2(h: TwoColouredHypergraph) -> Decision2:
    """Decide coverability of a pair-edge instance in quadratic time.

    Vertices are inserted in ascending id.  Each insertion first tries the
    two direct colours against the already-placed neighbours, then a flip
    repair for each colour (breadth-first cascade of forced recolourings,
    verified locally and reverted on failure).  If all four fail, the
    implication digraph of the prefix settles it: either a component-order
    assignment replaces the working colouring, or a shared component proves
    the prefix (hence the instance) uncoverable and a witness is extracted.
    """
    _check_pair_instance(h, "decide2")
    n = h.n
    red_back: list[list[int]] = [[] for _ in range(n + 1)]
    blue_back: list[list[int]] = [[] for _ in range(n + 1)]
    for e in h.red_edges:
        u, w = e.vertices
        if u == w:
            raise ValueError(f"self-loop edge {e.vertices} is not allowed")
        red_back[w].append(u)
    for e in h.blue_edges:
        u, w = e.vertices
        if u == w:
            raise ValueError(f"self-loop edge {e.vertices} is not allowed")
        blue_back[w].append(u)

    red_adj: list[list[int]] = [[] for _ in range(n + 1)]
    blue_adj: list[list[int]] = [[] for _ in range(n + 1)]
    sigma = [-1] * (n + 1)

    def repair(v: int, vcol: int) -> bool:
        if vcol == 1:
            start = [u for u in red_adj[v] if sigma[u] == 1]
        else:
            start = [u for u in blue_adj[v] if sigma[u] == 0]
        flipped = set(start)
        queue = deque(flipped)
        while queue:
            u = queue.popleft()
            if sigma[u] == 1:  # Blue flipping Red: its blue edges lose cover
                for w in blue_adj[u]:
                    if sigma[w] == 0 and w not in flipped:
                        flipped.add(w)
                        queue.append(w)
            else:  # Red flipping Blue: its red edges lose cover
                for w in red_adj[u]:
                    if sigma[w] == 1 and w not in flipped:
                        flipped.add(w)
                        queue.append(w)
        for u in flipped:
            sigma[u] ^= 1
        sigma[v] = vcol
        ok = True
        for u in flipped | {v}:
            if sigma[u] == 1:
                for w in red_adj[u]:
                    if sigma[w] == 1:  # red edge, both ends Blue
                        ok = False
                        break
            else:
                for w in blue_adj[u]:
                    if sigma[w] == 0:  # blue edge, both ends Red
                        ok = False
                        break
            if not ok:
                break
        if ok:
            return True
        sigma[v] = -1
        for u in flipped:
            sigma[u] ^= 1
        return False

    for v in range(1, n + 1):
        for u in red_back[v]:
            red_adj[v].append(u)
            red_adj[u].append(v)
        for u in blue_back[v]:
            blue_adj[v].append(u)
            blue_adj[u].append(v)
        if all(sigma[u] == 1 for u in blue_back[v]):
            sigma[v] = 0
            continue
        if all(sigma[u] == 0 for u in red_back[v]):
            sigma[v] = 1
            continue
        if repair(v, 1):
            continue
        if repair(v, 0):
            continue
        arcs = _pair_arcs(h.red_edges, h.blue_edges, limit=v)
        nn = 2 * v
        adj: list[list[int]] = [[] for _ in range(nn)]
        for a, b in arcs:
            adj[a].append(b)
        comp = _tarjan(adj, nn)
        bad = any(comp[2 * x - 2] == comp[2 * x - 1] for x in range(1, v + 1))
        if bad:
            # the prefix is already uncoverable, and the full graph only adds
            # edges, so extract the witness from the full digraph where more
            # cycles are available
            full_arcs = _pair_arcs(h.red_edges, h.blue_edges)
            full_adj: list[list[int]] = [[] for _ in range(2 * n)]
            for a, b in full_arcs:
                full_adj[a].append(b)
            full_comp = _tarjan(full_adj, 2 * n)
            cert = _extract_certificate(h, n, full_comp, full_adj)
            return Decision2(False, None, cert)
        for x in range(1, v + 1):
            sigma[x] = 0 if comp[2 * x - 1] < comp[2 * x - 2] else 1
    assignment = Assignment(tuple(Colour(c) for c in sigma[1:]))
    return Decision2(True, assignment, None)


# ---------------------------------------------------------------------------
# greedy peeling
# ---------------------------------------------------------------------------

def greedy_peel(h: TwoColouredHypergraph) -> GreedyResult:
    """Peel vertices whose remaining edges are monochromatic, FIFO order.

    A peelable vertex takes the colour of its remaining edges (Red when it has
    none); those edges are then satisfied and removed.  Runs to exhaustion;
    the unpeelable remainder is returned as the core (sorted ids).
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
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for eid, vs in enumerate(everts):
        for v in vs:
            adj[v].append(eid)
    active = [True] * len(everts)
    counts = [[0, 0] for _ in range(n + 1)]
    for eid, vs in enumerate(everts):
        for v in vs:
            counts[v][ecol[eid]] += 1
    col = [-1] * (n + 1)

    def peelable(v: int) -> bool:
        return counts[v][0] == 0 or counts[v][1] == 0

    queue = deque(v for v in range(1, n + 1) if peelable(v))
    queued = set(queue)
    while queue:
        v = queue.popleft()
        if col[v] != -1:
            continue
        c = 0 if counts[v][1] == 0 else 1
        col[v] = c
        for eid in adj[v]:
            if not active[eid]:
                continue
            active[eid] = False
            for u in everts[eid]:
                if col[u] == -1:
                    counts[u][ecol[eid]] -= 1
                    if peelable(u) and u not in queued:
                        queued.add(u)
                        queue.append(u)
    core = tuple(v for v in range(1, n + 1) if col[v] == -1)
    if core:
        return GreedyResult(None, core)
    return GreedyResult(Assignment(tuple(Colour(c) for c in col[1:])), ())


# ---------------------------------------------------------------------------
# alternating cycle census
# ---------------------------------------------------------------------------

def count_alternating_cycles(h: TwoColouredHypergraph, length: int) -> int:
    """Count simple alternating cycles on exactly `length` distinct vertices.

    Cycles are counted as cyclic vertex sequences up to rotation and
    reflection.  Even cycles must alternate at every junction; odd cycles must
    alternate everywhere except one anchor junction where the colour repeats.
    A vertex pair carrying both a red and a blue edge supports either colour.
    Exponential in `length`; meant for n around 12 and length up to 10.
    """
    _check_pair_instance(h, "count_alternating_cycles")
    if length < 3 or length > h.n:
        raise ValueError(f"cycle length must be in [3, n], got {length}")
    red, blue = _pair_sets(h)
    n = h.n
    neigh: list[set] = [set() for _ in range(n + 1)]
    for u, w in red:
        neigh[u].add(w)
        neigh[w].add(u)
    for u, w in blue:
        neigh[u].add(w)
        neigh[w].add(u)

    allowed = 1 if length % 2 == 1 else 0
    count = 0

    def avail(u: int, w: int):
        return _avail(red, blue, u, w)

    for s in range(1, n + 1):
        path = [s]
        onpath = {s}

        def dfs(states: set):
            # states: (first_colour, last_colour, anchors_used) over the edges
            # of the current path; a branch dies once no state stays within
            # the anchor budget
            nonlocal count
            v = path[-1]
            depth = len(path)
            if depth == length:
                if path[1] > path[-1]:  # count each direction once
                    return
                for c_close in avail(v, s):
                    for fc, lc, anc in states:
                        total = anc + (1 if c_close == lc else 0) + (1 if c_close == fc else 0)
                        if total == allowed:
                            count += 1
                            return
                return
            for w in sorted(neigh[v]):
                if w <= s or w in onpath:
                    continue
                nstates = set()
                for c in avail(v, w):
                    for fc, lc, anc in states:
                        na = anc + (1 if c == lc else 0)
                        if na <= allowed:
                            nstates.add((fc, c, na))
                if not nstates:
                    continue
                path.append(w)
                onpath.add(w)
                dfs(nstates)
                onpath.discard(w)
                path.pop()

        # seed: the first edge fixes first_colour = last_colour, no anchors yet
        for w in sorted(neigh[s]):
            if w <= s:
                continue
            init = {(c, c, 0) for c in avail(s, w)}
            if not init:
                continue
            path.append(w)
            onpath.add(w)
            dfs(init)
            onpath.discard(w)
            path.pop()

    return count

"""Domain types for two-coloured k-uniform hypergraph instances.

A pair of k-uniform hypergraphs on a shared vertex set 1..n is modelled as a
single TwoColouredHypergraph whose edges carry a colour: red edges come from
the first hypergraph, blue edges from the second.  A vertex 2-colouring is a
"disjoint cover" when every red edge contains at least one Red vertex and
every blue edge at least one Blue vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Sequence

MODE_SIMPLE = "simple"
MODE_REPLACEMENT = "replacement"
MODES = (MODE_SIMPLE, MODE_REPLACEMENT)


class Colour(IntEnum):
    RED = 0
    BLUE = 1

    def flipped(self) -> "Colour":
        return Colour(1 - self.value)

    def letter(self) -> str:
        return "R" if self is Colour.RED else "B"


RED = Colour.RED
BLUE = Colour.BLUE


@dataclass(frozen=True)
class Edge:
    """A k-uniform edge; vertices are kept sorted ascending.

    In replacement mode a vertex may repeat (the edge is a multiset).
    """

    vertices: tuple[int, ...]
    colour: Colour

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class TwoColouredHypergraph:
    n: int
    k: int
    red_edges: tuple[Edge, ...]
    blue_edges: tuple[Edge, ...]
    mode: str = MODE_SIMPLE

    @property
    def m_red(self) -> int:
        return len(self.red_edges)

    @property
    def m_blue(self) -> int:
        return len(self.blue_edges)

    def edges(self) -> Iterable[Edge]:
        yield from self.red_edges
        yield from self.blue_edges


def build(n: int, k: int, red: Iterable[Sequence[int]], blue: Iterable[Sequence[int]],
          mode: str = MODE_SIMPLE) -> TwoColouredHypergraph:
    """Convenience constructor from bare vertex sequences."""
    red_edges = tuple(Edge(tuple(vs), RED) for vs in red)
    blue_edges = tuple(Edge(tuple(vs), BLUE) for vs in blue)
    return TwoColouredHypergraph(n, k, red_edges, blue_edges, mode)


@dataclass(frozen=True)
class Assignment:
    """A vertex 2-colouring; colours[i] is the colour of vertex i+1."""

    colours: tuple[Colour, ...]

    @classmethod
    def from_string(cls, s: str) -> "Assignment":
        table = {"R": RED, "B": BLUE}
        try:
            return cls(tuple(table[ch] for ch in s))
        except KeyError as exc:
            raise ValueError(f"assignment letters must be R or B, got {exc.args[0]!r}")

    @classmethod
    def from_ints(cls, bits: Iterable[int]) -> "Assignment":
        return cls(tuple(Colour(b) for b in bits))

    def __str__(self) -> str:
        return "".join(c.letter() for c in self.colours)

    def __len__(self) -> int:
        return len(self.colours)

    def flipped(self) -> "Assignment":
        return Assignment(tuple(c.flipped() for c in self.colours))


@dataclass(frozen=True)
class ListScheme:
    """List-colouring input: 2n colour lists (left then right), colours in 1..s."""

    n: int
    k: int
    s: int
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OddBicycleCertificate:
    """Witness of unsatisfiability for k=2 instances.

    cycle_a and cycle_b are odd closed alternating vertex sequences whose two
    edges at the anchor (index 0) share a colour; the path runs from cycle_a's
    anchor to cycle_b's anchor and mismatches each anchor's edge colour at the
    corresponding end.
    """

    cycle_a: tuple[int, ...]
    cycle_b: tuple[int, ...]
    path: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = field(default_factory=tuple)


def validate(h: TwoColouredHypergraph) -> ValidationReport:
    """Check structural invariants; returns every violation found."""
    bad: list[str] = []
    if h.n < 0:
        bad.append(f"n must be >= 0, got {h.n}")
    if h.k < 1:
        bad.append(f"k must be >= 1, got {h.k}")
    if h.mode not in MODES:
        bad.append(f"mode must be one of {MODES}, got {h.mode!r}")
    for label, edges, want in (("red", h.red_edges, RED), ("blue", h.blue_edges, BLUE)):
        for i, e in enumerate(edges):
            where = f"{label} edge {i}"
            if e.colour is not want:
                bad.append(f"{where}: colour field {e.colour.name} does not match its list")
            if len(e.vertices) != h.k:
                bad.append(f"{where}: has {len(e.vertices)} vertices, expected k={h.k}")
            if any(v < 1 or v > h.n for v in e.vertices):
                bad.append(f"{where}: vertex out of range 1..{h.n}: {e.vertices}")
            if h.mode == MODE_SIMPLE and len(set(e.vertices)) != len(e.vertices):
                bad.append(f"{where}: repeated vertex in simple mode: {e.vertices}")
            if tuple(sorted(e.vertices)) != e.vertices:
                bad.append(f"{where}: vertices not sorted: {e.vertices}")
    return ValidationReport(not bad, tuple(bad))


def verify_assignment(h: TwoColouredHypergraph, a: Assignment) -> bool:
    """True iff every red edge holds a Red vertex and every blue edge a Blue one."""
    if len(a) != h.n:
        raise ValueError(f"assignment length {len(a)} does not match n={h.n}")
    cols = a.colours
    for e in h.red_edges:
        if all(cols[v - 1] is not RED for v in e.vertices):
            return False
    for e in h.blue_edges:
        if all(cols[v - 1] is not BLUE for v in e.vertices):
            return False
    return True


def canonicalize(h: TwoColouredHypergraph) -> TwoColouredHypergraph:
    """Sort each colour's edge list lexicographically; duplicates are kept."""
    red = tuple(sorted(h.red_edges, key=lambda e: e.vertices))
    blue = tuple(sorted(h.blue_edges, key=lambda e: e.vertices))
    return TwoColouredHypergraph(h.n, h.k, red, blue, h.mode)


def swap_colours(h: TwoColouredHypergraph) -> TwoColouredHypergraph:
    """Exchange the roles of red and blue."""
    red = tuple(Edge(e.vertices, RED) for e in h.blue_edges)
    blue = tuple(Edge(e.vertices, BLUE) for e in h.red_edges)
    return TwoColouredHypergraph(h.n, h.k, red, blue, h.mode)


def relabel(h: TwoColouredHypergraph, perm: Sequence[int]) -> TwoColouredHypergraph:
    """Relabel vertices; perm[i-1] is the new id of vertex i.  Canonicalizes."""
    if sorted(perm) != list(range(1, h.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    red = tuple(Edge(tuple(perm[v - 1] for v in e.vertices), RED) for e in h.red_edges)
    blue = tuple(Edge(tuple(perm[v - 1] for v in e.vertices), BLUE) for e in h.blue_edges)
    return canonicalize(TwoColouredHypergraph(h.n, h.k, red, blue, h.mode))


def with_extra_edge(h: TwoColouredHypergraph, vertices: Sequence[int],
                    colour: Colour) -> TwoColouredHypergraph:
    """A copy of h with one more edge."""
    e = Edge(tuple(vertices), colour)
    if colour is RED:
        return TwoColouredHypergraph(h.n, h.k, h.red_edges + (e,), h.blue_edges, h.mode)
    return TwoColouredHypergraph(h.n, h.k, h.red_edges, h.blue_edges + (e,), h.mode)


# ---------------------------------------------------------------------------
# dch text format
# ---------------------------------------------------------------------------

class DchParseError(ValueError):
    """Raised on malformed dch text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def write_instance(h: TwoColouredHypergraph) -> str:
    """Serialize to the dch text format (canonical edge order, LF endings).

    Replacement-mode instances carry a `c mode replacement` comment line ahead
    of the header; simple-mode output is exactly the bare format.
    """
    hc = canonicalize(h)
    lines = []
    if h.mode == MODE_REPLACEMENT:
        lines.append("c mode replacement")
    lines.append(f"p dch {hc.n} {hc.k} {hc.m_red} {hc.m_blue}")
    for e in hc.red_edges:
        lines.append("r " + " ".join(str(v) for v in e.vertices))
    for e in hc.blue_edges:
        lines.append("b " + " ".join(str(v) for v in e.vertices))
    return "\n".join(lines)


def read_instance(text: str) -> TwoColouredHypergraph:
    """Parse dch text.  Raises DchParseError with a line number on bad input."""
    mode = MODE_SIMPLE
    header = None
    red: list[Edge] = []
    blue: list[Edge] = []
    n = k = want_red = want_blue = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "c":
            if header is not None:
                raise DchParseError(lineno, "comment lines must precede the header")
            if tokens[1:] == ["mode", "replacement"]:
                mode = MODE_REPLACEMENT
            continue
        if tokens[0] == "p":
            if header is not None:
                raise DchParseError(lineno, "duplicate header")
            if len(tokens) != 6 or tokens[1] != "dch":
                raise DchParseError(lineno, f"malformed header: {line!r}")
            try:
                n, k, want_red, want_blue = (int(t) for t in tokens[2:])
            except ValueError:
                raise DchParseError(lineno, f"non-integer header field: {line!r}")
            if n < 0 or k < 1 or want_red < 0 or want_blue < 0:
                raise DchParseError(lineno, f"header values out of range: {line!r}")
            header = (n, k, want_red, want_blue)
            continue
        if tokens[0] not in ("r", "b"):
            raise DchParseError(lineno, f"unknown line kind {tokens[0]!r}")
        if header is None:
            raise DchParseError(lineno, "edge line before header")
        try:
            verts = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise DchParseError(lineno, f"non-integer vertex id: {line!r}")
        if len(verts) != k:
            raise DchParseError(lineno, f"edge has {len(verts)} vertices, expected k={k}")
        if any(v < 1 or v > n for v in verts):
            raise DchParseError(lineno, f"vertex out of range 1..{n}: {line!r}")
        if mode == MODE_SIMPLE and len(set(verts)) != len(verts):
            raise DchParseError(lineno, "repeated vertex in an edge without 'c mode replacement'")
        if tokens[0] == "r":
            red.append(Edge(verts, RED))
        else:
            blue.append(Edge(verts, BLUE))
    if header is None:
        raise DchParseError(1, "missing header")
    if len(red) != want_red or len(blue) != want_blue:
        raise DchParseError(
            1, f"edge count mismatch: header promises {want_red} red / {want_blue} blue, "
               f"found {len(red)} / {len(blue)}")
    return TwoColouredHypergraph(n, k, tuple(red), tuple(blue), mode)

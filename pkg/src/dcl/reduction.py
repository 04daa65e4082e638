"""Bridges between list colouring on K_{n,n}, cover instances, and CNF text.

A list scheme assigns each of the n left and n right vertices a k-subset of a
palette [s].  A proper colouring picks one colour per vertex from its list
with the left and right picks fully distinct.  Such colourings exist exactly
when the pair instance on s vertices (red edges = left lists, blue edges =
right lists) admits disjoint covers: a palette colour is Red when some left
vertex may use it exclusively, Blue for the right side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Assignment,
    Colour,
    ListScheme,
    MODE_SIMPLE,
    TwoColouredHypergraph,
    build,
    canonicalize,
    verify_assignment,
)


@dataclass(frozen=True)
class ListColouring:
    left: tuple[int, ...]
    right: tuple[int, ...]


def lists_to_hypergraphs(scheme: ListScheme) -> TwoColouredHypergraph:
    """Pair instance on the palette: left lists as red edges, right as blue."""
    return build(
        n=scheme.s,
        k=scheme.k,
        red=scheme.left,
        blue=scheme.right,
        mode=MODE_SIMPLE,
    )


def covers_to_colouring(scheme: ListScheme, a: Assignment) -> ListColouring:
    """Turn disjoint covers of the palette into a proper list colouring.

    Each left vertex takes the smallest Red colour on its list, each right
    vertex the smallest Blue one.  Raises ValueError when `a` is not a pair of
    disjoint covers for the scheme.
    """
    h = lists_to_hypergraphs(scheme)
    if len(a) != scheme.s or not verify_assignment(h, a):
        raise ValueError("assignment is not disjoint covers")
    left = []
    for lst in scheme.left:
        left.append(min(c for c in lst if a.colours[c - 1] == Colour.RED))
    right = []
    for lst in scheme.right:
        right.append(min(c for c in lst if a.colours[c - 1] == Colour.BLUE))
    return ListColouring(tuple(left), tuple(right))


def verify_list_colouring(scheme: ListScheme, f: ListColouring) -> bool:
    """True iff f picks from the lists and no colour crosses the two sides."""
    if len(f.left) != scheme.n or len(f.right) != scheme.n:
        return False
    for c, lst in zip(f.left, scheme.left):
        if c not in lst:
            return False
    for c, lst in zip(f.right, scheme.right):
        if c not in lst:
            return False
    return not (set(f.left) & set(f.right))


def export_dimacs(h: TwoColouredHypergraph) -> str:
    """Same-sign CNF: red edges as positive clauses, blue as negative.

    Variable i true means vertex i is Red, so the CNF is satisfiable exactly
    when h admits disjoint covers.  Clauses appear in red-then-blue canonical
    order, LF line endings, no trailing newline.
    """
    hc = canonicalize(h)
    m = hc.m_red + hc.m_blue
    lines = [f"p cnf {hc.n} {m}"]
    for e in hc.red_edges:
        lines.append(" ".join(str(v) for v in e.vertices) + " 0")
    for e in hc.blue_edges:
        lines.append(" ".join(str(-v) for v in e.vertices) + " 0")
    return "\n".join(lines)

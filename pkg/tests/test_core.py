"""Domain types, verification, and the dch text format."""

import random

import pytest

from dcl import (
    Assignment,
    BLUE,
    Colour,
    DchParseError,
    RED,
    build,
    canonicalize,
    read_instance,
    relabel,
    swap_colours,
    validate,
    verify_assignment,
    with_extra_edge,
    write_instance,
)
from dcl.core import Edge, MODE_REPLACEMENT, MODE_SIMPLE


def test_verify_hand_examples():
    h = build(3, 2, red=[(1, 2)], blue=[(2, 3)])
    assert verify_assignment(h, Assignment.from_string("RRB"))
    assert not verify_assignment(h, Assignment.from_string("BBR"))
    empty = build(3, 2, red=[], blue=[])
    assert verify_assignment(empty, Assignment.from_string("BBR"))
    assert verify_assignment(empty, Assignment.from_string("RRR"))


def test_verify_length_mismatch():
    h = build(3, 2, red=[(1, 2)], blue=[])
    with pytest.raises(ValueError):
        verify_assignment(h, Assignment.from_string("RR"))


def test_assignment_string_round_trip():
    a = Assignment.from_string("RBBR")
    assert str(a) == "RBBR"
    assert str(a.flipped()) == "BRRB"
    assert Assignment.from_ints([0, 1, 1, 0]) == a
    with pytest.raises(ValueError):
        Assignment.from_string("RX")


def test_edges_stored_sorted():
    h = build(5, 3, red=[(5, 1, 3)], blue=[])
    assert h.red_edges[0].vertices == (1, 3, 5)


def test_validate_reports_violations():
    ok = build(4, 2, red=[(1, 2)], blue=[(3, 4)])
    assert validate(ok).ok
    bad = build(3, 2, red=[(1, 5)], blue=[(2, 2)])
    rep = validate(bad)
    assert not rep.ok
    joined = " | ".join(rep.violations)
    assert "out of range" in joined
    assert "repeated vertex" in joined
    # replacement mode allows the repeat but not the range violation
    rep2 = validate(build(3, 2, red=[], blue=[(2, 2)], mode=MODE_REPLACEMENT))
    assert rep2.ok


def test_validate_k_mismatch():
    rep = validate(build(4, 3, red=[(1, 2)], blue=[]))
    assert not rep.ok and any("expected k=3" in v for v in rep.violations)


def test_swap_and_relabel_basics():
    h = build(3, 2, red=[(1, 2)], blue=[(2, 3)])
    s = swap_colours(h)
    assert [e.vertices for e in s.red_edges] == [(2, 3)]
    assert [e.vertices for e in s.blue_edges] == [(1, 2)]
    r = relabel(h, [3, 1, 2])  # vertex 1 -> 3, 2 -> 1, 3 -> 2
    assert [e.vertices for e in r.red_edges] == [(1, 3)]
    assert [e.vertices for e in r.blue_edges] == [(1, 2)]
    with pytest.raises(ValueError):
        relabel(h, [1, 1, 2])


def test_with_extra_edge():
    h = build(3, 2, red=[(1, 2)], blue=[])
    h2 = with_extra_edge(h, (1, 3), BLUE)
    assert h2.m_red == 1 and h2.m_blue == 1
    assert h.m_blue == 0  # original untouched


def test_flip_duality_random():
    rng = random.Random(401)
    for _ in range(200):
        n = rng.randint(1, 8)
        red = [tuple(rng.sample(range(1, n + 1), min(2, n))) for _ in range(rng.randint(0, 6))]
        blue = [tuple(rng.sample(range(1, n + 1), min(2, n))) for _ in range(rng.randint(0, 6))]
        h = build(n, min(2, n), red=red, blue=blue)
        a = Assignment.from_ints([rng.randint(0, 1) for _ in range(n)])
        assert verify_assignment(h, a) == verify_assignment(swap_colours(h), a.flipped())


def test_relabel_invariance_random():
    rng = random.Random(402)
    for _ in range(200):
        n = rng.randint(2, 8)
        red = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(rng.randint(0, 6))]
        blue = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(rng.randint(0, 6))]
        h = build(n, 2, red=red, blue=blue)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        a = Assignment.from_ints([rng.randint(0, 1) for _ in range(n)])
        pa = [None] * n
        for i in range(n):
            pa[perm[i] - 1] = a.colours[i]
        assert verify_assignment(h, a) == verify_assignment(relabel(h, perm), Assignment(tuple(pa)))


def test_edge_removal_keeps_covers():
    rng = random.Random(403)
    for _ in range(200):
        n = rng.randint(2, 8)
        red = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(rng.randint(1, 6))]
        blue = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(rng.randint(1, 6))]
        h = build(n, 2, red=red, blue=blue)
        a = Assignment.from_ints([rng.randint(0, 1) for _ in range(n)])
        if not verify_assignment(h, a):
            continue
        h2 = build(n, 2, red=red[1:], blue=blue, mode=h.mode)
        assert verify_assignment(h2, a)


# dch format ----------------------------------------------------------------

CANON = "p dch 3 2 1 1\nr 1 2\nb 2 3"


def test_read_example():
    h = read_instance(CANON)
    assert (h.n, h.k, h.m_red, h.m_blue) == (3, 2, 1, 1)
    assert h.red_edges[0].vertices == (1, 2)
    assert h.blue_edges[0].vertices == (2, 3)
    assert h.mode == MODE_SIMPLE


def test_write_is_canonical_and_round_trips():
    assert write_instance(read_instance(CANON)) == CANON
    h = build(4, 2, red=[(3, 4), (1, 2)], blue=[(2, 4)])
    t = write_instance(h)
    assert t == "p dch 4 2 2 1\nr 1 2\nr 3 4\nb 2 4"
    assert read_instance(t) == canonicalize(h)
    assert not t.endswith("\n")


def test_replacement_mode_round_trip():
    h = build(4, 2, red=[(2, 2)], blue=[(1, 3)], mode=MODE_REPLACEMENT)
    t = write_instance(h)
    assert t.startswith("c mode replacement\n")
    back = read_instance(t)
    assert back.mode == MODE_REPLACEMENT
    assert back == canonicalize(h)


def test_read_errors():
    with pytest.raises(DchParseError, match="mismatch"):
        read_instance("p dch 3 2 2 0\nr 1 2")
    with pytest.raises(DchParseError, match="line 2"):
        read_instance("p dch 3 2 1 0\nr 1 x")
    with pytest.raises(DchParseError):
        read_instance("r 1 2")  # edge before header
    with pytest.raises(DchParseError):
        read_instance("")
    with pytest.raises(DchParseError):
        read_instance("p dch 3 2 1 0\nr 2 2")  # repeat without mode directive
    with pytest.raises(DchParseError):
        read_instance("p dch 3 2 0 1\nb 1 4")  # vertex out of range
    with pytest.raises(DchParseError, match="duplicate header"):
        read_instance("p dch 1 1 0 0\np dch 1 1 0 0")


def test_canonicalize_idempotent_keeps_duplicates():
    h = build(4, 2, red=[(3, 4), (1, 2), (1, 2)], blue=[])
    c = canonicalize(h)
    assert [e.vertices for e in c.red_edges] == [(1, 2), (1, 2), (3, 4)]
    assert canonicalize(c) == c


def test_colour_helpers():
    assert RED.flipped() is BLUE and BLUE.flipped() is RED
    assert Colour.RED.letter() == "R" and Colour.BLUE.letter() == "B"
    assert Edge((2, 1), RED).vertex_set == frozenset({1, 2})

"""
Building, serialising and sampling coloured pair instances
===========================================================

A red/blue pair of k-uniform hypergraphs on [n] admits "disjoint covers"
when some vertex 2-colouring puts a Red vertex in every red edge and a
Blue vertex in every blue edge.  This script walks the instance type,
the .dch text format, and the three seeded sampling models.
"""

from dcl import (
    build, validate, verify_assignment, swap_colours, relabel,
    write_instance, read_instance,
    sample_pair_m, sample_pair_p, sample_lists, edge_sequence,
    derive_seed,
)
from dcl.core import Assignment
from dcl.sampler import SplitMix64, STREAM_RED

# a triangle: two red edges sharing vertex 1, one blue edge opposite
h = build(3, 2, red=[(1, 2), (3, 1)], blue=[(2, 3)])
print("instance:", h.n, "vertices,", h.m_red, "red /", h.m_blue, "blue edges")
print("valid:", validate(h).ok)

# colour vertex 1 Red and vertex 3 Blue; both edges are then covered
sigma = Assignment.from_string("RRB")
print("RRB covers:", verify_assignment(h, sigma))
print("BRB covers:", verify_assignment(h, Assignment.from_string("BRB")))

# the text form round-trips; edges come out canonically sorted
text = write_instance(h)
print()
print(text)
assert read_instance(text) == read_instance(write_instance(read_instance(text)))

# colour swap and relabelling are the two basic symmetries
print()
print("swapped:", [e.vertices for e in swap_colours(h).red_edges], "now red")
print("relabelled 3->1:", write_instance(relabel(h, [3, 2, 1])).splitlines()[1:])

# fixed-count model: exactly m distinct edges per colour, seeded
g1 = sample_pair_m(10, 2, 7, seed=5)
g2 = sample_pair_m(10, 2, 7, seed=5)
assert write_instance(g1) == write_instance(g2)
print()
print("m-model, n=10 m=7:", [e.vertices for e in g1.red_edges])

# the same seed gives a prefix-stable edge stream, so m=4 is a sub-instance
red_stream = SplitMix64(derive_seed(5, STREAM_RED))
prefix = edge_sequence(10, 2, 4, red_stream)
print("first four red draws:", prefix)
assert set(prefix) <= {e.vertices for e in g1.red_edges}

# independent-probability model and list-scheme model
gp = sample_pair_p(10, 2, 0.1, seed=5)
print("p-model, p=0.1:", gp.m_red, "red /", gp.m_blue, "blue edges")
scheme = sample_lists(4, 2, 9, seed=5)
print("list scheme, palette 1..9, left lists:", scheme.left)

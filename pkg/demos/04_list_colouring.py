"""
List colouring of the complete bipartite graph
==============================================

Give each of the n+n vertices of K_{n,n} a list of k colours from a
palette [s].  A proper colouring picks one colour per vertex with the
two sides fully disjoint.  That is exactly the disjoint-covers problem
on the palette: left lists become red edges, right lists blue.
"""

from dcl import (
    ListScheme, lists_to_hypergraphs, covers_to_colouring, verify_list_colouring,
    decide2, export_dimacs, sample_lists, write_instance,
)

scheme = ListScheme(n=2, k=2, s=5,
                    left=((1, 2), (2, 3)),
                    right=((3, 4), (4, 5)))
h = lists_to_hypergraphs(scheme)
print("palette instance:")
print(write_instance(h))

d = decide2(h)
print()
print("coverable:", d.satisfiable, "->", d.assignment)
f = covers_to_colouring(scheme, d.assignment)
print("colouring: left", f.left, "right", f.right)
print("proper:", verify_list_colouring(scheme, f))

# an uncolourable scheme: both sides squeezed into the same two colours
clash = ListScheme(n=2, k=2, s=2,
                   left=((1, 2), (1, 2)),
                   right=((1, 2), (1, 2)))
print()
print("clash scheme coverable:", decide2(lists_to_hypergraphs(clash)).satisfiable)

# the same-sign CNF export: red edges positive clauses, blue negative
print()
print(export_dimacs(h))

# sampled schemes reproduce with the seed
s1 = sample_lists(3, 2, 8, seed=9)
s2 = sample_lists(3, 2, 8, seed=9)
assert s1 == s2
print()
print("sampled scheme:", s1.left, "|", s1.right)

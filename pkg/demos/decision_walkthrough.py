"""The decision pipeline, from symmetry input to per-orbit verdicts.

A holonomy group of graph automorphisms acts on the coherent components. Each
orbit needs its stabilizer's permutation representation, decomposed into
rational irreducibles: the orbit passes when every summand has
multiplicity * real_splits strictly above the orbit's constant c (c = 2 when
the orbit spans an edge or loop of the quotient graph, else 1).
"""

from anosovgraph import (
    VertexPermutation,
    analyze,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    discrete_graph,
)
from anosovgraph.fixtures import four_pair_chain, four_pair_chain_swap, pentagon


def show(title, graph, generators=()):
    report = analyze(graph, generators)
    print(f"== {title}")
    print(report.to_text())


# The one-edge graph gives the Heisenberg algebra: a single complete pair,
# c = 2, dimension 2 < 3. No Anosov automorphism.
show("single edge (Heisenberg)", complete_graph(2))

# The 5-cycle decides no as well: five singleton components.
show("pentagon", pentagon())

# Four pairs in a chain, with the order-2 symmetry swapping outer and inner
# pairs. The outer orbit has c = 1 and passes; the inner orbit sits on a
# quotient edge (c = 2) with 2-dimensional components and fails.
show("four-pair chain with swap", four_pair_chain(), [four_pair_chain_swap()])

# The complete bipartite graph with the part swap passes: one orbit, trivial
# stabilizer, dimension 3 > c = 2.
g = complete_bipartite(3, 3)
swap = VertexPermutation.from_cycles("(a1 b1)(a2 b2)(a3 b3)", g.vertices)
show("bipartite 3+3 with part swap", g, [swap])

# A rotated 4-cycle: the stabilizer of each diagonal acts by a 2-cycle, whose
# trivial summand appears only once -- the criterion fails at (e=1, m=1).
g = cycle_graph(4)
rot = VertexPermutation.from_cycles("(v1 v2 v3 v4)", g.vertices)
show("rotated 4-cycle", g, [rot])

# Non-cyclic stabilizers are out of the supported decomposition and come back
# undecided rather than guessed.
g = discrete_graph(4)
a = VertexPermutation.from_cycles("(v1 v2)", g.vertices)
b = VertexPermutation.from_cycles("(v3 v4)", g.vertices)
show("discrete square with Klein four-group", g, [a, b])

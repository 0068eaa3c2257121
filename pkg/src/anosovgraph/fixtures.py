"""Small reference graphs used throughout the tests and demos.

Each is named for the shape of its quotient graph rather than its origin.
"""

from __future__ import annotations

from .graphs import Graph, VertexPermutation


def loop_end_chain() -> Graph:
    """Two discrete pairs and a complete triple; quotient is a path with one loop.

    Components: {a1,a2} and {c1,c2} discrete, {b1,b2,b3} a triangle. The a-pair
    and c-pair are joined completely, the c-pair and b-triple are joined
    completely, and only the b component carries a loop.
    """
    vertices = ["a1", "a2", "b1", "b2", "b3", "c1", "c2"]
    edges = (
        [(a, c) for a in ("a1", "a2") for c in ("c1", "c2")]
        + [(c, b) for c in ("c1", "c2") for b in ("b1", "b2", "b3")]
        + [("b1", "b2"), ("b1", "b3"), ("b2", "b3")]
    )
    return Graph(vertices, edges)


def all_loops_chain() -> Graph:
    """Same chain as loop_end_chain but with every component complete.

    All three components carry loops; the induced order relates both end
    components to the middle pair {c1,c2}.
    """
    vertices = ["a1", "a2", "b1", "b2", "b3", "c1", "c2"]
    edges = (
        [("a1", "a2"), ("c1", "c2")]
        + [(a, c) for a in ("a1", "a2") for c in ("c1", "c2")]
        + [(c, b) for c in ("c1", "c2") for b in ("b1", "b2", "b3")]
        + [("b1", "b2"), ("b1", "b3"), ("b2", "b3")]
    )
    return Graph(vertices, edges)


def pentagon() -> Graph:
    """The 5-cycle a-b-c-d-e; every vertex is its own coherent component."""
    return Graph(["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])


def four_pair_chain() -> Graph:
    """Four discrete pairs joined in a path a - c - d - b.

    The quotient graph is a 4-vertex path with no loops; the natural order-2
    symmetry swaps the outer pairs and the inner pairs.
    """
    vertices = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"]
    edges = (
        [(a, c) for a in ("a1", "a2") for c in ("c1", "c2")]
        + [(c, d) for c in ("c1", "c2") for d in ("d1", "d2")]
        + [(d, b) for d in ("d1", "d2") for b in ("b1", "b2")]
    )
    return Graph(vertices, edges)


def four_pair_chain_swap() -> VertexPermutation:
    """Order-2 automorphism of four_pair_chain exchanging a/b pairs and c/d pairs."""
    g = four_pair_chain()
    return VertexPermutation.from_cycles("(a1 b1)(a2 b2)(c1 d1)(c2 d2)", g.vertices)

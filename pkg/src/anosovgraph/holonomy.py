"""Holonomy subgroups of graph automorphisms acting on coherent components.

The group is generated by explicit graph automorphisms, closed by
multiplication up to a configurable order bound, and acts on the coherent
components through the induced index permutations. Each orbit carries a
representative, its stabilizer (with a cyclic generator when one exists), and
the constant c recording whether the orbit spans any quotient-graph edge or
loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundExceeded, NotAnAutomorphism
from .exactmat import RationalMatrix, coerce_matrix
from .graphs import (
    CoherentPartition,
    Graph,
    VertexPermutation,
    induced_component_permutation,
    is_graph_automorphism,
)
from .liealg import GraphLieAlgebra, extend_to_algebra

DEFAULT_GROUP_ORDER_BOUND = 10_000


@dataclass(frozen=True)
class StabilizerInfo:
    """Stabilizer of an orbit representative inside the holonomy group."""

    elements: tuple[VertexPermutation, ...]
    cyclic: bool
    generator: VertexPermutation | None

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class OrbitData:
    rep: int
    members: tuple[int, ...]
    c: int
    stabilizer: StabilizerInfo


@dataclass(frozen=True)
class HolonomyAction:
    """A finite permutation holonomy group together with its component action."""

    graph: Graph
    partition: CoherentPartition
    generators: tuple[VertexPermutation, ...]
    elements: tuple[VertexPermutation, ...]
    component_action: dict
    orbits: tuple[OrbitData, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_cyclic(self) -> bool:
        return any(g.order() == self.order for g in self.elements)

    def orbit_of_component(self, index: int) -> OrbitData:
        for orbit in self.orbits:
            if index in orbit.members:
                return orbit
        raise IndexError(f"component index {index} out of range")

    def to_json_dict(self) -> dict:
        return {
            "generators": [g.cycle_string() for g in self.generators],
            "order": self.order,
            "cyclic": self.is_cyclic,
            "orbits": [
                {
                    "rep": o.rep + 1,
                    "members": [i + 1 for i in o.members],
                    "c": o.c,
                    "stabilizer_order": o.stabilizer.order,
                    "stabilizer_cyclic": o.stabilizer.cyclic,
                    "stabilizer_generator": (
                        o.stabilizer.generator.cycle_string() if o.stabilizer.generator else None
                    ),
                }
                for o in self.orbits
            ],
        }


def close_group(
    generators, domain, order_bound: int = DEFAULT_GROUP_ORDER_BOUND
) -> tuple[VertexPermutation, ...]:
    """Multiplicative closure of the generators, in canonical sorted order."""
    identity = VertexPermutation.identity(domain)
    elements = {identity}
    frontier = [identity]
    gens = list(generators)
    while frontier:
        new_frontier = []
        for g in gens:
            for h in frontier:
                prod = g * h
                if prod not in elements:
                    elements.add(prod)
                    new_frontier.append(prod)
                    if len(elements) > order_bound:
                        raise BoundExceeded(
                            f"holonomy group order exceeds the bound {order_bound}",
                            bound=order_bound,
                        )
        frontier = new_frontier
    return tuple(sorted(elements))


def _orbit_c_value(part: CoherentPartition, members: tuple[int, ...]) -> int:
    member_set = set(members)
    if any(part.loops[i] for i in member_set):
        return 2
    for i, j in part.quotient_edges:
        if i in member_set and j in member_set:
            return 2
    return 1


def _stabilizer_info(elements, action, rep: int) -> StabilizerInfo:
    stab = tuple(h for h in elements if action[h][rep] == rep)
    generator = None
    for h in stab:
        if h.order() == len(stab):
            generator = h
            break
    return StabilizerInfo(elements=stab, cyclic=generator is not None, generator=generator)


def build_action(
    graph: Graph,
    part: CoherentPartition,
    generators,
    order_bound: int = DEFAULT_GROUP_ORDER_BOUND,
) -> HolonomyAction:
    """Close the generators, act on components, and collect orbit data.

    Orbits are listed by smallest member index, which is also the chosen
    representative. The stabilizer of the representative is scanned for a
    single generator; when none exists it is flagged non-cyclic and downstream
    verdicts come out undecided instead of guessed.
    """
    generators = tuple(generators)
    for g in generators:
        if not is_graph_automorphism(graph, g):
            raise NotAnAutomorphism(f"{g.cycle_string()} is not an automorphism of the graph")
    elements = close_group(generators, graph.vertices, order_bound)
    action = {h: induced_component_permutation(part, h) for h in elements}

    k = part.num_components
    seen = set()
    orbits = []
    for start in range(k):
        if start in seen:
            continue
        members = sorted({action[h][start] for h in elements})
        seen.update(members)
        orbit = OrbitData(
            rep=start,
            members=tuple(members),
            c=_orbit_c_value(part, tuple(members)),
            stabilizer=_stabilizer_info(elements, action, start),
        )
        orbits.append(orbit)

    action_obj = HolonomyAction(
        graph=graph,
        partition=part,
        generators=generators,
        elements=elements,
        component_action=action,
        orbits=tuple(orbits),
    )
    for orbit in action_obj.orbits:
        if orbit.stabilizer.order * len(orbit.members) != action_obj.order:
            raise AssertionError("orbit-stabilizer identity failed")
    return action_obj


def permutation_matrix(graph: Graph, p: VertexPermutation) -> RationalMatrix:
    """The matrix moving basis vector v to basis vector p(v), in vertex order."""
    n = graph.num_vertices
    rows = [[0] * n for _ in range(n)]
    for v in graph.vertices:
        rows[graph.index(p(v))][graph.index(v)] = 1
    return RationalMatrix(rows)


def restriction_to_component(
    part: CoherentPartition, p: VertexPermutation, comp_index: int
) -> tuple[int, ...]:
    """p restricted to one component, as a position permutation (must stabilize it)."""
    comp = part.components[comp_index]
    pos = {v: i for i, v in enumerate(comp)}
    out = [0] * len(comp)
    for v in comp:
        w = p(v)
        if w not in pos:
            raise ValueError(f"{p.cycle_string()} does not stabilize component {comp_index + 1}")
        out[pos[v]] = pos[w]
    return tuple(out)


def cycle_type_on_component(
    part: CoherentPartition, p: VertexPermutation, comp_index: int
) -> tuple[int, ...]:
    """Multiset (sorted) of cycle lengths of p restricted to the component."""
    perm = restriction_to_component(part, p, comp_index)
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def realizability_eigenvalue_one(alg: GraphLieAlgebra, gen) -> tuple[bool, tuple | None]:
    """Whether a cyclic holonomy generated by `gen` is the holonomy of some
    almost-crystallographic lattice: the extended automorphism needs eigenvalue 1.

    A graph automorphism always qualifies; the sum of all vertex basis vectors
    is a fixed vector and is returned as the witness. A raw matrix on V is
    accepted for diagnostics, in which case the eigenvalue-1 test runs exactly
    on its extension to the whole algebra.
    """
    if isinstance(gen, VertexPermutation):
        if not is_graph_automorphism(alg.graph, gen):
            raise NotAnAutomorphism(f"{gen.cycle_string()} is not a graph automorphism")
        witness = tuple([Fraction(1)] * alg.dim_v + [Fraction(0)] * alg.dim_w)
        return True, witness
    matrix = coerce_matrix(gen)
    extended = extend_to_algebra(alg, matrix)
    delta = extended - RationalMatrix.identity(alg.dimension)
    kernel = delta.kernel_vector()
    if kernel is None:
        return False, None
    return True, kernel

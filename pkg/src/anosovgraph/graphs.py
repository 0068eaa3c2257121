"""Finite simple graphs, the neighborhood-containment relation, coherent components.

The central relation: a vertex ``a`` precedes ``b`` when the open neighborhood
of ``a`` is contained in the closed neighborhood of ``b``. Mutual precedence is
an equivalence; its classes (the coherent components) induce complete or
discrete subgraphs and carry a quotient graph with loops at complete classes.
"""

from __future__ import annotations

import itertools
import json
import re
from math import lcm

from .errors import BoundExceeded, GraphInputError, NotAnAutomorphism, PermutationError, PreconditionViolation


class Graph:
    """Immutable finite simple graph with a canonical (input) vertex order."""

    __slots__ = ("vertices", "edges", "_index", "_adjacency")

    def __init__(self, vertices, edges):
        vertices = tuple(str(v) for v in vertices)
        index = {}
        for v in vertices:
            if v in index:
                raise GraphInputError(f"duplicate vertex label {v!r}")
            index[v] = len(index)
        adjacency = {v: set() for v in vertices}
        canonical = []
        seen = set()
        for e in edges:
            u, v = e
            u, v = str(u), str(v)
            if u not in index:
                raise GraphInputError(f"edge endpoint {u!r} is not a listed vertex")
            if v not in index:
                raise GraphInputError(f"edge endpoint {v!r} is not a listed vertex")
            if u == v:
                raise GraphInputError(f"loop edge at {u!r} (simple graphs only)")
            if index[u] > index[v]:
                u, v = v, u
            if (u, v) in seen:
                raise GraphInputError(f"duplicate edge {u!r}-{v!r}")
            seen.add((u, v))
            canonical.append((u, v))
            adjacency[u].add(v)
            adjacency[v].add(u)
        canonical.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(canonical))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adjacency", {v: frozenset(adjacency[v]) for v in vertices})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphInputError(f"unknown vertex {v!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adjacency.get(u, frozenset())

    def open_neighborhood(self, v: str) -> frozenset:
        self.index(v)
        return self._adjacency[v]

    def closed_neighborhood(self, v: str) -> frozenset:
        return self.open_neighborhood(v) | {v}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


# ---------------------------------------------------------------------------
# Standard constructions


def discrete_graph(n: int, prefix: str = "v") -> Graph:
    return Graph([f"{prefix}{i}" for i in range(1, n + 1)], [])


def complete_graph(n: int, prefix: str = "v") -> Graph:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(labels, list(itertools.combinations(labels, 2)))


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise GraphInputError("cycle graphs need at least 3 vertices")
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = "v") -> Graph:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    left = [f"a{i}" for i in range(1, a + 1)]
    right = [f"b{i}" for i in range(1, b + 1)]
    return Graph(left + right, [(u, v) for u in left for v in right])


# ---------------------------------------------------------------------------
# Parsing


def parse_graph(text: str) -> Graph:
    """Parse a graph from JSON or plain text.

    JSON form: {"vertices": ["a", "b"], "edges": [["a", "b"]]}.
    Text form: one block of vertex names (whitespace-separated), a line "--",
    then one edge "u v" per line.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"invalid JSON: {exc}") from None
        return graph_from_json_dict(data)
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if "--" not in lines:
        raise GraphInputError('text form needs a "--" line between vertices and edges')
    split = lines.index("--")
    vertices = [tok for line in lines[:split] for tok in line.split()]
    edges = []
    for line in lines[split + 1 :]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"edge line must have two vertex names: {line!r}")
        edges.append((parts[0], parts[1]))
    if not vertices:
        raise GraphInputError("no vertices listed")
    return Graph(vertices, edges)


def graph_from_json_dict(data) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphInputError('JSON graph needs "vertices" and "edges" keys')
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphInputError('"vertices" and "edges" must be lists')
    pairs = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphInputError(f"edge must be a pair: {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(vertices, pairs)


# ---------------------------------------------------------------------------
# Vertex permutations


class VertexPermutation:
    """A bijection on a fixed vertex domain, with canonical cycle form."""

    __slots__ = ("domain", "_map", "_key")

    def __init__(self, domain, mapping):
        domain = tuple(domain)
        mapping = dict(mapping)
        if set(mapping) != set(domain) or set(mapping.values()) != set(domain):
            raise PermutationError("mapping is not a bijection on the domain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "_map", mapping)
        object.__setattr__(self, "_key", tuple(mapping[v] for v in domain))

    def __setattr__(self, name, value):
        raise AttributeError("VertexPermutation is immutable")

    @classmethod
    def identity(cls, domain) -> "VertexPermutation":
        domain = tuple(domain)
        return cls(domain, {v: v for v in domain})

    @classmethod
    def from_cycles(cls, text: str, domain) -> "VertexPermutation":
        """Parse cycle notation "(a b)(c d e)"; fixed points omitted; "" is the identity."""
        domain = tuple(domain)
        mapping = {v: v for v in domain}
        body = text.strip()
        if body in ("", "()", "id"):
            return cls(domain, mapping)
        if not re.fullmatch(r"\s*(\([^()]*\)\s*)+", body):
            raise PermutationError(f"malformed cycle notation: {text!r}")
        moved = set()
        for cycle_text in re.findall(r"\(([^()]*)\)", body):
            names = [tok for tok in re.split(r"[,\s]+", cycle_text.strip()) if tok]
            if len(names) < 2:
                continue
            for name in names:
                if name not in mapping:
                    raise PermutationError(f"unknown vertex {name!r} in cycle notation")
                if name in moved:
                    raise PermutationError(f"vertex {name!r} appears twice in cycle notation")
                moved.add(name)
            for i, name in enumerate(names):
                mapping[name] = names[(i + 1) % len(names)]
        return cls(domain, mapping)

    def __call__(self, v: str) -> str:
        try:
            return self._map[v]
        except KeyError:
            raise PermutationError(f"{v!r} is not in the permutation domain") from None

    def __mul__(self, other: "VertexPermutation") -> "VertexPermutation":
        """Composition: (p * q)(x) = p(q(x))."""
        if self.domain != other.domain:
            raise PermutationError("permutations have different domains")
        return VertexPermutation(self.domain, {v: self._map[other._map[v]] for v in self.domain})

    def inverse(self) -> "VertexPermutation":
        return VertexPermutation(self.domain, {w: v for v, w in self._map.items()})

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in self._map.items())

    def cycles(self) -> tuple[tuple[str, ...], ...]:
        """Disjoint cycles, fixed points omitted; each cycle starts at its earliest
        domain element and cycles are ordered by that element."""
        position = {v: i for i, v in enumerate(self.domain)}
        seen = set()
        out = []
        for v in self.domain:
            if v in seen:
                continue
            cycle = [v]
            seen.add(v)
            w = self._map[v]
            while w != v:
                cycle.append(w)
                seen.add(w)
                w = self._map[w]
            if len(cycle) > 1:
                start = min(range(len(cycle)), key=lambda i: position[cycle[i]])
                out.append(tuple(cycle[start:] + cycle[:start]))
        return tuple(out)

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(c) + ")" for c in cycles)

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def image_of(self, vertex_set) -> frozenset:
        return frozenset(self._map[v] for v in vertex_set)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexPermutation)
            and self.domain == other.domain
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash((self.domain, self._key))

    def __lt__(self, other: "VertexPermutation") -> bool:
        return self._key < other._key

    def __repr__(self) -> str:
        return f"VertexPermutation({self.cycle_string()})"


def parse_holonomy_generators(text: str, graph: Graph) -> tuple[VertexPermutation, ...]:
    """Parse a semicolon-separated list of cycle strings, e.g. "(a b)(c d);(e f)"."""
    text = text.strip()
    if not text:
        return ()
    return tuple(
        VertexPermutation.from_cycles(part, graph.vertices) for part in text.split(";")
    )


# ---------------------------------------------------------------------------
# The precedence relation and coherent components


def neighborhoods(graph: Graph, v: str) -> tuple[frozenset, frozenset]:
    """(open, closed) neighborhood of a vertex."""
    return graph.open_neighborhood(v), graph.closed_neighborhood(v)


def prec(graph: Graph, a: str, b: str) -> bool:
    """True when the open neighborhood of a is contained in the closed one of b.

    Reflexive and transitive on every graph.
    """
    graph.index(a)
    graph.index(b)
    return graph.open_neighborhood(a) <= graph.closed_neighborhood(b)


class CoherentPartition:
    """Coherent components of a graph with their induced order and quotient graph.

    Components are enumerated topologically: if component i precedes component
    j in the induced order, then i <= j. Ties keep first-appearance order.
    """

    __slots__ = ("graph", "components", "kinds", "order_pairs", "quotient_edges", "_index_of")

    def __init__(self, graph, components, kinds, order_pairs, quotient_edges):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "components", tuple(tuple(c) for c in components))
        object.__setattr__(self, "kinds", tuple(kinds))
        object.__setattr__(self, "order_pairs", frozenset(order_pairs))
        object.__setattr__(self, "quotient_edges", tuple(sorted(tuple(sorted(e)) for e in quotient_edges)))
        index_of = {}
        for i, comp in enumerate(self.components):
            for v in comp:
                index_of[v] = i
        object.__setattr__(self, "_index_of", index_of)

    def __setattr__(self, name, value):
        raise AttributeError("CoherentPartition is immutable")

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def loops(self) -> tuple[bool, ...]:
        """Loop flags of the quotient graph, derived from component kind."""
        return tuple(kind == "complete" for kind in self.kinds)

    def component_of(self, v: str) -> int:
        try:
            return self._index_of[v]
        except KeyError:
            raise GraphInputError(f"unknown vertex {v!r}") from None

    def component_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def quotient_has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return self.loops[i]
        return tuple(sorted((i, j))) in set(self.quotient_edges)

    def to_json_dict(self) -> dict:
        return {
            "components": [
                {
                    "label": f"lambda_{i + 1}",
                    "vertices": list(comp),
                    "kind": self.kinds[i],
                    "loop": self.loops[i],
                }
                for i, comp in enumerate(self.components)
            ],
            "order": sorted([i + 1, j + 1] for i, j in self.order_pairs),
            "quotient_edges": [[i + 1, j + 1] for i, j in self.quotient_edges],
        }

    def __repr__(self) -> str:
        return f"CoherentPartition({self.component_sizes()})"


def coherent_components(graph: Graph) -> CoherentPartition:
    """Partition by mutual neighborhood containment, with order and quotient graph."""
    verts = graph.vertices
    open_n = {v: graph.open_neighborhood(v) for v in verts}
    closed_n = {v: open_n[v] | {v} for v in verts}

    prec_pairs = {
        (a, b) for a in verts for b in verts if open_n[a] <= closed_n[b]
    }

    # Equivalence classes in first-appearance order.
    raw_components: list[list[str]] = []
    assigned: dict[str, int] = {}
    for v in verts:
        if v in assigned:
            continue
        comp = [v]
        assigned[v] = len(raw_components)
        for w in verts:
            if w not in assigned and (v, w) in prec_pairs and (w, v) in prec_pairs:
                assigned[w] = len(raw_components)
                comp.append(w)
        raw_components.append(comp)

    # Induced strict order between classes, via representatives.
    k = len(raw_components)
    strict = set()
    for i in range(k):
        for j in range(k):
            if i != j and (raw_components[i][0], raw_components[j][0]) in prec_pairs:
                strict.add((i, j))

    # Topological enumeration, ties broken by original index.
    remaining = set(range(k))
    order: list[int] = []
    while remaining:
        ready = [i for i in remaining if not any((j, i) in strict for j in remaining if j != i)]
        nxt = min(ready)
        order.append(nxt)
        remaining.remove(nxt)
    relabel = {old: new for new, old in enumerate(order)}

    components = [tuple(raw_components[old]) for old in order]
    order_pairs = {(relabel[i], relabel[j]) for i, j in strict}

    kinds = []
    for comp in components:
        if len(comp) == 1:
            kinds.append("singleton")
        elif graph.has_edge(comp[0], comp[1]):
            kinds.append("complete")
        else:
            kinds.append("discrete")

    quotient_edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            if graph.has_edge(components[i][0], components[j][0]):
                quotient_edges.add((i, j))

    return CoherentPartition(graph, components, kinds, order_pairs, quotient_edges)


# ---------------------------------------------------------------------------
# Permutation predicates


def _check_domain(graph: Graph, p: VertexPermutation) -> None:
    if set(p.domain) != set(graph.vertices):
        raise PermutationError("permutation domain does not match the graph's vertices")


def is_graph_automorphism(graph: Graph, p: VertexPermutation) -> bool:
    """True when p maps edges onto edges (bijectively, since p is a bijection)."""
    _check_domain(graph, p)
    return all(graph.has_edge(p(u), p(v)) for u, v in graph.edges)


def preserves_prec(graph: Graph, p: VertexPermutation) -> bool:
    """True when a prec b implies p(a) prec p(b) for all vertex pairs."""
    _check_domain(graph, p)
    verts = graph.vertices
    open_n = {v: graph.open_neighborhood(v) for v in verts}
    closed_n = {v: open_n[v] | {v} for v in verts}
    for a in verts:
        for b in verts:
            if open_n[a] <= closed_n[b] and not open_n[p(a)] <= closed_n[p(b)]:
                return False
    return True


def induced_component_permutation(part: CoherentPartition, p: VertexPermutation) -> tuple[int, ...]:
    """The permutation of component indices induced by a precedence-preserving p."""
    _check_domain(part.graph, p)
    comp_sets = [frozenset(c) for c in part.components]
    lookup = {s: i for i, s in enumerate(comp_sets)}
    result = []
    for i, comp in enumerate(comp_sets):
        image = p.image_of(comp)
        j = lookup.get(image)
        if j is None:
            raise PreconditionViolation(
                f"permutation does not map component {i + 1} onto a component"
            )
        result.append(j)
    return tuple(result)


def component_order_group(part: CoherentPartition, max_components: int = 8) -> list[tuple[int, ...]]:
    """All permutations of the components preserving the induced order (brute force)."""
    k = part.num_components
    if k > max_components:
        raise BoundExceeded(
            f"{k} components exceed the brute-force bound {max_components}", bound=max_components
        )
    out = []
    for perm in itertools.permutations(range(k)):
        if all((perm[i], perm[j]) in part.order_pairs for i, j in part.order_pairs):
            out.append(perm)
    return out


def automorphism_or_raise(graph: Graph, p: VertexPermutation) -> VertexPermutation:
    if not is_graph_automorphism(graph, p):
        raise NotAnAutomorphism(f"{p.cycle_string()} is not a graph automorphism")
    return p

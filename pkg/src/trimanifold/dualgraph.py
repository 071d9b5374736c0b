"""Facet adjacency graphs of pure complexes.

Nodes are dense ids 0..nu-1 in canonical facet order; an edge joins two
facets exactly when they share a codimension-one face.  The graph keeps
the facet table around so callers can translate ids back to vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .complexes import Face, SimplicialComplex, _ridge_incidence, is_pure
from .errors import PreconditionError, UnknownNodeError

__all__ = [
    "DualGraph",
    "dual_graph",
    "is_connected",
    "is_tree",
    "is_cycle",
    "is_two_connected",
    "components_minus",
    "high_degree_set",
    "vertex_facet_subgraph",
    "to_dot",
]


@dataclass(frozen=True)
class DualGraph:
    """Undirected simple graph over facet ids, with the facet lookup table."""

    facets: tuple[Face, ...]
    edges: frozenset  # frozenset of (i, j) pairs with i < j

    @property
    def num_nodes(self) -> int:
        return len(self.facets)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(n)) for n in nbrs)

    def degree(self, i: int) -> int:
        self._check_node(i)
        return len(self.adjacency[i])

    def induced(self, ids) -> "DualGraph":
        """Subgraph induced on the given node ids, renumbered densely in id order."""
        ids = sorted(set(ids))
        for i in ids:
            self._check_node(i)
        pos = {i: p for p, i in enumerate(ids)}
        keep = frozenset(
            (pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos
        )
        return DualGraph(tuple(self.facets[i] for i in ids), keep)

    def _check_node(self, i: int) -> None:
        if not isinstance(i, int) or i < 0 or i >= self.num_nodes:
            raise UnknownNodeError(f"node {i!r} outside 0..{self.num_nodes - 1}")


def dual_graph(x: SimplicialComplex) -> DualGraph:
    """Facet adjacency graph of a pure complex."""
    if not is_pure(x):
        raise PreconditionError("dual graph requires a pure complex")
    edges: set[tuple[int, int]] = set()
    for ids in _ridge_incidence(x).values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.add((ids[a], ids[b]))
    return DualGraph(x.facets, frozenset(edges))


def is_connected(g: DualGraph) -> bool:
    """True when the graph is non-empty and every node is reachable from node 0."""
    if g.num_nodes == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.num_nodes


def is_tree(g: DualGraph) -> bool:
    return is_connected(g) and g.num_edges == g.num_nodes - 1


def is_cycle(g: DualGraph) -> bool:
    """Connected and 2-regular; the smallest cycle is a triangle."""
    return (
        g.num_nodes >= 3
        and is_connected(g)
        and all(len(n) == 2 for n in g.adjacency)
    )


def is_two_connected(g: DualGraph) -> bool:
    """At least three nodes, connected, and no articulation node."""
    if g.num_nodes < 3 or not is_connected(g):
        return False
    # iterative depth-first search computing discovery and low times
    disc = [-1] * g.num_nodes
    low = [0] * g.num_nodes
    parent = [-1] * g.num_nodes
    child_of_root = 0
    timer = 0
    stack: list[tuple[int, int]] = [(0, 0)]
    order: list[int] = []
    while stack:
        v, idx = stack.pop()
        if idx == 0:
            disc[v] = low[v] = timer
            timer += 1
            order.append(v)
        if idx < len(g.adjacency[v]):
            stack.append((v, idx + 1))
            w = g.adjacency[v][idx]
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    child_of_root += 1
                stack.append((w, 0))
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
    if child_of_root > 1:
        return False
    for v in reversed(order):
        p = parent[v]
        if p != -1:
            low[p] = min(low[p], low[v])
            if p != 0 and low[v] >= disc[p]:
                return False
    return True


def components_minus(g: DualGraph, removed) -> list:
    """Connected components after deleting a node set.

    Each component is sorted; the component list is ordered by smallest
    member, so the output is deterministic.
    """
    removed = set(removed)
    for i in removed:
        g._check_node(i)
    seen: set[int] = set(removed)
    comps: list[list[int]] = []
    for start in range(g.num_nodes):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            for w in g.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return sorted(comps, key=lambda c: c[0])


def high_degree_set(g: DualGraph) -> frozenset:
    """Nodes of degree three or more."""
    return frozenset(i for i in range(g.num_nodes) if len(g.adjacency[i]) >= 3)


def vertex_facet_subgraph(x: SimplicialComplex, v: int) -> DualGraph:
    """Subgraph of the facet graph induced on the facets containing ``v``."""
    g = dual_graph(x)
    ids = [i for i, f in enumerate(g.facets) if v in f]
    if not ids:
        raise UnknownNodeError(f"vertex {v} occurs in no facet")
    return g.induced(ids)


def to_dot(g: DualGraph, name: str = "dual") -> str:
    """Graphviz text for eyeballing; not load-bearing anywhere."""
    lines = [f"graph {name} {{"]
    for i, facet in enumerate(g.facets):
        label = " ".join(str(v) for v in facet)
        lines.append(f'  {i} [label="{label}"];')
    for i, j in sorted(g.edges):
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

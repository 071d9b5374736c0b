"""Tightness arithmetic, structural lemma checks, and vertex-order recovery.

The counting results verified here tie the facet graph of a neighborly
complex with stacked-ball vertex links to its face numbers, and the
tight-neighborliness equation

    (f0 - d - 1)(f0 - d - 2) = beta1 * (d + 1)(d + 2)

to the first mod-2 Betti number.  Lemma checks are registered under
short opaque ids; each one either evaluates its claim exactly or raises
when the input misses the claim's hypothesis, never passing vacuously.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import comb, isqrt

from .complexes import (
    SimplicialComplex,
    f_vector,
    faces_of_dim,
    is_neighborly,
    is_pure,
    link,
)
from .dualgraph import (
    DualGraph,
    components_minus,
    dual_graph,
    high_degree_set,
    is_cycle,
    is_two_connected,
)
from .errors import (
    LemmaHypothesisError,
    PreconditionError,
    ReconstructionFailure,
    UnknownLemmaError,
)
from .homology import beta1_z2
from .walkup import class_membership, kuehnel_solid

__all__ = [
    "ParameterTriple",
    "LemmaReport",
    "TightnessReport",
    "VertexBijection",
    "tight_neighborly_check",
    "parameter_solutions",
    "corollary_bound_check",
    "is_critical",
    "is_cover",
    "verify_lemma",
    "LEMMA_IDS",
    "are_isomorphic",
    "uniqueness_reconstruction",
    "theorem_argument_audit",
    "bound_chain_audit",
    "render_report",
]


@dataclass(frozen=True)
class ParameterTriple:
    """One solution of the tight-neighborliness equation."""

    beta1: int
    d: int
    f0: int


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one registered structural check."""

    lemma_id: str
    holds: bool
    witness: dict | None = None


@dataclass(frozen=True)
class TightnessReport:
    """Both sides of the tightness inequality for one manifold."""

    satisfies_inequality: bool
    is_equality: bool
    lhs: int
    rhs: int
    beta1: int


@dataclass(frozen=True)
class VertexBijection:
    """Injective vertex map given as (source, image) pairs sorted by source."""

    pairs: tuple

    @cached_property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def apply(self, face) -> tuple:
        return tuple(sorted(self.mapping[v] for v in face))

    def inverse(self) -> "VertexBijection":
        return VertexBijection(tuple(sorted((b, a) for a, b in self.pairs)))

    def maps_complex(self, x: SimplicialComplex, y: SimplicialComplex) -> bool:
        """True when the map carries the facet set of ``x`` onto that of ``y``."""
        domain = self.mapping
        if any(v not in domain for v in x.vertices):
            return False
        return {self.apply(f) for f in x.facets} == set(y.facets)


def _is_connected_complex(x: SimplicialComplex) -> bool:
    # union-find over vertices, merged inside each facet
    parent: dict[int, int] = {v: v for v in x.vertices}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in x.facets:
        for v in f[1:]:
            parent[find(v)] = find(f[0])
    roots = {find(v) for v in x.vertices}
    return len(roots) == 1


def tight_neighborly_check(m: SimplicialComplex) -> TightnessReport:
    """Evaluate the tightness inequality on a connected complex.

    The left side is C(f0-d-1, 2), the right side C(d+2, 2) * beta1 with
    beta1 taken mod 2.  Equality is what the literature calls tight
    neighborly.
    """
    if not m.facets:
        raise PreconditionError("empty input")
    if not _is_connected_complex(m):
        raise PreconditionError("input must be connected")
    d = m.dim
    f0 = m.num_vertices
    beta1 = beta1_z2(m)
    lhs = comb(max(f0 - d - 1, 0), 2)
    rhs = comb(d + 2, 2) * beta1
    return TightnessReport(lhs >= rhs, lhs == rhs, lhs, rhs, beta1)


def parameter_solutions(beta1: int, d_max: int) -> list:
    """All (beta1, d, f0) with 3 <= d <= d_max solving the tightness equation.

    For each d the equation pins m = f0 - d - 2 through m(m+1) =
    beta1 (d+1)(d+2), solved exactly with an integer square root; at most
    one f0 exists per d.
    """
    if beta1 < 1:
        raise ValueError(f"beta1 must be positive, got {beta1}")
    if d_max < 3:
        raise ValueError(f"d_max must be at least 3, got {d_max}")
    out = []
    for d in range(3, d_max + 1):
        product = beta1 * (d + 1) * (d + 2)
        m = (isqrt(4 * product + 1) - 1) // 2
        if m * (m + 1) == product:
            out.append(ParameterTriple(beta1, d, m + d + 2))
    return out


def corollary_bound_check(n: int, d: int) -> bool:
    """Whether C(n-d-1, 2) >= d^2 + 3d + 3; meaningful for d >= 4."""
    if d < 4:
        raise ValueError(f"d must be at least 4, got {d}")
    return comb(max(n - d - 1, 0), 2) >= d * d + 3 * d + 3


def is_critical(m: SimplicialComplex, facet_ids) -> bool:
    """Every component left after deleting the facet set is small.

    Small means fewer than f0 - d nodes, the facet count of a single
    vertex star in the neighborly stacked-link setting.
    """
    g = dual_graph(m)
    bound = m.num_vertices - m.dim
    return all(len(c) < bound for c in components_minus(g, facet_ids))


def is_cover(m: SimplicialComplex, facet_ids) -> bool:
    """True when the chosen facets jointly contain every vertex."""
    g = dual_graph(m)
    chosen: set[int] = set()
    for i in facet_ids:
        g._check_node(i)
        chosen.update(g.facets[i])
    return chosen == set(m.vertices)


# --- lemma registry ---------------------------------------------------------

LEMMA_IDS = ("2.2", "2.3", "2.4", "2.5", "2.8", "2.9")


def normalize_lemma_id(lemma_id: str) -> str:
    lid = lemma_id.strip()
    if lid.startswith("lemma-"):
        lid = lid[len("lemma-"):]
    if lid not in LEMMA_IDS:
        raise UnknownLemmaError(f"unknown lemma id {lemma_id!r}")
    return lid


def _require_neighborly_kbar(m: SimplicialComplex):
    if not m.facets or not is_pure(m):
        raise LemmaHypothesisError("input must be a non-empty pure complex")
    if not is_neighborly(m, 2):
        raise LemmaHypothesisError("input must be 2-neighborly")
    report = class_membership(m)
    if not report.in_class_kbar:
        raise LemmaHypothesisError(
            f"vertex link at {report.failing_vertex} is not a stacked ball"
        )
    g = dual_graph(m)
    if g.num_nodes < 2:
        raise LemmaHypothesisError("single-facet ball is out of scope")
    return g


def _check_two_connected(m, g, d, n) -> LemmaReport:
    if is_two_connected(g):
        return LemmaReport("2.2", True)
    cut = None
    for i in range(g.num_nodes):
        if len(components_minus(g, {i})) > 1:
            cut = i
            break
    return LemmaReport("2.2", False, {"articulation_node": cut, "nu": g.num_nodes})


def _check_vertex_trees(m, g, d, n) -> LemmaReport:
    from .dualgraph import is_tree

    expected = n - d
    for v in m.vertices:
        ids = [i for i, f in enumerate(g.facets) if v in f]
        sub = g.induced(ids)
        if len(ids) != expected or not is_tree(sub):
            return LemmaReport(
                "2.3",
                False,
                {
                    "vertex": v,
                    "num_facets": len(ids),
                    "expected": expected,
                    "is_tree": is_tree(sub),
                },
            )
    return LemmaReport("2.3", True)


def _check_counts(m, g, d, n) -> LemmaReport:
    nu_ok = g.num_nodes * (d + 1) == n * (n - d)
    eps_ok = g.num_edges * d == n * (n - d - 1)
    if nu_ok and eps_ok:
        return LemmaReport("2.4", True)
    return LemmaReport(
        "2.4",
        False,
        {"nu": g.num_nodes, "eps": g.num_edges, "n": n, "d": d},
    )


def _check_cycle_bound(m, g, d, n) -> LemmaReport:
    ok = n >= 2 * d + 1 and ((n == 2 * d + 1) == is_cycle(g))
    if ok:
        return LemmaReport("2.5", True)
    return LemmaReport("2.5", False, {"n": n, "d": d, "cycle": is_cycle(g)})


def _chain_paths(g: DualGraph):
    """Directed simple paths whose internal nodes have degree at most two."""
    deg = [len(a) for a in g.adjacency]
    paths = []
    for u0 in range(g.num_nodes):
        for u1 in g.adjacency[u0]:
            path = [u0, u1]
            paths.append(tuple(path))
            while deg[path[-1]] <= 2:
                options = [w for w in g.adjacency[path[-1]] if w != path[-2]]
                if not options or options[0] in path:
                    break
                path.append(options[0])
                paths.append(tuple(path))
    return paths


def _check_path_lemma(m, g, d, n) -> LemmaReport:
    if n <= 2 * d + 1:
        raise LemmaHypothesisError(
            f"path lemma needs f0 > {2 * d + 1}, instance has f0 = {n}"
        )
    for path in _chain_paths(g):
        dropped = []
        for prev, cur in zip(path, path[1:]):
            diff = set(g.facets[prev]) - set(g.facets[cur])
            if len(diff) != 1:
                raise AssertionError("adjacent facets differ in one vertex")
            dropped.append(diff.pop())
        r = len(path) - 1
        witness = {"path": list(path), "dropped": dropped}
        if len(set(dropped)) != len(dropped):
            witness["clause"] = "repeated dropped vertex"
            return LemmaReport("2.8", False, witness)
        if not all(x in g.facets[path[0]] for x in dropped):
            witness["clause"] = "dropped vertex outside first facet"
            return LemmaReport("2.8", False, witness)
        if r > d + 1:
            witness["clause"] = "path too long"
            return LemmaReport("2.8", False, witness)
    return LemmaReport("2.8", True)


def _check_degree_three_cover(m, g, d, n) -> LemmaReport:
    if d < 4:
        raise LemmaHypothesisError(f"cover corollary needs dimension >= 4, got {d}")
    if n <= 2 * d + 1:
        raise LemmaHypothesisError(
            f"cover corollary needs f0 > {2 * d + 1}, instance has f0 = {n}"
        )
    t = high_degree_set(g)
    if is_cover(m, t):
        return LemmaReport("2.9", True)
    return LemmaReport("2.9", False, {"t": sorted(t)})


_LEMMA_CHECKS = {
    "2.2": _check_two_connected,
    "2.3": _check_vertex_trees,
    "2.4": _check_counts,
    "2.5": _check_cycle_bound,
    "2.8": _check_path_lemma,
    "2.9": _check_degree_three_cover,
}


def verify_lemma(m: SimplicialComplex, lemma_id: str) -> LemmaReport:
    """Run one registered structural check on a neighborly complex with
    stacked-ball vertex links.

    The registry covers: facet-graph 2-connectivity ("2.2"), per-vertex
    facet trees of size f0-d ("2.3"), the node and edge count formulas
    ("2.4"), the minimal-f0 cycle characterisation ("2.5"), the bounded
    chain-path property ("2.8"), and the degree-three cover ("2.9").
    Inputs outside a check's hypothesis raise
    :class:`LemmaHypothesisError`.
    """
    lid = normalize_lemma_id(lemma_id)
    g = _require_neighborly_kbar(m)
    return _LEMMA_CHECKS[lid](m, g, m.dim, m.num_vertices)


# --- isomorphism ------------------------------------------------------------


def _pair_counts(x: SimplicialComplex) -> dict:
    counts: dict[tuple, int] = {}
    for f in x.facets:
        for i in range(len(f)):
            for j in range(i + 1, len(f)):
                key = (f[i], f[j])
                counts[key] = counts.get(key, 0) + 1
    return counts


def _vertex_signatures(x: SimplicialComplex) -> dict:
    pc = _pair_counts(x)
    fdeg = {v: 0 for v in x.vertices}
    for f in x.facets:
        for v in f:
            fdeg[v] += 1
    profile: dict[int, list] = {v: [] for v in x.vertices}
    for (a, b), c in pc.items():
        profile[a].append(c)
        profile[b].append(c)
    sigs = {}
    for v in x.vertices:
        lk = f_vector(link(x, (v,))).counts
        sigs[v] = (fdeg[v], tuple(sorted(profile[v])), lk)
    return sigs


def are_isomorphic(x: SimplicialComplex, y: SimplicialComplex):
    """Search for a facet-preserving vertex bijection.

    Returns a :class:`VertexBijection` or ``None``.  Candidate images are
    restricted by per-vertex invariants (facet degree, shared-facet pair
    profile, link face counts) and the search assigns most-constrained
    vertices first, checking pair profiles incrementally; the full facet
    correspondence is confirmed at the leaves.  Deterministic for fixed
    inputs.
    """
    if f_vector(x) != f_vector(y):
        return None
    sx = _vertex_signatures(x)
    sy = _vertex_signatures(y)
    if sorted(sx.values()) != sorted(sy.values()):
        return None
    by_sig: dict = {}
    for w, s in sy.items():
        by_sig.setdefault(s, []).append(w)
    px = _pair_counts(x)
    py = _pair_counts(y)

    def pair(counts, a, b):
        if a > b:
            a, b = b, a
        return counts.get((a, b), 0)

    order = sorted(x.vertices, key=lambda v: (len(by_sig.get(sx[v], ())), v))
    assigned: dict[int, int] = {}
    used: set[int] = set()
    yfacets = set(y.facets)

    def extend(i: int):
        if i == len(order):
            image = {
                tuple(sorted(assigned[v] for v in f)) for f in x.facets
            }
            return image == yfacets
        v = order[i]
        for w in by_sig.get(sx[v], ()):
            if w in used:
                continue
            if any(
                pair(px, v, u) != pair(py, w, assigned[u]) for u in assigned
            ):
                continue
            assigned[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del assigned[v]
            used.discard(w)
        return False

    if extend(0):
        return VertexBijection(tuple(sorted(assigned.items())))
    return None


# --- vertex-order reconstruction -------------------------------------------


def uniqueness_reconstruction(mbar: SimplicialComplex) -> VertexBijection:
    """Recover the cyclic vertex order of a relabelled cyclic solid.

    The facet graph must be one cycle; each vertex must lie in a
    consecutive arc of facets; arcs must be pairwise distinct and claim
    every cycle position.  The returned bijection carries ``mbar`` onto
    :func:`~trimanifold.walkup.kuehnel_solid` of the matching dimension.
    Any failed stage raises :class:`ReconstructionFailure` naming it.
    """
    if not mbar.facets or not is_pure(mbar):
        raise ReconstructionFailure("purity", "input is not a non-empty pure complex")
    big_d = mbar.dim
    n = mbar.num_vertices
    g = dual_graph(mbar)
    if not is_cycle(g):
        raise ReconstructionFailure("cycle-check", "facet graph is not a cycle")
    if g.num_nodes != n or n != 2 * big_d + 1:
        raise ReconstructionFailure(
            "size-check",
            f"need nu = f0 = {2 * big_d + 1}, got nu = {g.num_nodes}, f0 = {n}",
        )
    # walk the cycle from node 0 toward its smaller neighbour
    ring = [0, min(g.adjacency[0])]
    while len(ring) < g.num_nodes:
        nxt = [w for w in g.adjacency[ring[-1]] if w != ring[-2]]
        ring.append(nxt[0])
    position = {node: p for p, node in enumerate(ring)}
    nu = g.num_nodes
    arc_len = big_d + 1
    end_of: dict[int, int] = {}
    for v in mbar.vertices:
        positions = {position[i] for i, f in enumerate(g.facets) if v in f}
        if len(positions) != arc_len:
            raise ReconstructionFailure(
                "arc-check",
                f"vertex {v} lies in {len(positions)} facets, expected {arc_len}",
            )
        starts = [
            s for s in positions
            if all((s + k) % nu in positions for k in range(arc_len))
        ]
        if len(starts) != 1:
            raise ReconstructionFailure(
                "arc-check", f"facets of vertex {v} are not one consecutive arc"
            )
        end_of[v] = (starts[0] + arc_len - 1) % nu
    if len(set(end_of.values())) != n:
        raise ReconstructionFailure(
            "distinctness", "two vertices occupy the same facet arc"
        )
    solid = kuehnel_solid(big_d - 1)
    bijection = VertexBijection(tuple(sorted(end_of.items())))
    if not bijection.maps_complex(mbar, solid):
        raise ReconstructionFailure(
            "facet-check", "recovered order does not map facets onto the solid"
        )
    return bijection


# --- proof-chain audit ------------------------------------------------------


def bound_chain_audit(
    g: DualGraph, n: int, d: int, beta1: int, cover_ok: bool | None = None
) -> LemmaReport:
    """Evaluate the counting chain behind the tightness lower bound.

    ``d`` is the manifold dimension, ``n`` its vertex count and ``g`` the
    facet graph of the associated solid.  The chain: the degree sum gives
    sum(deg - 2) = 2(eps - nu), bounding the set T of degree->=3 nodes;
    when T covers, n <= |T| (d+2); the tightness equation then forces n
    upward, and for beta1 >= 2 past the bound, which is the intended
    contradiction.  ``holds`` means the instance behaved exactly as the
    argument predicts for its beta1.
    """
    degrees = [len(a) for a in g.adjacency]
    nu = g.num_nodes
    eps = g.num_edges
    t = high_degree_set(g)
    identity_ok = sum(deg - 2 for deg in degrees) == 2 * (eps - nu)
    t_bound_ok = len(t) <= 2 * (eps - nu)
    beta_graph = eps - nu + 1
    graph_matches = beta_graph == beta1
    witness = {
        "nu": nu,
        "eps": eps,
        "t_size": len(t),
        "beta1_from_graph": beta_graph,
    }
    if beta1 == 1:
        degenerate_ok = (n == 2 * (d + 1) + 1) == is_cycle(g)
        equation_ok = (n - d - 1) * (n - d - 2) == beta1 * (d + 1) * (d + 2)
        witness["degenerate_cycle"] = degenerate_ok
        witness["equation"] = equation_ok
        holds = identity_ok and t_bound_ok and graph_matches and degenerate_ok and equation_ok
        if cover_ok is not None:
            holds = holds and cover_ok
        return LemmaReport("tightness-chain", holds, witness)
    bound_n = 2 * (beta1 - 1) * (d + 2)
    target = beta1 * (d + 1) * (d + 2)
    m = d + 3
    while (m - d - 1) * (m - d - 2) < target:
        m += 1
    witness["n_bound_from_chain"] = bound_n
    witness["n_min_from_equation"] = m
    witness["contradiction"] = m > bound_n
    holds = identity_ok and t_bound_ok and graph_matches and (m > bound_n)
    if cover_ok is not None:
        holds = holds and cover_ok
    return LemmaReport("tightness-chain", holds, witness)


def theorem_argument_audit(mbar: SimplicialComplex, beta1: int) -> LemmaReport:
    """Run :func:`bound_chain_audit` on a concrete solid.

    The cover premise is only checkable above the minimal vertex count,
    so it is evaluated exactly when f0 exceeds 2(d+1)+1.
    """
    if not mbar.facets or not is_pure(mbar):
        raise PreconditionError("audit requires a non-empty pure complex")
    g = dual_graph(mbar)
    d = mbar.dim - 1
    n = mbar.num_vertices
    cover_ok = None
    if n > 2 * (d + 1) + 1:
        cover_ok = is_cover(mbar, high_degree_set(g))
    return bound_chain_audit(g, n, d, beta1, cover_ok)


def render_report(instance: str, checks: list) -> str:
    """Serialise check outcomes with a stable key order."""
    body = {"instance": instance, "checks": checks}
    return json.dumps(body, indent=2) + "\n"

"""Stacked balls and spheres, their link classes, and the constructions
that move between them.

Recognition of stacked spheres works by reverse subdivision: a vertex
whose link is the boundary of a simplex is removed and its star replaced
by the single sealing facet.  Greedy peeling in vertex order is expected
to succeed on genuine stacked spheres, but the search is organised as a
depth-first exploration over peel choices with failure memoisation, so a
greedy dead end is retried along other orders before ``False`` comes
back.

The seeded generator uses SplitMix64, a portable 64-bit stream, so a
fixture built from a seed is reproducible on any platform or language.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    Face,
    SimplicialComplex,
    boundary_complex,
    f_vector,
    faces_of_dim,
    from_facets,
    is_pure,
    is_weak_pseudomanifold,
    link,
)
from .dualgraph import dual_graph, is_tree
from .errors import InadmissibleHandleError, PreconditionError

__all__ = [
    "ClassReport",
    "HandleMap",
    "is_stacked_ball",
    "is_stacked_sphere",
    "class_membership",
    "bar_construction",
    "handle_addition",
    "kuehnel_solid",
    "kuehnel_torus",
    "random_stacked_ball",
]

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step; returns (output word, next state)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31), state


@dataclass(frozen=True)
class ClassReport:
    """Outcome of the vertex-link classification of a pure d-complex."""

    in_class_k: bool
    in_class_kbar: bool
    failing_vertex: int | None
    d: int


@dataclass(frozen=True)
class HandleMap:
    """Gluing data: two disjoint facets and a vertex bijection between them.

    ``pairs`` lists ``(x, psi(x))`` sorted by ``x``.  Shape rules (strict
    tuples, disjointness, bijectivity) are enforced here; rules that
    depend on the ambient complex are enforced by
    :func:`handle_addition`.
    """

    sigma1: Face
    sigma2: Face
    pairs: tuple

    def __post_init__(self) -> None:
        for name, sigma in (("sigma1", self.sigma1), ("sigma2", self.sigma2)):
            if list(sigma) != sorted(set(sigma)):
                raise InadmissibleHandleError(f"{name} is not a strict vertex tuple")
        if set(self.sigma1) & set(self.sigma2):
            raise InadmissibleHandleError("sigma1 and sigma2 share vertices")
        domain = [p[0] for p in self.pairs]
        image = [p[1] for p in self.pairs]
        if domain != list(self.sigma1) or sorted(image) != list(self.sigma2):
            raise InadmissibleHandleError(
                "pairs must map sigma1 onto sigma2 bijectively, sorted by source"
            )

    @classmethod
    def create(cls, sigma1, sigma2, psi: dict) -> "HandleMap":
        s1 = tuple(sorted(sigma1))
        s2 = tuple(sorted(sigma2))
        pairs = tuple(sorted((x, psi[x]) for x in psi))
        return cls(s1, s2, pairs)

    @property
    def mapping(self) -> dict:
        return dict(self.pairs)


def is_stacked_ball(x: SimplicialComplex) -> bool:
    """Tree-shaped facet graph with the minimal vertex count f_0 = f_d + d."""
    if not x.facets or not is_pure(x):
        return False
    fv = f_vector(x)
    d = x.dim
    if fv.counts[0] != fv.counts[d] + d:
        return False
    return is_tree(dual_graph(x))


def _peel_candidates(facets: frozenset, dd: int):
    """Vertices removable by reverse subdivision, with star and seal facet."""
    incident: dict[int, list] = {}
    for f in facets:
        for v in f:
            incident.setdefault(v, []).append(f)
    out = []
    for v in sorted(incident):
        star_v = incident[v]
        if len(star_v) != dd + 1:
            continue
        hull: set[int] = set()
        for f in star_v:
            hull.update(f)
        hull.discard(v)
        if len(hull) != dd + 1:
            continue
        seal = tuple(sorted(hull))
        expected = {
            tuple(sorted((hull - {w}) | {v})) for w in hull
        }
        if expected != set(star_v):
            continue
        if seal in facets:
            continue
        out.append((frozenset(star_v), seal))
    return out


def is_stacked_sphere(s: SimplicialComplex) -> bool:
    """Recognise boundaries of stacked balls.

    The input must be a pure closed weak pseudomanifold; anything else
    raises :class:`PreconditionError`.  Recognition peels one vertex at a
    time down to the boundary of a simplex, backtracking over peel
    choices before giving up.
    """
    if not s.facets or not is_pure(s) or not is_weak_pseudomanifold(s):
        raise PreconditionError("input must be a pure weak pseudomanifold")
    if boundary_complex(s).facets:
        raise PreconditionError("input has a non-empty boundary")
    dd = s.dim
    dead: set[frozenset] = set()

    def dfs(facets: frozenset) -> bool:
        if len(facets) == dd + 2:
            hull: set[int] = set()
            for f in facets:
                hull.update(f)
            if len(hull) == dd + 2:
                return True
        if facets in dead:
            return False
        for star_v, seal in _peel_candidates(facets, dd):
            if dfs((facets - star_v) | {seal}):
                return True
        dead.add(facets)
        return False

    return dfs(frozenset(s.facets))


def class_membership(m: SimplicialComplex, d: int | None = None) -> ClassReport:
    """Classify a pure complex by the shape of its vertex links.

    Membership in the closed class needs every vertex link to be a
    stacked sphere; membership in the bounded class needs every link to
    be a stacked ball.  ``failing_vertex`` names the first vertex that
    ruled out a class, sphere failures taking precedence.
    """
    if not m.facets or not is_pure(m):
        raise PreconditionError("class membership requires a non-empty pure complex")
    if d is None:
        d = m.dim
    elif d != m.dim:
        raise PreconditionError(f"complex has dimension {m.dim}, not {d}")
    in_k = True
    in_kbar = True
    k_fail: int | None = None
    kbar_fail: int | None = None
    for v in m.vertices:
        lk = link(m, (v,))
        sphere_ok = False
        if (
            lk.facets
            and is_pure(lk)
            and is_weak_pseudomanifold(lk)
            and not boundary_complex(lk).facets
        ):
            sphere_ok = is_stacked_sphere(lk)
        ball_ok = is_stacked_ball(lk)
        if not sphere_ok and k_fail is None:
            k_fail = v
        if not ball_ok and kbar_fail is None:
            kbar_fail = v
        in_k = in_k and sphere_ok
        in_kbar = in_kbar and ball_ok
    failing = None
    if not in_k:
        failing = k_fail
    elif not in_kbar:
        failing = kbar_fail
    return ClassReport(in_k, in_kbar, failing, d)


def bar_construction(m: SimplicialComplex) -> SimplicialComplex:
    """Closure of a complex under the rule that 2- and 3-element subsets decide.

    The result has one face for every vertex set all of whose pairs are
    edges of ``m`` and all of whose triples are triangles of ``m``; the
    returned complex holds the maximal such sets.  Enumeration is a
    Bron-Kerbosch style backtracking over the 1-skeleton with a triangle
    table; pair and triple compatibility is tracked in bitmasks, and the
    node count is bounded by the number of faces of the result.
    """
    verts = m.vertices
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    edge_mask = [0] * n
    if m.dim >= 1:
        for a, b in faces_of_dim(m, 1):
            ia, ib = pos[a], pos[b]
            edge_mask[ia] |= 1 << ib
            edge_mask[ib] |= 1 << ia
    tri_mask = [[0] * n for _ in range(n)]
    if m.dim >= 2:
        for a, b, c in faces_of_dim(m, 2):
            ia, ib, ic = pos[a], pos[b], pos[c]
            tri_mask[ia][ib] |= 1 << ic
            tri_mask[ib][ia] |= 1 << ic
            tri_mask[ia][ic] |= 1 << ib
            tri_mask[ic][ia] |= 1 << ib
            tri_mask[ib][ic] |= 1 << ia
            tri_mask[ic][ib] |= 1 << ia
    results: list[tuple[int, ...]] = []

    def expand(chosen: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            results.append(tuple(verts[i] for i in chosen))
            return
        while p:
            v = (p & -p).bit_length() - 1
            bit = 1 << v
            allowed = edge_mask[v]
            for r in chosen:
                allowed &= tri_mask[r][v]
            chosen.append(v)
            expand(chosen, (p & ~bit) & allowed, x & allowed)
            chosen.pop()
            p &= ~bit
            x |= bit

    expand([], (1 << n) - 1, 0)
    return from_facets(results)


def handle_addition(x: SimplicialComplex, h: HandleMap) -> SimplicialComplex:
    """Remove the two matched facets and identify their vertices pairwise.

    Admissibility is validated here: both tuples must be facets of ``x``,
    and no matched pair may be adjacent or share a neighbour in the
    1-skeleton.  Violations raise :class:`InadmissibleHandleError`, the
    neighbour rule with witness ``(x, psi(x), common_neighbour)``.
    """
    facetset = set(x.facets)
    if h.sigma1 not in facetset:
        raise InadmissibleHandleError(f"sigma1 {h.sigma1} is not a facet")
    if h.sigma2 not in facetset:
        raise InadmissibleHandleError(f"sigma2 {h.sigma2} is not a facet")
    nbr: dict[int, set] = {v: set() for v in x.vertices}
    for a, b in faces_of_dim(x, 1):
        nbr[a].add(b)
        nbr[b].add(a)
    psi = h.mapping
    for src in h.sigma1:
        dst = psi[src]
        if dst in nbr[src]:
            raise InadmissibleHandleError(
                f"matched vertices {src} and {dst} are adjacent"
            )
        common = nbr[src] & nbr[dst]
        if common:
            z = min(common)
            raise InadmissibleHandleError(
                f"vertices {src} and {dst} share neighbour {z}",
                witness=(src, dst, z),
            )
    new_facets = []
    for f in facetset - {h.sigma1, h.sigma2}:
        g = tuple(sorted(psi.get(v, v) for v in f))
        if len(g) != len(f):
            raise AssertionError("identification collapsed a facet")
        new_facets.append(g)
    if len(set(new_facets)) != len(new_facets):
        raise AssertionError("identification merged two facets")
    return from_facets(new_facets)


def kuehnel_solid(d: int) -> SimplicialComplex:
    """Cyclic (d+1)-dimensional solid on 2d+3 vertices.

    Facets are the 2d+3 windows of d+2 consecutive labels modulo 2d+3;
    the facet graph is one cycle.
    """
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    n = 2 * d + 3
    return from_facets(
        tuple(sorted((i + k) % n for k in range(d + 2))) for i in range(n)
    )


def kuehnel_torus(d: int) -> SimplicialComplex:
    """Boundary of :func:`kuehnel_solid`: a closed d-manifold on 2d+3 vertices."""
    return boundary_complex(kuehnel_solid(d))


def random_stacked_ball(d: int, m: int, seed: int = 0) -> SimplicialComplex:
    """Stacked d-ball grown by m-1 seeded ridge expansions.

    Starts from the simplex on 0..d and repeatedly glues a fresh vertex
    onto a boundary ridge chosen by a SplitMix64 stream, so the result is
    a pure function of (d, m, seed).  Ridge choice indexes the sorted
    boundary-ridge list with the next stream word reduced modulo the list
    length.
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    state = seed & _MASK64
    first = tuple(range(d + 1))
    facets = [first]
    boundary: set[Face] = {
        tuple(u for u in first if u != drop) for drop in first
    }
    fresh = d + 1
    for _ in range(m - 1):
        word, state = _splitmix64(state)
        ridges = sorted(boundary)
        tau = ridges[word % len(ridges)]
        facets.append(tuple(sorted(tau + (fresh,))))
        boundary.remove(tau)
        for drop in tau:
            boundary.add(tuple(u for u in tau if u != drop) + (fresh,))
        fresh += 1
    return from_facets(facets)

"""Finite abstract simplicial complexes stored by their facets.

A complex is kept as the canonically sorted tuple of its inclusion-maximal
faces.  Lower-dimensional faces are never materialised up front; they are
enumerated on demand and memoised per dimension.  Vertex labels are
arbitrary non-negative integers and survive every operation unchanged;
algorithms that want dense indices build a local relabelling.

All arithmetic is exact.  Python integers are unbounded, so the counting
identities checked elsewhere in the package cannot silently overflow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .errors import (
    DimensionRangeError,
    EmptyComplexError,
    NotAFaceError,
    PreconditionError,
    UnknownVertexError,
    VertexClashError,
)

__all__ = [
    "Face",
    "FVector",
    "SimplicialComplex",
    "from_facets",
    "faces_of_dim",
    "f_vector",
    "link",
    "star",
    "join",
    "skeleton",
    "is_pure",
    "is_weak_pseudomanifold",
    "is_pseudomanifold",
    "boundary_complex",
    "relabel_vertices",
    "is_neighborly",
]

Face = tuple  # sorted tuple of distinct non-negative ints; () is the empty face


def _as_face(vertices: Iterable[int]) -> Face:
    """Canonicalise one vertex collection into a sorted duplicate-free tuple."""
    face = tuple(sorted(set(vertices)))
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"vertex labels must be non-negative ints, got {v!r}")
    return face


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension together with the Euler characteristic."""

    counts: tuple[int, ...]
    euler: int

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "FVector":
        counts = tuple(counts)
        euler = sum(c if i % 2 == 0 else -c for i, c in enumerate(counts))
        return cls(counts, euler)


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex represented by its facet set.

    ``facets`` must already be canonical: each facet a strictly increasing
    tuple, no facet contained in another, whole tuple sorted.  Use
    :func:`from_facets` to build one from raw data; the raw constructor is
    for internal call sites that guarantee canonical input.  Two complexes
    with equal facet sets compare equal bit for bit.

    The empty complex (no facets at all) is representable and shows up as
    the boundary of a single simplex; :func:`from_facets` refuses to build
    it directly.
    """

    facets: tuple[Face, ...]
    # per-dimension face sets; value writes are idempotent so concurrent
    # readers at worst recompute
    _face_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        """Top face dimension; -1 for the empty complex."""
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        if "vertices" not in self._face_cache:
            vs: set[int] = set()
            for f in self.facets:
                vs.update(f)
            self._face_cache["vertices"] = tuple(sorted(vs))
        return self._face_cache["vertices"]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def has_face(self, alpha: Iterable[int]) -> bool:
        a = set(alpha)
        return any(a.issubset(f) for f in self.facets)

    def __repr__(self) -> str:  # cache never shown
        return f"SimplicialComplex({list(self.facets)!r})"


EMPTY = SimplicialComplex(())


def from_facets(faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from generating faces.

    Faces may arrive in any order with duplicates; faces contained in a
    larger face are absorbed.  At least one non-empty face is required.
    """
    canon = {_as_face(f) for f in faces}
    canon.discard(())
    if not canon:
        raise EmptyComplexError("at least one non-empty face is required")
    # faces of equal size never contain one another, so only compare
    # against the strictly larger faces already kept
    maximal: list[Face] = []
    larger: list[set] = []
    for length in sorted({len(f) for f in canon}, reverse=True):
        group = [f for f in canon if len(f) == length]
        kept = [f for f in group if not any(set(f) <= g for g in larger)]
        maximal.extend(kept)
        larger.extend(set(f) for f in kept)
    return SimplicialComplex(tuple(sorted(maximal)))


def faces_of_dim(x: SimplicialComplex, k: int) -> frozenset:
    """All k-dimensional faces of ``x`` as a frozenset of sorted tuples.

    ``k == -1`` yields the singleton set holding the empty face.
    """
    if k < -1 or k > x.dim:
        raise DimensionRangeError(f"k={k} outside [-1, {x.dim}]")
    if k == -1:
        return frozenset({()})
    key = ("faces", k)
    cached = x._face_cache.get(key)
    if cached is None:
        out: set[Face] = set()
        for facet in x.facets:
            if len(facet) >= k + 1:
                out.update(itertools.combinations(facet, k + 1))
        cached = frozenset(out)
        x._face_cache[key] = cached
    return cached


def f_vector(x: SimplicialComplex) -> FVector:
    """Face counts (f_0, ..., f_d) and their alternating sum."""
    if not x.facets:
        return FVector.from_counts(())
    return FVector.from_counts(
        len(faces_of_dim(x, k)) for k in range(x.dim + 1)
    )


def link(x: SimplicialComplex, alpha: Iterable[int]) -> SimplicialComplex:
    """Link of the face ``alpha``: faces disjoint from it whose union with it lies in ``x``.

    The link of the empty face is ``x`` itself.  Linking a facet gives the
    empty complex.
    """
    a = _as_face(alpha)
    if not a:
        return x
    aset = set(a)
    if not x.has_face(a):
        raise NotAFaceError(f"{a} is not a face")
    gens = [
        tuple(v for v in facet if v not in aset)
        for facet in x.facets
        if aset.issubset(facet)
    ]
    gens = [g for g in gens if g]
    if not gens:
        return EMPTY
    return from_facets(gens)


def star(x: SimplicialComplex, v: int) -> SimplicialComplex:
    """Subcomplex generated by the facets containing vertex ``v``."""
    if v not in x.vertices:
        raise UnknownVertexError(f"vertex {v} not in complex")
    return SimplicialComplex(tuple(f for f in x.facets if v in f))


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; operand vertex sets must be disjoint."""
    clash = set(x.vertices) & set(y.vertices)
    if clash:
        raise VertexClashError(f"operands share vertices {sorted(clash)}")
    return SimplicialComplex(
        tuple(sorted(tuple(sorted(f + g)) for f in x.facets for g in y.facets))
    )


def skeleton(x: SimplicialComplex, k: int) -> SimplicialComplex:
    """k-skeleton: all faces of dimension at most ``k``."""
    if k < 0 or k > x.dim:
        raise DimensionRangeError(f"k={k} outside [0, {x.dim}]")
    gens = set(faces_of_dim(x, k))
    gens.update(f for f in x.facets if len(f) <= k)
    return from_facets(gens)


def is_pure(x: SimplicialComplex) -> bool:
    """True when every facet has the top dimension."""
    if not x.facets:
        return True
    d = len(x.facets[0])
    return all(len(f) == d for f in x.facets)


def _ridge_incidence(x: SimplicialComplex) -> dict:
    """Map each codimension-one face of a pure complex to its facet indices."""
    ridges: dict[Face, list[int]] = {}
    for i, facet in enumerate(x.facets):
        for ridge in itertools.combinations(facet, len(facet) - 1):
            ridges.setdefault(ridge, []).append(i)
    return ridges


def is_weak_pseudomanifold(x: SimplicialComplex) -> bool:
    """Pure, and no codimension-one face lies in more than two facets."""
    if not x.facets:
        return True
    if not is_pure(x):
        return False
    return all(len(ids) <= 2 for ids in _ridge_incidence(x).values())


def is_pseudomanifold(x: SimplicialComplex) -> bool:
    """Weak pseudomanifold whose facet adjacency graph is connected."""
    from .dualgraph import dual_graph, is_connected

    if not is_weak_pseudomanifold(x):
        return False
    return is_connected(dual_graph(x))


def boundary_complex(x: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by codimension-one faces lying in exactly one facet.

    Requires a pure weak pseudomanifold.  A closed input yields the empty
    complex.
    """
    if not x.facets:
        raise PreconditionError("boundary of the empty complex is undefined")
    if not is_weak_pseudomanifold(x):
        raise PreconditionError("input must be a pure weak pseudomanifold")
    free = sorted(
        ridge for ridge, ids in _ridge_incidence(x).items() if len(ids) == 1
    )
    if not free:
        return EMPTY
    return SimplicialComplex(tuple(free))


def relabel_vertices(x: SimplicialComplex, mapping: dict) -> SimplicialComplex:
    """Apply an injective vertex relabelling to every facet."""
    targets = {mapping[v] for v in x.vertices}
    if len(targets) != len(x.vertices):
        raise ValueError("mapping is not injective on the vertex set")
    return from_facets(tuple(mapping[v] for v in f) for f in x.facets)


def is_neighborly(x: SimplicialComplex, l: int = 2) -> bool:
    """True when every ``l``-subset of the vertex set is a face."""
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    n = x.num_vertices
    if l > x.dim + 1:
        return comb(n, l) == 0
    return len(faces_of_dim(x, l - 1)) == comb(n, l)

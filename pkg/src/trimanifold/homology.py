"""Mod-2 chain complexes, Betti numbers, and orientability.

Boundary matrices are stored column-wise as Python integers used as bit
rows: column j of the k-th matrix is the set of (k-1)-faces of the j-th
k-face, with faces indexed in lexicographic order.  Rank comes from
bitset Gaussian elimination, b_i = f_i - rank d_i - rank d_{i+1}, and
everything is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import SimplicialComplex, boundary_complex, faces_of_dim, is_pure, is_weak_pseudomanifold
from .dualgraph import DualGraph, dual_graph, is_connected
from .errors import PreconditionError

__all__ = [
    "Z2Matrix",
    "Z2ChainComplex",
    "BettiVector",
    "chain_complex",
    "betti_z2",
    "beta1_z2",
    "beta1_dual_formula",
    "is_orientable",
]


@dataclass(frozen=True)
class Z2Matrix:
    """Matrix over GF(2), stored as one int bitmask per column."""

    num_rows: int
    cols: tuple

    @property
    def num_cols(self) -> int:
        return len(self.cols)

    def rank(self) -> int:
        """Gaussian elimination on packed bit rows."""
        pivots: dict[int, int] = {}
        rank = 0
        for col in self.cols:
            while col:
                top = col.bit_length() - 1
                other = pivots.get(top)
                if other is None:
                    pivots[top] = col
                    rank += 1
                    break
                col ^= other
        return rank

    def compose(self, inner: "Z2Matrix") -> "Z2Matrix":
        """Matrix product self @ inner over GF(2)."""
        if self.num_cols != inner.num_rows:
            raise ValueError("shape mismatch")
        out = []
        for col in inner.cols:
            acc = 0
            j = 0
            while col:
                if col & 1:
                    acc ^= self.cols[j]
                col >>= 1
                j += 1
            out.append(acc)
        return Z2Matrix(self.num_rows, tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.cols)


@dataclass(frozen=True)
class Z2ChainComplex:
    """Ordered face lists per dimension plus the boundary matrices.

    ``boundaries[k]`` maps k-chains to (k-1)-chains for 1 <= k <= dim;
    index 0 holds the zero map out of the vertex space.
    """

    faces: tuple
    boundaries: tuple

    @property
    def dim(self) -> int:
        return len(self.faces) - 1


@dataclass(frozen=True)
class BettiVector:
    """Mod-2 Betti numbers b_0..b_d."""

    betti: tuple

    def alternating_sum(self) -> int:
        return sum(b if i % 2 == 0 else -b for i, b in enumerate(self.betti))


def chain_complex(x: SimplicialComplex, up_to: int | None = None) -> Z2ChainComplex:
    """Face lists and boundary matrices of ``x`` up to dimension ``up_to``."""
    if not x.facets:
        raise PreconditionError("chain complex of the empty complex is undefined")
    top = x.dim if up_to is None else min(up_to, x.dim)
    faces: list[tuple] = []
    index: list[dict] = []
    for k in range(top + 1):
        ordered = tuple(sorted(faces_of_dim(x, k)))
        faces.append(ordered)
        index.append({f: i for i, f in enumerate(ordered)})
    boundaries = [Z2Matrix(0, tuple(0 for _ in faces[0]))]
    for k in range(1, top + 1):
        lower = index[k - 1]
        cols = []
        for face in faces[k]:
            mask = 0
            for sub in itertools.combinations(face, k):
                mask |= 1 << lower[sub]
            cols.append(mask)
        boundaries.append(Z2Matrix(len(faces[k - 1]), tuple(cols)))
    return Z2ChainComplex(tuple(faces), tuple(boundaries))


def betti_z2(x: SimplicialComplex) -> BettiVector:
    """Full mod-2 Betti vector b_0..b_d."""
    cc = chain_complex(x)
    d = cc.dim
    ranks = [m.rank() for m in cc.boundaries] + [0]
    counts = [len(fs) for fs in cc.faces]
    return BettiVector(
        tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(d + 1))
    )


def beta1_z2(x: SimplicialComplex) -> int:
    """First mod-2 Betti number alone, from the two small boundary ranks."""
    if x.dim < 1:
        return 0
    cc = chain_complex(x, up_to=min(2, x.dim))
    rank2 = cc.boundaries[2].rank() if cc.dim >= 2 else 0
    return len(cc.faces[1]) - cc.boundaries[1].rank() - rank2


def beta1_dual_formula(x: SimplicialComplex) -> int:
    """Cycle rank of the facet graph: edges - nodes + 1.

    Agrees with the first Betti number of the boundary for the solids
    this package studies; the caller picks instances where that reading
    is meaningful.
    """
    g = dual_graph(x)
    if not is_connected(g):
        raise PreconditionError("dual graph must be connected")
    return g.num_edges - g.num_nodes + 1


def _oriented_sign(facet, drop_pos: int) -> int:
    return -1 if drop_pos % 2 else 1


def is_orientable(m: SimplicialComplex) -> bool:
    """Propagate facet signs along a spanning tree of the facet graph.

    Works on closed pseudomanifolds: pure, every ridge in exactly two
    facets, facet graph connected.  Returns True when a global
    orientation assignment is consistent across every shared ridge.
    """
    if not m.facets or not is_pure(m) or not is_weak_pseudomanifold(m):
        raise PreconditionError("orientability needs a pure weak pseudomanifold")
    if boundary_complex(m).facets:
        raise PreconditionError("orientability check requires a closed complex")
    g: DualGraph = dual_graph(m)
    if not is_connected(g):
        raise PreconditionError("facet graph must be connected")
    if m.dim == 0:
        return True
    # relative parity demanded by one shared ridge: facets must induce
    # opposite orientations on it
    def relation(i: int, j: int) -> int:
        fi, fj = g.facets[i], g.facets[j]
        shared = set(fi) & set(fj)
        a = next(v for v in fi if v not in shared)
        b = next(v for v in fj if v not in shared)
        sign = _oriented_sign(fi, fi.index(a)) * _oriented_sign(fj, fj.index(b))
        return -sign
    signs: dict[int, int] = {0: 1}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in g.adjacency[i]:
            want = signs[i] * relation(i, j)
            if j not in signs:
                signs[j] = want
                stack.append(j)
            elif signs[j] != want:
                return False
    return True

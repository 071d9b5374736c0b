"""Slow-but-simple reference implementations shared across the tests.

Everything here recomputes answers by definition chasing: global subset
enumeration for faces, dense row reduction for binary ranks, delete-a-node
sweeps for two-connectivity, and reverse peeling for stacked balls.  The
point is independence from the fast paths in the package, so agreement is
evidence rather than circularity.
"""

from itertools import combinations

from trimanifold.complexes import (
    SimplicialComplex,
    boundary_complex,
    from_facets,
    join,
    relabel_vertices,
)
from trimanifold.dualgraph import components_minus, is_connected
from trimanifold.walkup import kuehnel_solid, kuehnel_torus, random_stacked_ball


def simplex(d: int) -> SimplicialComplex:
    return from_facets([range(d + 1)])


def faces_by_enumeration(x: SimplicialComplex, size: int) -> set:
    """Every size-element vertex subset lying inside some facet."""
    found = set()
    for subset in combinations(x.vertices, size):
        wanted = set(subset)
        if any(wanted <= set(f) for f in x.facets):
            found.add(subset)
    return found


def rank_gf2_dense(rows) -> int:
    """Row reduction over the two-element field on plain 0/1 lists."""
    mat = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                mat[r] = [(a ^ b) for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def two_connected_by_deletion(g) -> bool:
    """Definitional check: no single node separates the graph."""
    if g.num_nodes < 3 or not is_connected(g):
        return False
    return all(
        len(components_minus(g, {v})) == 1 for v in range(g.num_nodes)
    )


def peel_stacked_ball(x: SimplicialComplex) -> bool:
    """Recognize a stacked ball by undoing gluings one facet at a time.

    A reversible step is a facet with a private vertex whose opposite ridge
    sits inside another facet.  Undoing any such step keeps the property,
    so a greedy loop either reaches a single simplex or gets stuck.
    """
    facets = [set(f) for f in x.facets]
    if not facets:
        return False
    width = len(facets[0])
    if any(len(f) != width for f in facets):
        return False
    while len(facets) > 1:
        step = None
        for i, f in enumerate(facets):
            others = [g for j, g in enumerate(facets) if j != i]
            private = [v for v in f if not any(v in g for g in others)]
            if len(private) != 1:
                continue
            ridge = f - {private[0]}
            if any(ridge <= g for g in others):
                step = i
                break
        if step is None:
            return False
        facets.pop(step)
    return True


def path_ball(d: int, m: int) -> SimplicialComplex:
    """Stacked d-ball whose facet graph is a path: facets {i, ..., i+d}."""
    return from_facets(tuple(range(i, i + d + 1)) for i in range(m))


def star_ball(d: int, m: int) -> SimplicialComplex:
    """Stacked d-ball glued onto m - 1 distinct ridges of one base simplex."""
    if m - 1 > d + 1:
        raise ValueError("base simplex has only d + 1 ridges")
    base = tuple(range(d + 1))
    facets = [base]
    for k in range(m - 1):
        ridge = base[:k] + base[k + 1 :]
        facets.append(ridge + (d + 1 + k,))
    return from_facets(facets)


def shifted(x: SimplicialComplex, offset: int) -> SimplicialComplex:
    return relabel_vertices(x, {v: v + offset for v in x.vertices})


def corpus() -> list:
    """Named complexes used for axis checks like Euler alternation."""
    items = [
        ("point", from_facets([(0,)])),
        ("segment", simplex(1)),
        ("triangle-solid", simplex(2)),
        ("circle-hexagon", from_facets([(i, (i + 1) % 6) for i in range(6)])),
        ("two-triangles-wedge", from_facets([(0, 1, 2), (0, 3, 4)])),
        ("sphere-2", boundary_complex(simplex(3))),
        ("sphere-4", boundary_complex(simplex(5))),
        ("ball-path-3", path_ball(3, 6)),
        ("ball-star-2", star_ball(2, 4)),
        ("sphere-from-ball-3", boundary_complex(path_ball(3, 6))),
        ("join-circle-circle", join(
            boundary_complex(simplex(2)), shifted(boundary_complex(simplex(2)), 10)
        )),
    ]
    for d in (2, 3, 4):
        items.append((f"kuehnel-solid-{d}", kuehnel_solid(d)))
        items.append((f"kuehnel-torus-{d}", kuehnel_torus(d)))
    items.append(("random-ball-4", random_stacked_ball(4, 12, seed=99)))
    return items

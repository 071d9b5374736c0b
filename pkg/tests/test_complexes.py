import pytest
from hypothesis import given, strategies as st

import helpers
from trimanifold.complexes import (
    EMPTY,
    SimplicialComplex,
    boundary_complex,
    f_vector,
    faces_of_dim,
    from_facets,
    is_neighborly,
    is_pseudomanifold,
    is_pure,
    is_weak_pseudomanifold,
    join,
    link,
    relabel_vertices,
    skeleton,
    star,
)
from trimanifold.errors import (
    DimensionRangeError,
    EmptyComplexError,
    NotAFaceError,
    PreconditionError,
    UnknownVertexError,
    VertexClashError,
)
from trimanifold.walkup import kuehnel_solid, kuehnel_torus


def test_from_facets_canonicalizes():
    x = from_facets([(2, 0, 1), (1, 2, 0), (0, 1)])
    assert x.facets == ((0, 1, 2),)


def test_from_facets_keeps_incomparable_faces():
    x = from_facets([(0, 1, 2), (2, 3), (4,)])
    assert x.facets == ((0, 1, 2), (2, 3), (4,))


def test_from_facets_rejects_bad_labels():
    with pytest.raises(ValueError):
        from_facets([(0, -1)])
    with pytest.raises(ValueError):
        from_facets([(True, 2)])


def test_empty_input_is_rejected():
    # the EMPTY constant is the only spelling of the void complex
    with pytest.raises(EmptyComplexError):
        from_facets([])
    assert EMPTY.dim == -1
    assert EMPTY.vertices == ()


faces_strategy = st.lists(
    st.lists(st.integers(0, 9), min_size=1, max_size=4),
    min_size=1,
    max_size=8,
)


@given(faces_strategy, st.randoms(use_true_random=False))
def test_from_facets_input_order_irrelevant(faces, rng):
    """Canonical form ignores input order, duplication and vertex order."""
    x = from_facets(faces)
    doubled = [list(f) for f in faces] + [list(f) for f in faces]
    for f in doubled:
        rng.shuffle(f)
    rng.shuffle(doubled)
    assert from_facets(doubled) == x


@given(faces_strategy)
def test_facets_are_mutually_incomparable(faces):
    x = from_facets(faces)
    sets = [set(f) for f in x.facets]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            assert i == j or not a <= b


def test_faces_of_dim_against_enumeration():
    for x in (kuehnel_solid(2), helpers.path_ball(3, 6), kuehnel_torus(3)):
        for k in range(x.dim + 1):
            assert faces_of_dim(x, k) == frozenset(
                helpers.faces_by_enumeration(x, k + 1)
            )


def test_faces_of_dim_bounds():
    x = helpers.simplex(2)
    assert faces_of_dim(x, -1) == frozenset({()})
    with pytest.raises(DimensionRangeError):
        faces_of_dim(x, 3)
    with pytest.raises(DimensionRangeError):
        faces_of_dim(x, -2)


def test_f_vector_frozen_values():
    # enumerated independently in helpers.faces_by_enumeration
    assert f_vector(kuehnel_torus(2)).counts == (7, 21, 14)
    assert f_vector(kuehnel_torus(2)).euler == 0
    assert f_vector(kuehnel_torus(3)).counts == (9, 36, 54, 27)
    assert f_vector(kuehnel_solid(2)).counts == (7, 21, 21, 7)
    assert f_vector(boundary_complex(helpers.simplex(3))).euler == 2


def test_link_of_vertex_in_octahedron_boundary():
    sphere = boundary_complex(helpers.simplex(3))
    lk = link(sphere, (0,))
    assert lk.facets == ((1, 2), (1, 3), (2, 3))


def test_link_of_edge_in_torus():
    lk = link(kuehnel_torus(2), (0, 1))
    # a ridge of a closed surface links to exactly two vertices
    assert lk.dim == 0
    assert len(lk.facets) == 2


def test_link_empty_face_is_identity():
    x = kuehnel_solid(2)
    assert link(x, ()) == x


def test_link_requires_a_face():
    with pytest.raises(NotAFaceError):
        link(helpers.simplex(2), (0, 5))


def test_link_of_facet_is_empty():
    assert link(helpers.simplex(2), (0, 1, 2)) == EMPTY


def test_star_collects_incident_facets():
    x = from_facets([(0, 1, 2), (2, 3, 4), (4, 5)])
    assert star(x, 2).facets == ((0, 1, 2), (2, 3, 4))
    with pytest.raises(UnknownVertexError):
        star(x, 9)


def test_join_simplices():
    # join of a segment and a point is a triangle
    seg = from_facets([(0, 1)])
    pt = from_facets([(5,)])
    assert join(seg, pt).facets == ((0, 1, 5),)


def test_join_rejects_shared_vertices():
    with pytest.raises(VertexClashError):
        join(helpers.simplex(2), helpers.simplex(1))


@given(faces_strategy, faces_strategy)
def test_join_f_vector_is_convolution(fa, fb):
    a = from_facets(fa)
    b = from_facets([[v + 100 for v in f] for f in fb])
    j = join(a, b)
    ca, cb, cj = (
        f_vector(a).counts,
        f_vector(b).counts,
        f_vector(j).counts,
    )
    for k in range(len(cj)):
        total = 0
        for i in range(-1, k + 1):
            left = 1 if i == -1 else (ca[i] if i < len(ca) else 0)
            jdx = k - i - 1
            right = 1 if jdx == -1 else (cb[jdx] if jdx < len(cb) else 0)
            total += left * right
        assert cj[k] == total


def test_skeleton():
    x = helpers.simplex(3)
    sk = skeleton(x, 1)
    assert sk.dim == 1
    assert len(sk.facets) == 6
    assert skeleton(x, 0).facets == ((0,), (1,), (2,), (3,))


def test_purity():
    assert is_pure(kuehnel_solid(3))
    assert not is_pure(from_facets([(0, 1, 2), (2, 3)]))


def test_weak_pseudomanifold():
    assert is_weak_pseudomanifold(kuehnel_torus(2))
    three_around_an_edge = from_facets([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    assert not is_weak_pseudomanifold(three_around_an_edge)


def test_pseudomanifold_needs_connected_dual():
    two_spheres = from_facets(
        list(boundary_complex(helpers.simplex(3)).facets)
        + list(helpers.shifted(boundary_complex(helpers.simplex(3)), 10).facets)
    )
    assert is_weak_pseudomanifold(two_spheres)
    assert not is_pseudomanifold(two_spheres)
    assert is_pseudomanifold(kuehnel_torus(3))


def test_boundary_of_simplex():
    bd = boundary_complex(helpers.simplex(3))
    assert f_vector(bd).counts == (4, 6, 4)


def test_boundary_of_closed_complex_is_empty():
    assert boundary_complex(kuehnel_torus(2)) == EMPTY


def test_boundary_requires_weak_pseudomanifold():
    with pytest.raises(PreconditionError):
        boundary_complex(from_facets([(0, 1, 2), (0, 1, 3), (0, 1, 4)]))
    with pytest.raises(PreconditionError):
        boundary_complex(EMPTY)


def test_boundary_of_stacked_ball_is_sphere_sized():
    ball = helpers.path_ball(3, 6)
    bd = boundary_complex(ball)
    assert bd.dim == 2
    assert f_vector(bd).euler == 2


def test_relabel_vertices():
    x = helpers.simplex(2)
    y = relabel_vertices(x, {0: 5, 1: 3, 2: 8})
    assert y.facets == ((3, 5, 8),)
    with pytest.raises(ValueError):
        relabel_vertices(x, {0: 1, 1: 1, 2: 2})


def test_neighborliness():
    assert is_neighborly(kuehnel_torus(4))
    assert is_neighborly(boundary_complex(helpers.simplex(4)), 3)
    # hexagon misses chords
    assert not is_neighborly(from_facets([(i, (i + 1) % 6) for i in range(6)]))


def test_neighborliness_beyond_dimension():
    # a 1-complex has no triangles, so 3-neighborliness needs comb(n,3) == 0
    assert is_neighborly(helpers.simplex(1), 3)
    assert not is_neighborly(from_facets([(0, 1), (1, 2), (0, 2)]), 3)

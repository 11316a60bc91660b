import pytest
from hypothesis import given, settings, strategies as st

from slabelcol.errors import EmbeddingError, ShapeError
from slabelcol.graph import (
    PlaneGraph,
    cycle_graph,
    faces,
    is_triangulation,
    stack_vertex,
    subdivide_face,
    triangle,
)


def euler(g):
    return g.num_vertices() - g.num_edges() + len(faces(g))


def test_triangle():
    g = triangle()
    assert (g.num_vertices(), g.num_edges(), len(faces(g))) == (3, 3, 2)
    assert euler(g) == 2
    assert is_triangulation(g)
    assert [len(f) for f in faces(g)] == [3, 3]


def test_stack_into_triangle_gives_k4():
    g, x = stack_vertex(triangle(), (0, 1))
    assert x == 3
    assert (g.num_vertices(), g.num_edges(), len(faces(g))) == (4, 6, 4)
    assert all(len(f) == 3 for f in faces(g))
    assert g.adjacency()[3] == {0, 1, 2}


def test_eleven_stackings():
    g = triangle()
    for _ in range(11):
        g, _ = stack_vertex(g, faces(g)[0].face)
    assert (g.num_vertices(), g.num_edges(), len(faces(g))) == (14, 36, 24)
    assert 14 - 36 + 24 == 2
    assert is_triangulation(g)
    assert len(faces(g)) == 24 and all(len(f) == 3 for f in faces(g))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 10 ** 6), max_size=15))
def test_stacking_invariants(choices):
    g = triangle()
    for s, c in enumerate(choices, 1):
        fs = faces(g)
        g, _ = stack_vertex(g, fs[c % len(fs)].face)
        assert g.num_vertices() == 3 + s
        assert g.num_edges() == 3 + 3 * s
        assert len(faces(g)) == 2 + 2 * s
        assert euler(g) == 2
        assert is_triangulation(g)
    walks = faces(g)
    assert sum(len(f) for f in walks) == 2 * g.num_edges()
    darts = [d for f in walks for d in f.darts]
    assert len(darts) == len(set(darts)) == 2 * g.num_edges()


def test_face_ids_are_least_darts_and_stable():
    g = triangle()
    g2, _ = stack_vertex(g, (0, 1))
    assert (0, 2) in {f.face for f in faces(g2)}
    for f in faces(g2):
        assert f.face == min(f.darts)
    # stacking into (0, 1) leaves face (0, 2) untouched
    assert g.face((0, 2)).boundary == g2.face((0, 2)).boundary


def test_four_cycle_is_not_a_triangulation():
    c4 = cycle_graph(4)
    assert not is_triangulation(c4)
    assert [len(f) for f in faces(c4)] == [4, 4]


def test_stack_into_non_triangle():
    with pytest.raises(ShapeError):
        stack_vertex(cycle_graph(4), (0, 1))


def test_bad_rotation_systems():
    with pytest.raises(EmbeddingError):
        PlaneGraph.from_rotation({0: (1,), 1: ()})
    with pytest.raises(EmbeddingError):
        PlaneGraph.from_rotation({0: (1,), 1: (0,), 2: (3,), 3: (2,)})
    with pytest.raises(EmbeddingError):
        PlaneGraph.from_rotation({0: (0, 1), 1: (0,)})
    # K4 with a non-planar rotation at one vertex (torus-like) fails Euler
    with pytest.raises(EmbeddingError):
        PlaneGraph.from_rotation({0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)})


def test_subdivide_unknown_face():
    with pytest.raises(KeyError):
        subdivide_face(triangle(), (1, 0), [])


def test_rotation_lists_incident_edges_once():
    g = triangle()
    for _ in range(6):
        g, _ = stack_vertex(g, faces(g)[-1].face)
    adj = g.adjacency()
    for v, nbrs in g.rotation:
        assert set(nbrs) == adj[v] and len(nbrs) == len(adj[v])

"""Maps, faces, duals, genus, and connectivity."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdclab.corpus import cube, k4, octahedron, prism, wheel
from cdclab.errors import (
    Disconnected,
    NonPlanarEmbedding,
    NonSymmetricAdjacency,
    NotSimple,
    TooSmall,
)
from cdclab.planar_map import (
    SimpleGraph,
    alpha,
    dualize,
    from_rotation,
    is_3_connected,
    mirror,
    underlying_graph,
)

from conftest import apollonian_from_draws, corpus_maps


def test_k4_counts():
    m = k4()
    assert (m.vertex_count, m.edge_count, m.face_count) == (4, 6, 4)
    assert m.euler_genus() == 0
    assert all(len(f.darts) == 3 for f in m.faces)


def test_alpha_is_a_fixed_point_free_involution():
    m = cube()
    for d in range(2 * m.edge_count):
        assert alpha(d) != d
        assert alpha(alpha(d)) == d


def test_face_of_dart_partitions_darts():
    m = octahedron()
    seen = set()
    for f in m.faces:
        for d in f.darts:
            assert m.face_of_dart(d) == f.index
            seen.add(d)
    assert seen == set(range(2 * m.edge_count))


@pytest.mark.parametrize("name,m", corpus_maps())
def test_corpus_is_planar_and_3_connected(name, m):
    assert m.euler_genus() == 0
    assert is_3_connected(underlying_graph(m))


def test_ascending_k4_rotation_is_toroidal():
    # same graph as k4(), different rotation: the embedding has genus 1
    adjacency = {1: [2, 3, 4], 2: [1, 3, 4], 3: [1, 2, 4], 4: [1, 2, 3]}
    with pytest.raises(NonPlanarEmbedding):
        from_rotation(adjacency)
    m = from_rotation(adjacency, require_planar=False)
    assert m.face_count == 2
    assert m.euler_genus() == 1


def test_mirror_of_k4_is_planar():
    rows = k4().rotation_lists()
    mirrored = from_rotation({v: list(reversed(r))
                              for v, r in enumerate(rows)})
    assert mirrored.euler_genus() == 0


def test_loop_is_rejected():
    with pytest.raises(NotSimple):
        from_rotation({1: [1, 1, 2], 2: [1]}, require_planar=False)


def test_parallel_edge_is_rejected():
    with pytest.raises(NotSimple):
        from_rotation({1: [2, 2], 2: [1, 1]}, require_planar=False)


def test_asymmetric_adjacency_is_rejected():
    with pytest.raises(NonSymmetricAdjacency):
        from_rotation({1: [2], 2: []}, require_planar=False)


def test_disconnected_input_is_rejected():
    two_triangles = {
        1: [2, 3], 2: [3, 1], 3: [1, 2],
        4: [5, 6], 5: [6, 4], 6: [4, 5],
    }
    with pytest.raises(Disconnected):
        from_rotation(two_triangles, require_planar=False)


def test_rotation_lists_roundtrip():
    for name, m in corpus_maps():
        rows = m.rotation_lists()
        rebuilt = from_rotation({v: row for v, row in enumerate(rows)})
        assert rebuilt.sigma == m.sigma, name
        assert rebuilt.vertex_of == m.vertex_of, name


def test_dual_swaps_vertices_and_faces():
    for name, m in corpus_maps():
        d = dualize(m)
        assert d.vertex_count == m.face_count, name
        assert d.face_count == m.vertex_count, name
        assert d.edge_count == m.edge_count, name
        assert d.euler_genus() == 0, name


def test_double_dual_restores_sigma_exactly():
    # vertex ids may be renumbered (they follow dual face tracing
    # order), but the rotation permutation itself comes back intact
    for name, m in corpus_maps():
        dd = dualize(dualize(m))
        assert dd.sigma == m.sigma, name
        partition = {}
        for d in range(2 * m.edge_count):
            partition.setdefault(dd.vertex_of[d], set()).add(d)
        original = {}
        for d in range(2 * m.edge_count):
            original.setdefault(m.vertex_of[d], set()).add(d)
        assert sorted(map(sorted, partition.values())) == \
            sorted(map(sorted, original.values())), name


def test_dual_edges_match_face_adjacency():
    # oracle: recompute dual adjacency from shared primal edges
    for name, m in corpus_maps():
        d = dualize(m)
        dual_edges = set(d.edges())
        expected = set()
        for i in range(m.edge_count):
            fa = m.face_of_dart(2 * i)
            fb = m.face_of_dart(2 * i + 1)
            expected.add((fa, fb) if fa < fb else (fb, fa))
        assert dual_edges == expected, name


def test_cube_dual_is_octahedron_shape():
    d = dualize(cube())
    assert d.vertex_count == 6
    assert sorted(d.degree(v) for v in range(6)) == [4] * 6


def _pair_deletion_3_connected(g: SimpleGraph) -> bool:
    """Brute-force oracle: no 1- or 2-vertex cut, n >= 4, min degree 3."""
    if g.n < 4:
        raise TooSmall("need at least 4 vertices")
    if not g.is_connected():
        return False
    if min(g.degree(v) for v in range(g.n)) < 3:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.is_connected(without=(u, v)):
                return False
    return True


def test_is_3_connected_matches_pair_deletion_oracle():
    cases = [underlying_graph(m) for _, m in corpus_maps()]
    cases.append(underlying_graph(apollonian_from_draws([0, 3, 1, 7])))
    # negatives: a cycle, a near-cycle with a chord, K4 minus an edge
    cases.append(SimpleGraph(6, frozenset(
        ((i, (i + 1) % 6) if i < (i + 1) % 6 else ((i + 1) % 6, i))
        for i in range(6))))
    cases.append(SimpleGraph(4, frozenset(
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])))
    for g in cases:
        assert is_3_connected(g) == _pair_deletion_3_connected(g)


def test_is_3_connected_rejects_tiny_graphs():
    with pytest.raises(TooSmall):
        is_3_connected(SimpleGraph(3, frozenset([(0, 1), (0, 2), (1, 2)])))


def test_mirror_involution_and_genus():
    for name, m in corpus_maps():
        mm = mirror(mirror(m))
        assert mm.sigma == m.sigma, name
        assert mirror(m).euler_genus() == 0, name


def _random_rotation_of_k5(rng: random.Random) -> dict[int, list[int]]:
    adjacency = {}
    for v in range(5):
        others = [u for u in range(5) if u != v]
        rng.shuffle(others)
        adjacency[v] = others
    return adjacency


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_k5_has_no_genus_zero_rotation(seed):
    # K5 is not planar, so every rotation system has positive genus
    m = from_rotation(_random_rotation_of_k5(random.Random(seed)),
                      require_planar=False)
    assert m.euler_genus() >= 1


@given(st.lists(st.integers(0, 10 ** 6), max_size=10))
@settings(max_examples=40, deadline=None)
def test_apollonian_maps_satisfy_euler_formula(draws):
    m = apollonian_from_draws(draws)
    k = len(draws)
    assert m.vertex_count == 4 + k
    assert m.edge_count == 6 + 3 * k
    assert m.face_count == 4 + 2 * k
    assert m.vertex_count - m.edge_count + m.face_count == 2
    g = underlying_graph(m)
    assert sum(g.degree(v) for v in range(g.n)) == 2 * m.edge_count


def test_wheel_counts():
    for n in (4, 5, 6):
        m = wheel(n)
        assert m.vertex_count == n + 1
        assert m.edge_count == 2 * n
        assert m.face_count == n + 1


def test_prism_counts():
    for n in (3, 4, 5):
        m = prism(n)
        assert m.vertex_count == 2 * n
        assert m.edge_count == 3 * n
        assert m.face_count == n + 2

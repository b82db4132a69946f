"""Apollonian generation, recognition, and the edge classification."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdclab.apollonian import (
    apollonian_dual,
    check_edge_classification,
    generate_apollonian,
    is_apollonian,
    random_stacks,
    separating_triangles,
)
from cdclab.corpus import cube, k4, octahedron
from cdclab.errors import BadSelector, NotApollonian
from cdclab.planar_map import (
    SimpleGraph,
    is_3_connected,
    underlying_graph,
)
from cdclab.surgery import augment_face

from conftest import apollonian_from_draws


def test_empty_sequence_is_k4():
    m = generate_apollonian([])
    assert m.vertex_count == 4
    assert m.edge_count == 6


def test_generation_counts_and_shape():
    m = generate_apollonian([0, 2, 5])
    assert m.vertex_count == 7
    assert m.edge_count == 15
    assert m.face_count == 10
    assert all(len(f.darts) == 3 for f in m.faces)
    assert is_3_connected(underlying_graph(m))


def test_random_stacks_reproducible():
    assert random_stacks(12, 99) == random_stacks(12, 99)
    m1 = generate_apollonian(12, seed=99)
    m2 = generate_apollonian(random_stacks(12, 99))
    assert m1.sigma == m2.sigma


def test_bad_face_index_is_reported_with_step():
    with pytest.raises(BadSelector):
        generate_apollonian([99])


def test_is_apollonian_accepts_generated_networks():
    rng = random.Random(0)
    for _ in range(10):
        m = apollonian_from_draws(
            [rng.randrange(10 ** 6) for _ in range(rng.randrange(12))])
        assert is_apollonian(m)


def test_is_apollonian_rejects_non_examples():
    assert not is_apollonian(octahedron())
    assert not is_apollonian(cube())
    k4_minus = SimpleGraph(4, frozenset(
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))
    assert not is_apollonian(k4_minus)
    path = SimpleGraph(4, frozenset([(0, 1), (1, 2), (2, 3)]))
    assert not is_apollonian(path)


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_recognition_is_order_independent(seed, shuffle_seed):
    # confluence: any greedy removal order gives the same verdict
    rng = random.Random(seed)
    m = apollonian_from_draws(
        [rng.randrange(10 ** 6) for _ in range(rng.randrange(10))])
    plain = is_apollonian(m)
    shuffled = is_apollonian(m, rng=random.Random(shuffle_seed))
    assert plain is shuffled is True


def test_apollonian_dual_is_cubic():
    m = apollonian_dual([0, 3])
    assert all(m.degree(v) == 3 for v in range(m.vertex_count))
    assert is_3_connected(underlying_graph(m))


def test_k4_has_no_separating_triangle():
    report = separating_triangles(underlying_graph(k4()))
    assert report.separating == ()
    assert len(report.triangles) == 4


def test_one_stack_has_one_separating_triangle():
    m = generate_apollonian([0])
    report = separating_triangles(underlying_graph(m))
    assert len(report.separating) == 1
    # the stacked face's corners separate the apex from the rest
    (tri,) = report.separating
    g = underlying_graph(m)
    assert not g.is_connected(without=tri)


def test_edge_classification_holds_on_k4_and_one_stack():
    assert check_edge_classification(underlying_graph(k4())).passed
    assert check_edge_classification(
        underlying_graph(generate_apollonian([0]))).passed


def test_edge_classification_counterexample_two_adjacent_stacks():
    # stack into two faces sharing an edge: the K4 edge disjoint from
    # the shared edge ends at two degree-4 vertices and lies in no
    # separating triangle, so the classification fails there
    m = k4()
    face_a = next(f for f in m.faces
                  if {m.labels[v] for v in f.boundary} == {1, 2, 4})
    m2, _ = augment_face(m, face_a)
    face_b = next(f for f in m2.faces
                  if {m2.labels[v] for v in f.boundary} == {2, 3, 4})
    m3, _ = augment_face(m2, face_b)

    g = underlying_graph(m3)
    assert is_apollonian(g)
    report = check_edge_classification(g)
    assert not report.passed
    bad = [e.edge for e in report.entries if not e.ok]
    # internal ids: labels 1 and 3 sit at indices 0 and 2
    assert bad == [(0, 2)]
    assert g.degree(0) == 4 and g.degree(2) == 4


def test_edge_classification_rejects_non_apollonian():
    with pytest.raises(NotApollonian):
        check_edge_classification(underlying_graph(octahedron()))


def test_classification_report_has_all_edges():
    g = underlying_graph(generate_apollonian(6, seed=1))
    report = check_edge_classification(g)
    assert sorted(e.edge for e in report.entries) == sorted(g.edges)

"""Shared helpers for the test suite."""

from __future__ import annotations

from cdclab.corpus import cube, k4, octahedron, prism, wheel
from cdclab.planar_map import PlanarMap
from cdclab.surgery import augment_face

NAMED_CORPUS = ["k4", "prism", "cube", "octahedron", "wheel:4", "wheel:5"]


def corpus_maps() -> list[tuple[str, PlanarMap]]:
    return [
        ("k4", k4()),
        ("prism", prism(3)),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("wheel:4", wheel(4)),
        ("wheel:5", wheel(5)),
    ]


def apollonian_from_draws(draws: list[int]) -> PlanarMap:
    """Deterministic Apollonian network from arbitrary integers.

    Draw i picks a face index mod the current face count (4 + 2i), so
    every integer list is a valid stacking sequence.
    """
    m = k4()
    for i, d in enumerate(draws):
        m, _ = augment_face(m, d % (4 + 2 * i))
    return m

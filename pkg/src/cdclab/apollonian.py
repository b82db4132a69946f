"""Stacked triangulations: generation, recognition, duals, edge classes.

An Apollonian network grows from K4 by repeatedly planting a new
vertex inside a triangular face.  Recognition runs the construction
backwards; greedy removal is safe for these graphs (planar 3-trees)
and a randomized-order test backs that choice empirically.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Sequence

from .errors import BadSelector, FaceNotInMap, NotApollonian
from .planar_map import PlanarMap, SimpleGraph, dualize, underlying_graph
from .surgery import augment_face


def _base() -> PlanarMap:
    from .corpus import k4
    return k4()


def random_stacks(count: int, seed: int | None) -> list[int]:
    """A reproducible random stacking sequence of the given length.

    Step ``i`` picks a face index uniformly from the current map's
    canonical face order, so a (count, seed) pair names one network.
    """
    if count < 0:
        raise BadSelector(f"negative stack count {count}")
    rng = Random(seed)
    m = _base()
    seq: list[int] = []
    for _ in range(count):
        choice = rng.randrange(m.face_count)
        seq.append(choice)
        m, _ = augment_face(m, choice)
    return seq


def generate_apollonian(
    stacks: Sequence[int] | int,
    *,
    seed: int | None = None,
) -> PlanarMap:
    """Build an Apollonian network by face stacking.

    ``stacks`` is either an explicit sequence of face indices (each
    indexing the canonical face order of the map at that step) or a
    count, in which case faces are drawn from ``Random(seed)``.  The
    empty sequence gives K4.
    """
    if isinstance(stacks, int):
        stacks = random_stacks(stacks, seed)
    m = _base()
    for step, choice in enumerate(stacks):
        try:
            m, _ = augment_face(m, choice)
        except FaceNotInMap as exc:
            raise BadSelector(
                f"step {step}: face {choice} out of range "
                f"(map has {m.face_count} faces)") from exc
    return m


def apollonian_dual(stacks: Sequence[int] | int, *,
                    seed: int | None = None) -> PlanarMap:
    """Dual of the generated network: always cubic and 3-connected."""
    return dualize(generate_apollonian(stacks, seed=seed))


def _reduce_step(adj: dict[int, set[int]], order: Sequence[int]) -> int | None:
    """Find a removable degree-3 vertex with mutually adjacent neighbors."""
    for v in order:
        nbrs = adj[v]
        if len(nbrs) != 3:
            continue
        a, b, c = nbrs
        if b in adj[a] and c in adj[a] and c in adj[b]:
            return v
    return None


def is_apollonian(g: SimpleGraph | PlanarMap,
                  rng: Random | None = None) -> bool:
    """Whether ``g`` reduces to K4 by unstacking degree-3 vertices.

    ``rng`` only shuffles the removal order (used by confluence tests);
    the verdict must not depend on it.
    """
    if isinstance(g, PlanarMap):
        g = underlying_graph(g)
    if not g.is_connected():
        return False
    adj = {v: set(nbrs) for v, nbrs in g.adjacency.items()}
    while len(adj) > 4:
        order = sorted(adj)
        if rng is not None:
            rng.shuffle(order)
        v = _reduce_step(adj, order)
        if v is None:
            return False
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
    return (len(adj) == 4
            and all(len(nbrs) == 3 for nbrs in adj.values()))


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]
    separating: bool


@dataclass(frozen=True)
class TriangleSet:
    """All induced triangles of a graph, flagged by the cut test."""

    triangles: tuple[Triangle, ...]

    @property
    def separating(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(t.vertices for t in self.triangles if t.separating)

    @property
    def facial(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(t.vertices for t in self.triangles if not t.separating)


def separating_triangles(g: SimpleGraph | PlanarMap) -> TriangleSet:
    """Classify every triangle by whether deleting it disconnects ``g``."""
    if isinstance(g, PlanarMap):
        g = underlying_graph(g)
    adj = g.adjacency
    out: list[Triangle] = []
    for u in range(g.n):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[u] & adj[v]:
                if w <= v:
                    continue
                separating = not g.is_connected(without=(u, v, w))
                out.append(Triangle((u, v, w), separating))
    return TriangleSet(tuple(out))


@dataclass(frozen=True)
class EdgeClass:
    edge: tuple[int, int]
    degree_three: bool
    in_separating_triangle: bool

    @property
    def ok(self) -> bool:
        return self.degree_three or self.in_separating_triangle


@dataclass(frozen=True)
class ClassificationReport:
    """Per-edge check: separating triangle or degree-3 endpoint."""

    entries: tuple[EdgeClass, ...]

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)


def check_edge_classification(
        g: SimpleGraph | PlanarMap) -> ClassificationReport:
    """Classify each edge of an Apollonian network.

    Every edge must lie in a separating triangle or touch a vertex of
    degree three; inputs failing :func:`is_apollonian` are rejected.
    """
    if isinstance(g, PlanarMap):
        g = underlying_graph(g)
    if not is_apollonian(g):
        raise NotApollonian("edge classification is stated for "
                            "Apollonian networks")
    separating = [frozenset(t) for t in separating_triangles(g).separating]
    entries = []
    for u, v in sorted(g.edges):
        pair = {u, v}
        entries.append(EdgeClass(
            edge=(u, v),
            degree_three=g.degree(u) == 3 or g.degree(v) == 3,
            in_separating_triangle=any(pair <= t for t in separating),
        ))
    return ClassificationReport(tuple(entries))

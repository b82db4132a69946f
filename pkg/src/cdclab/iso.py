"""Canonical codes and isomorphism tests for maps and small graphs.

Map codes relabel darts breadth-first from every (start dart,
orientation) pair and keep the lexicographic minimum, so two maps get
equal codes iff they are isomorphic up to reflection.  Graph codes
minimize the adjacency bitstring over vertex orderings by greedy
row-by-row search, exact at desk scale.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .errors import NotThreeConnected, TooLarge
from .planar_map import (
    PlanarMap,
    SimpleGraph,
    dualize,
    is_3_connected,
    normalize_edge,
)
from .surgery import complete_augmentation, complete_truncation

_MAP_CODE_VERSION = b"M1"
_GRAPH_CODE_VERSION = b"G1"


def _bfs_rows(perm: tuple[int, ...], start: int,
              best: list[tuple[int, int]] | None) -> list[tuple[int, int]] | None:
    """Dart relabeling rows for one (orientation, start) run.

    Row ``j`` is ``(label of perm(d), label of alpha(d))`` for the dart
    ``d`` labeled ``j``.  When ``best`` is given, the run aborts and
    returns None as soon as it is lexicographically worse.
    """
    n = len(perm)
    label = [-1] * n
    order = [0] * n
    label[start] = 0
    order[0] = start
    assigned = 1
    rows: list[tuple[int, int]] = []
    ahead = best is None
    for j in range(n):
        d = order[j]
        nxt, opp = perm[d], d ^ 1
        if label[nxt] < 0:
            label[nxt] = assigned
            order[assigned] = nxt
            assigned += 1
        if label[opp] < 0:
            label[opp] = assigned
            order[assigned] = opp
            assigned += 1
        row = (label[nxt], label[opp])
        if not ahead:
            ref = best[j]
            if row > ref:
                return None
            if row < ref:
                ahead = True
        rows.append(row)
    return rows


def map_canonical_code(m: PlanarMap) -> bytes:
    """Invariant byte code: equal codes iff maps are isomorphic.

    Minimizes over all starting darts and both global orientations, so
    mirror images compare equal.
    """
    sigma = m.sigma
    sigma_inv = [0] * m.dart_count
    for d, e in enumerate(sigma):
        sigma_inv[e] = d
    best: list[tuple[int, int]] | None = None
    for perm in (sigma, tuple(sigma_inv)):
        for start in range(m.dart_count):
            rows = _bfs_rows(perm, start, best)
            if rows is not None and (best is None or rows < best):
                best = rows
    assert best is not None
    payload = struct.pack(">I", m.dart_count)
    payload += b"".join(struct.pack(">HH", a, b) for a, b in best)
    return _MAP_CODE_VERSION + payload


def maps_isomorphic(m1: PlanarMap, m2: PlanarMap) -> bool:
    """Map isomorphism (reflections count as equal)."""
    if (m1.vertex_count, m1.edge_count) != (m2.vertex_count, m2.edge_count):
        return False
    return map_canonical_code(m1) == map_canonical_code(m2)


_SURVIVOR_CAP = 200_000


def graph_canonical_code(g: SimpleGraph, *, max_n: int = 40) -> bytes:
    """Exact canonical form of a small abstract graph.

    Greedy lexicographic minimization of the row-by-row adjacency
    bitstring; all orderings achieving the minimal prefix survive to
    the next row.  Exponential in the worst case, hence the hard
    ``max_n`` bound (TooLarge beyond it).
    """
    if g.n > max_n:
        raise TooLarge(f"graph code capped at {max_n} vertices, got {g.n}")
    adj = g.adjacency
    survivors: list[tuple[int, ...]] = [()]
    code_rows: list[tuple[int, ...]] = []
    for step in range(g.n):
        best_row: tuple[int, ...] | None = None
        extended: list[tuple[int, ...]] = []
        for placed in survivors:
            used = set(placed)
            for cand in range(g.n):
                if cand in used:
                    continue
                row = tuple(1 if p in adj[cand] else 0 for p in placed)
                if best_row is None or row < best_row:
                    best_row = row
                    extended = [placed + (cand,)]
                elif row == best_row:
                    extended.append(placed + (cand,))
        if len(extended) > _SURVIVOR_CAP:
            raise TooLarge("canonical ordering search exploded")
        survivors = extended
        code_rows.append(best_row if best_row is not None else ())
    bits = "".join("".join(map(str, row)) for row in code_rows)
    packed = int(bits, 2).to_bytes((len(bits) + 7) // 8, "big") if bits else b""
    return _GRAPH_CODE_VERSION + struct.pack(">I", g.n) + packed


def graphs_isomorphic(g1: SimpleGraph, g2: SimpleGraph, *,
                      max_n: int = 40) -> bool:
    """Whether two abstract graphs admit an edge-preserving bijection."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != \
            sorted(g2.degree(v) for v in range(g2.n)):
        return False
    return graph_canonical_code(g1, max_n=max_n) == \
        graph_canonical_code(g2, max_n=max_n)


@dataclass(frozen=True)
class SquareReport:
    """Outcome of the augmentation/truncation duality check.

    Side A is the complete augmentation of the dual; side B is the
    dual of the complete truncation.  ``isomorphic`` compares map
    codes; ``phi_valid`` checks the explicit vertex bijection built
    from the correspondence tables, edge by edge.
    """

    vertices: int
    edges: int
    isomorphic: bool
    phi_valid: bool
    code_a: str
    code_b: str
    phi: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return self.isomorphic and self.phi_valid


def verify_square(m: PlanarMap) -> SquareReport:
    """Check that dualization commutes augmentation with truncation.

    Builds both sides for the host ``m``, compares canonical map
    codes, and independently validates the natural vertex bijection:
    faces of ``m`` pair the retained dual vertices with the face-faces
    of the truncation, and vertices of ``m`` pair the augmentation
    apexes with the corner cycles.
    """
    if not is_3_connected(m):
        raise NotThreeConnected("the square is stated for 3-connected hosts")
    dual = dualize(m)
    side_a, _ = complete_augmentation(dual)
    t_map, t_corr = complete_truncation(m)
    side_b = dualize(t_map)

    code_a = map_canonical_code(side_a)
    code_b = map_canonical_code(side_b)

    # Vertex dictionary of side A: ids below F(m) are dual vertices
    # (faces of m); apex ids F(m) + fd stand for dual faces, and dual
    # face fd is the sigma orbit of a vertex of m.
    f_count = m.face_count
    vertex_of_dual_face = {
        f.index: m.vertex_of[f.darts[0]] for f in dual.faces}

    # Vertex dictionary of side B: ids are faces of the truncation;
    # face-faces realize faces of m, corner cycles realize vertices.
    t_face_index = {frozenset(f.boundary): f.index for f in t_map.faces}
    b_of_m_vertex = {
        v: t_face_index[frozenset(cycle)]
        for v, cycle in t_corr.vertex_faces.items()}

    phi: dict[int, int] = {}
    for a in range(side_a.vertex_count):
        if a < f_count:
            phi[a] = t_corr.face_faces[a]
        else:
            phi[a] = b_of_m_vertex[vertex_of_dual_face[a - f_count]]

    phi_valid = (
        side_a.vertex_count == side_b.vertex_count
        and sorted(phi.values()) == list(range(side_b.vertex_count))
        and {normalize_edge(phi[u], phi[v]) for u, v in side_a.edges()}
        == set(side_b.edges())
        and side_a.edge_count == side_b.edge_count)

    return SquareReport(
        vertices=side_a.vertex_count,
        edges=side_a.edge_count,
        isomorphic=code_a == code_b,
        phi_valid=phi_valid,
        code_a=code_a.hex(),
        code_b=code_b.hex(),
        phi=tuple(sorted(phi.items())),
    )


def cross_check_isomorphism(m1: PlanarMap, m2: PlanarMap) -> bool:
    """Graph-level isomorphism decided through the map-code path.

    Valid for 3-connected planar inputs, whose plane embedding is
    unique up to reflection; used as a fast alternative to the
    brute-force graph code.
    """
    if not (is_3_connected(m1) and is_3_connected(m2)):
        raise NotThreeConnected("map-code shortcut needs 3-connected inputs")
    return maps_isomorphic(m1, m2)

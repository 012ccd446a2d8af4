"""Cyclic covers of maps: pick a gluing cycle, cut along it and glue d
copies of the cut map in a ring.

Cutting along a two-sided cycle C = (c_0, ..., c_(k-1)) duplicates every
c_i into an A-side and a B-side clone. At c_i the two cycle edges split
the face-cycle into two arcs; which arc is the A-side is fixed at c_0 and
carried along C through the faces on either side of each cycle edge. If
the walk comes back to c_0 with the sides exchanged, C is one-sided.
"""

import logging
from dataclasses import dataclass
import networkx as nx
from homcode import gf2
from homcode.constants import side
from homcode.css import build_css
from homcode.errors import (NoSuchCycle, NotACycle, OneSidedCycle,
                            DisconnectedCover, Disconnected)
from homcode.polygonal_map import polygonal_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class cover_spec:
    """Gluing cycle (0-based vertex ids) and number of sheets.
    """
    cycle: tuple[int, ...]
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'cycle', tuple(int(v) for v in self.cycle))
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError('d must be a positive integer')


@dataclass(frozen=True)
class cut_result:
    """Map cut open along a cycle.

    Vertex ids below the base map's vertex count are kept; cycle vertex
    c_i has its A-side clone at c_i and its B-side clone at V + i.

    Attributes:
        faces (tuple):      Faces re-pointed to clones.
        num_vertices (int): V + k.
        cycle (tuple):      Cut cycle in the base map.
        sides (dict):       (face, cycle vertex) -> side, for every face
                            touching the cycle.
        boundary_a (tuple): A-side boundary cycle, in cycle order.
        boundary_b (tuple): B-side boundary cycle, in cycle order.
    """
    faces: tuple[tuple[int, ...], ...]
    num_vertices: int
    cycle: tuple[int, ...]
    sides: dict
    boundary_a: tuple[int, ...]
    boundary_b: tuple[int, ...]

    def edge_counts(self) -> dict:
        """Number of faces on each edge of the cut map.
        """
        counts = {}
        for face in self.faces:
            for u, v in zip(face, face[1:] + face[:1]):
                pair = (u, v) if u < v else (v, u)
                counts[pair] = counts.get(pair, 0) + 1
        return counts

    @property
    def num_edges(self) -> int:
        return len(self.edge_counts())

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def boundary_edges(self) -> list[tuple[int, int]]:
        return sorted(e for e, count in self.edge_counts().items()
                      if count == 1)

    def clones(self, v: int) -> tuple[int, int]:
        """(A-side, B-side) clone ids of cycle vertex v.
        """
        i = self.cycle.index(v)
        return self.boundary_a[i], self.boundary_b[i]


def check_cycle(m: polygonal_map, cycle) -> tuple[int, ...]:
    """Validate a closed walk of distinct vertices along edges of m.

    Raises:
        NotACycle: With the reason the walk is rejected.
    """
    cycle = tuple(int(v) for v in cycle)
    if len(cycle) < 3:
        raise NotACycle(list(cycle), 'fewer than 3 vertices')
    for v in cycle:
        if not 0 <= v < m.num_vertices:
            raise NotACycle(list(cycle), f'no vertex {v + 1}')
    if len(set(cycle)) != len(cycle):
        raise NotACycle(list(cycle), 'a vertex repeats')
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        if not m.has_edge(u, v):
            raise NotACycle(list(cycle), f'no edge {u + 1}-{v + 1}')
    return cycle


def _arcs(m: polygonal_map, v: int, e_prev: int, e_next: int):
    """Split the face-cycle at v by the edges e_prev and e_next.

    Returns:
        (list, list): Faces from e_prev to e_next, and from e_next back
                      to e_prev, in rotation order.
    """
    rotation = m.rotations[v]
    edges = [e for e, _ in rotation]
    p, q = edges.index(e_prev), edges.index(e_next)
    size = len(rotation)
    first = [rotation[(p + i) % size][1] for i in range((q - p) % size)]
    second = [rotation[(q + i) % size][1] for i in range((p - q) % size)]
    return first, second


def cut_along(m: polygonal_map, cycle) -> cut_result:
    """Cut m open along a two-sided cycle.

    Args:
        m (polygonal_map):  Base map.
        cycle (list):       Vertex ids (0-based) in cycle order.

    Raises:
        NotACycle:      If cycle is not a cycle of m.
        OneSidedCycle:  If the neighbourhood of cycle is a Moebius band.

    Returns:
        cut_result: The cut map with V+k vertices, E+k edges, F faces.
    """
    cycle = check_cycle(m, cycle)
    k = len(cycle)
    cycle_edges = [m.edge_index(cycle[i], cycle[(i + 1) % k])
                   for i in range(k)]
    sides = {}
    # Faces on the A-side of the edge entering c_i
    a_face = None
    for i, v in enumerate(cycle):
        first, second = _arcs(m, v, cycle_edges[i - 1], cycle_edges[i])
        if a_face is None or a_face in first:
            a_arc, b_arc = first, second
        else:
            a_arc, b_arc = second, first
        for f in a_arc:
            sides[(f, v)] = side.A
        for f in b_arc:
            sides[(f, v)] = side.B
        # Face on the A-side of the outgoing cycle edge
        pair = m.edge_faces(cycle_edges[i])
        a_face = pair[0] if sides.get((pair[0], v)) == side.A else pair[1]
    if sides[(a_face, cycle[0])] != side.A:
        raise OneSidedCycle(list(cycle))

    clone = {v: m.num_vertices + i for i, v in enumerate(cycle)}
    faces = []
    for f, face in enumerate(m.faces):
        faces.append(tuple(
            clone[x] if sides.get((f, x)) == side.B else x for x in face))
    result = cut_result(faces=tuple(faces),
                        num_vertices=m.num_vertices + k,
                        cycle=cycle,
                        sides=sides,
                        boundary_a=cycle,
                        boundary_b=tuple(clone[v] for v in cycle))
    logger.debug('Cut along %s: %d boundary edges', _labels(cycle),
                 len(result.boundary_edges()))
    return result


def d_cover(m: polygonal_map, spec: cover_spec) -> polygonal_map:
    """Glue spec.d copies of m cut along spec.cycle in a ring.

    Copy j of vertex v is j*V + v. The B-side of copy j is glued to the
    A-side of copy j+1 (mod d), so a cycle vertex c seen from the B-side in
    copy j is ((j+1) mod d)*V + c.

    Raises:
        NotACycle:          If spec.cycle is not a cycle of m.
        OneSidedCycle:      If spec.cycle is one-sided.
        DisconnectedCover:  If the glued map falls apart (the cycle
                            separates m).

    Returns:
        polygonal_map: Map with d*V vertices, d*E edges and d*F faces.
    """
    cut = cut_along(m, spec.cycle)
    V, d = m.num_vertices, spec.d
    faces = []
    for j in range(d):
        for f, face in enumerate(m.faces):
            faces.append([((j + 1) % d) * V + x
                          if cut.sides.get((f, x)) == side.B else j * V + x
                          for x in face])
    try:
        cover = polygonal_map.from_faces(faces)
    except Disconnected as error:
        raise DisconnectedCover(list(spec.cycle),
                                error.components) from error
    logger.info('Built %d-sheeted cover along %s: %s', d,
                _labels(spec.cycle), cover.summary())
    return cover


def is_two_sided(m: polygonal_map, cycle) -> bool:
    try:
        cut_along(m, cycle)
    except OneSidedCycle:
        return False
    return True


def _normalize(m: polygonal_map, cycle) -> list[int]:
    """Start at the least vertex and head towards its smaller cycle
    neighbour.
    """
    cycle = list(cycle)
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def find_gluing_cycle(m: polygonal_map, hz_rref: gf2.echelon_form = None):
    """Shortest homologically nontrivial two-sided cycle of m.

    Cycles are enumerated by increasing length. Among those of the least
    length that pass both tests, the one with the lexicographically least
    sorted edge-index tuple is returned.

    Args:
        m (polygonal_map):              Base map.
        hz_rref (echelon_form, optional): Reduced face-edge matrix of m.

    Raises:
        NoSuchCycle: If m has no such cycle.

    Returns:
        list: Vertex ids (0-based), starting at the least vertex.
    """
    if m.euler_characteristic() >= 1:
        raise NoSuchCycle(f'chi={m.euler_characteristic()}: no '
                          f'nontrivial two-sided cycle exists')
    if hz_rref is None:
        hz_rref = gf2.rref(build_css(m).hz)
    E = m.num_edges
    for length in range(3, m.num_vertices + 1):
        candidates = []
        for cycle in nx.simple_cycles(m.graph, length_bound=length):
            if len(cycle) != length:
                continue
            edges = tuple(sorted(m.edge_index(u, v) for u, v
                                 in zip(cycle, cycle[1:] + cycle[:1])))
            candidates.append((edges, cycle))
        candidates.sort()
        logger.debug('%d cycles of length %d', len(candidates), length)
        for edges, cycle in candidates:
            if gf2.in_rowspace(hz_rref, gf2.vector(E, edges)):
                continue
            if not is_two_sided(m, cycle):
                continue
            chosen = _normalize(m, cycle)
            logger.info('Gluing cycle %s', _labels(chosen))
            return chosen
    raise NoSuchCycle('No nontrivial two-sided cycle found')


def _labels(cycle) -> str:
    return 'C(' + ','.join(str(v + 1) for v in cycle) + ')'

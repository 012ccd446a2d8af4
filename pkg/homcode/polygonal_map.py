"""Polygonal maps on closed surfaces.

A map is given by its faces, each a cyclic sequence of distinct vertex
ids. Edges, face-cycles (rotations) at vertices, vertex types, duals,
orientability and isomorphism are derived from the face list. Nothing
assumes a global orientation, so non-orientable surfaces are handled the
same way as orientable ones.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass
from itertools import groupby
import networkx as nx
from homcode.errors import (ShortFace, RepeatedVertexInFace,
                            NonContiguousVertices, OpenEdge, PinchedVertex,
                            Disconnected, NonSimpleDual)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class vertex_type:
    """Cyclic run-length sequence of face sizes around a vertex, stored
    as the least (size, multiplicity) tuple over all rotations and
    reflections.
    """
    runs: tuple[tuple[int, int], ...]

    @classmethod
    def from_sizes(cls, sizes) -> 'vertex_type':
        """Canonical type of a face-cycle given the sizes of its faces in
        cyclic order.
        """
        sizes = list(sizes)
        if not sizes:
            raise ValueError('A face-cycle needs at least one face')
        if len(set(sizes)) == 1:
            return cls(((sizes[0], len(sizes)),))
        # Start at a run boundary so no run wraps around the end
        start = next(i for i in range(len(sizes)) if sizes[i] != sizes[i - 1])
        sizes = sizes[start:] + sizes[:start]
        runs = [(size, len(list(group))) for size, group in groupby(sizes)]
        candidates = []
        for seq in (runs, runs[::-1]):
            for i in range(len(seq)):
                candidates.append(tuple(seq[i:] + seq[:i]))
        return cls(min(candidates))

    @classmethod
    def parse(cls, text: str) -> 'vertex_type':
        """Parse the printed form, e.g. '[4^3,5^1]' or '[3^7]'.

        Raises:
            ValueError: If text is not of that form.
        """
        body = text.strip()
        if not (body.startswith('[') and body.endswith(']')):
            raise ValueError(f'Invalid vertex type {text!r}')
        sizes = []
        for run in body[1:-1].split(','):
            size, _, count = run.strip().partition('^')
            try:
                sizes.extend([int(size)] * (int(count) if count else 1))
            except ValueError as error:
                raise ValueError(f'Invalid vertex type {text!r}') from error
        return cls.from_sizes(sizes)

    @property
    def degree(self) -> int:
        return sum(count for _, count in self.runs)

    @property
    def is_equivelar(self) -> bool:
        return len(self.runs) == 1

    def __str__(self):
        return '[' + ','.join(f'{s}^{c}' for s, c in self.runs) + ']'


@dataclass(frozen=True)
class not_semi_equivelar:
    """Two vertices whose types differ (ids are 0-based).
    """
    first: int
    second: int
    first_type: vertex_type
    second_type: vertex_type

    def __str__(self):
        return 'mixed'


class polygonal_map:
    """Map on a closed surface given by its faces.

    Faces are stored exactly as given (after shifting labels to start at
    0). Edges are the unordered vertex pairs on face boundaries, sorted
    lexicographically; an edge's index is its position in that list.
    """

    def __init__(self, face_lists):
        """Validate a face list and build edges and rotations.

        Labels are shifted so that the least label becomes 0; files use
        1-based labels, internal lists 0-based ones.

        Args:
            face_lists (list): Faces, each a list of vertex labels in
                               cyclic order.

        Raises:
            ShortFace:              If a face has fewer than 3 vertices.
            RepeatedVertexInFace:   If a face visits a vertex twice.
            NonContiguousVertices:  If labels skip a value.
            OpenEdge:               If a pair lies on other than 2 faces.
            PinchedVertex:          If the faces at a vertex form more
                                    than one cycle.
            Disconnected:           If the edge graph is disconnected.
        """
        faces = [tuple(int(v) for v in face) for face in face_lists]
        if not faces:
            raise ValueError('A map needs at least one face')
        for f, face in enumerate(faces):
            if len(face) < 3:
                raise ShortFace(f, len(face))
        low = min(min(face) for face in faces)
        faces = [tuple(v - low for v in face) for face in faces]
        for f, face in enumerate(faces):
            counts = Counter(face)
            repeated = [v for v in face if counts[v] > 1]
            if repeated:
                raise RepeatedVertexInFace(f, repeated[0])
        labels = set(v for face in faces for v in face)
        num_vertices = max(labels) + 1
        if len(labels) != num_vertices:
            raise NonContiguousVertices(
                sorted(set(range(num_vertices)) - labels))

        pairs = Counter()
        for face in faces:
            for u, v in _boundary(face):
                pairs[_key(u, v)] += 1
        for pair in sorted(pairs):
            if pairs[pair] != 2:
                raise OpenEdge(pair, pairs[pair])

        self._faces = tuple(faces)
        self._num_vertices = num_vertices
        self._edges = tuple(sorted(pairs))
        self._edge_index = {e: i for i, e in enumerate(self._edges)}
        edge_faces = [[] for _ in self._edges]
        face_edges = []
        for f, face in enumerate(faces):
            indices = tuple(self._edge_index[_key(u, v)]
                            for u, v in _boundary(face))
            face_edges.append(indices)
            for e in indices:
                edge_faces[e].append(f)
        self._edge_faces = tuple(tuple(pair) for pair in edge_faces)
        self._face_edges = tuple(face_edges)
        self._positions = tuple({v: i for i, v in enumerate(face)}
                                for face in faces)
        self._rotations = tuple(self._build_rotation(v)
                                for v in range(num_vertices))

        graph = nx.Graph()
        graph.add_nodes_from(range(num_vertices))
        graph.add_edges_from(self._edges)
        components = nx.number_connected_components(graph)
        if components != 1:
            raise Disconnected(components)
        self._graph = graph
        logger.debug('Built map V=%d E=%d F=%d', num_vertices,
                     len(self._edges), len(faces))

    @classmethod
    def from_faces(cls, face_lists) -> 'polygonal_map':
        return cls(face_lists)

    def _build_rotation(self, v: int) -> tuple[tuple[int, int], ...]:
        """Walk the corners at v across shared edges. Each entry is
        (edge, face): the edge entering the face in the walk order.
        """
        corners = []
        by_edge = {}
        for f, face in enumerate(self._faces):
            i = self._positions[f].get(v)
            if i is None:
                continue
            length = len(face)
            prev_e = self._edge_index[_key(v, face[i - 1])]
            next_e = self._edge_index[_key(v, face[(i + 1) % length])]
            c = len(corners)
            corners.append((f, prev_e, next_e))
            by_edge.setdefault(prev_e, []).append(c)
            by_edge.setdefault(next_e, []).append(c)

        visited = [False] * len(corners)
        cycles = []
        for start in range(len(corners)):
            if visited[start]:
                continue
            cycle = []
            c, e_in = start, corners[start][1]
            while not visited[c]:
                visited[c] = True
                f, prev_e, next_e = corners[c]
                cycle.append((e_in, f))
                e_out = next_e if e_in == prev_e else prev_e
                a, b = by_edge[e_out]
                c = b if a == c else a
                e_in = e_out
            cycles.append(tuple(cycle))
        if len(cycles) != 1:
            raise PinchedVertex(v, len(cycles))
        return cycles[0]

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def num_faces(self) -> int:
        return len(self._faces)

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return self._faces

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def rotations(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return self._rotations

    @property
    def graph(self) -> nx.Graph:
        """Edge graph; treat as read-only.
        """
        return self._graph

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge {u, v}.

        Raises:
            KeyError: If u and v are not adjacent.
        """
        return self._edge_index[_key(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._edge_index

    def edge_faces(self, e: int) -> tuple[int, int]:
        return self._edge_faces[e]

    def face_edges(self, f: int) -> tuple[int, ...]:
        """Edge indices along face f; entry i joins positions i, i+1.
        """
        return self._face_edges[f]

    def position(self, f: int, v: int) -> int:
        """Position of vertex v in face f, or -1.
        """
        return self._positions[f].get(v, -1)

    def degree(self, v: int) -> int:
        return len(self._rotations[v])

    def neighbours(self, v: int) -> list[int]:
        return sorted(self._graph.neighbors(v))

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def vertex_types(self) -> list[vertex_type]:
        return [vertex_type.from_sizes(len(self._faces[f]) for _, f in rot)
                for rot in self._rotations]

    def vertex_type(self):
        """Common type of all vertices.

        Returns:
            vertex_type: If every vertex has the same type, otherwise a
                         not_semi_equivelar naming two differing vertices.
        """
        types = self.vertex_types()
        for v, t in enumerate(types):
            if t != types[0]:
                return not_semi_equivelar(0, v, types[0], t)
        return types[0]

    def dual(self) -> 'polygonal_map':
        """Dual map: one vertex per face, one face per vertex rotation.

        Raises:
            NonSimpleDual: If two faces share more than one edge.
        """
        shared = Counter(self._edge_faces)
        for pair, count in shared.items():
            if count > 1:
                raise NonSimpleDual(tuple(sorted(pair)))
        return polygonal_map([[f for _, f in rot] for rot in self._rotations])

    def is_orientable(self) -> bool:
        """Check whether faces can be oriented so that every edge is
        traversed once in each direction (parity BFS over faces).
        """
        sign = [0] * self.num_faces
        for root in range(self.num_faces):
            if sign[root]:
                continue
            sign[root] = 1
            queue = deque([root])
            while queue:
                f = queue.popleft()
                for e in self._face_edges[f]:
                    g = _other(self._edge_faces[e], f)
                    u, v = self._edges[e]
                    wanted = -sign[f] * self._direction(f, u, v) \
                        * self._direction(g, u, v)
                    if sign[g] == 0:
                        sign[g] = wanted
                        queue.append(g)
                    elif sign[g] != wanted:
                        return False
        return True

    def _direction(self, f: int, u: int, v: int) -> int:
        face = self._faces[f]
        i = self._positions[f][u]
        return 1 if face[(i + 1) % len(face)] == v else -1

    def is_isomorphic(self, other: 'polygonal_map') -> bool:
        """Check for a vertex bijection carrying faces onto faces (as
        cyclic sequences up to rotation and reflection).

        An anchored corner of self is matched against every flag of other;
        each choice determines the rest of the bijection by propagation
        across edges.
        """
        if self._invariants() != other._invariants():
            return False
        anchor = self._faces[0]
        for g, target in enumerate(other._faces):
            if len(target) != len(anchor):
                continue
            for j in range(len(target)):
                for t in (1, -1):
                    if self._relabelling_from(other, g, j, t) is not None:
                        return True
        return False

    def _invariants(self):
        return (self.num_vertices, self.num_edges, self.num_faces,
                sorted(len(face) for face in self._faces),
                sorted(Counter(self.vertex_types()).items(),
                       key=lambda item: (item[0].runs, item[1])))

    def _relabelling_from(self, other: 'polygonal_map', g0: int, j0: int,
                          t0: int):
        """Propagate the flag (face 0, position 0, forward) -> (g0, j0, t0).

        Returns:
            list: The vertex bijection, or None if it does not extend.
        """
        phi = [-1] * self.num_vertices
        inv = [-1] * other.num_vertices
        face_map = {}
        used = set()

        def assign(f, i, s, g, j, t):
            if g in used:
                return False
            face, target = self._faces[f], other._faces[g]
            length = len(face)
            if len(target) != length:
                return False
            for step in range(length):
                x = face[(i + s * step) % length]
                y = target[(j + t * step) % length]
                if phi[x] == -1 and inv[y] == -1:
                    phi[x], inv[y] = y, x
                elif phi[x] != y or inv[y] != x:
                    return False
            face_map[f] = g
            used.add(g)
            return True

        if not assign(0, 0, 1, g0, j0, t0):
            return None
        queue = deque([0])
        while queue:
            f = queue.popleft()
            g = face_map[f]
            face = self._faces[f]
            for i, e in enumerate(self._face_edges[f]):
                x, y = face[i], face[(i + 1) % len(face)]
                f2 = _other(self._edge_faces[e], f)
                e2 = other._edge_index.get(_key(phi[x], phi[y]))
                if e2 is None or g not in other._edge_faces[e2]:
                    return None
                g2 = _other(other._edge_faces[e2], g)
                if f2 in face_map:
                    if face_map[f2] != g2:
                        return None
                    continue
                i2 = self._positions[f2][x]
                s2 = 1 if self._faces[f2][(i2 + 1) % len(self._faces[f2])] \
                    == y else -1
                j2 = other._positions[g2][phi[x]]
                target = other._faces[g2]
                t2 = 1 if target[(j2 + 1) % len(target)] == phi[y] else -1
                if not assign(f2, i2, s2, g2, j2, t2):
                    return None
                queue.append(f2)
        if len(face_map) != self.num_faces:
            return None
        return phi

    def summary(self) -> str:
        """One-line 'V=.. E=.. F=.. chi=.. type=..' description.
        """
        return (f'V={self.num_vertices} E={self.num_edges} '
                f'F={self.num_faces} chi={self.euler_characteristic()} '
                f'type={self.vertex_type()}')

    def __repr__(self):
        return (f'polygonal_map(V={self.num_vertices}, E={self.num_edges}, '
                f'F={self.num_faces})')


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _boundary(face):
    return zip(face, face[1:] + face[:1])


def _other(pair, item):
    a, b = pair
    return b if a == item else a


def parse_map(text: str) -> polygonal_map:
    """Parse the .map format: one face per line as whitespace-separated
    1-based vertex ids; '#' starts a comment.

    Raises:
        ValueError: If a line is not a list of ids or the least id is not
                    1.
    """
    faces = []
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split('#', 1)[0].strip()
        if not body:
            continue
        try:
            faces.append([int(token) for token in body.split()])
        except ValueError as error:
            raise ValueError(f'Line {number}: expected vertex ids, '
                             f'got {body!r}') from error
    low = min((min(face) for face in faces), default=1)
    if low != 1:
        raise ValueError(f'Vertex ids in a .map file start at 1, got {low}')
    return polygonal_map(faces)


def format_map(m: polygonal_map, comments=()) -> str:
    """Faces in stored order, 1-based, one per line, after optional
    '#' comment lines.
    """
    lines = [f'# {comment}' for comment in comments]
    lines.extend(' '.join(str(v + 1) for v in face) for face in m.faces)
    return '\n'.join(lines) + '\n'


def read_map(path) -> polygonal_map:
    with open(path, encoding='utf-8') as f:
        return parse_map(f.read())


def write_map(m: polygonal_map, path, comments=()) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_map(m, comments))

"""Minimum distance of map codes.

d_min is the least weight of a nontrivial cycle of the map (delta) or of
its dual (delta_star). The dual is read off H_Z as the face adjacency
multigraph: dual edge e joins the two faces on primal edge e, so primal and
dual share edge indices.
"""

import logging
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from homcode import gf2
from homcode.constants import distance_method, logical
from homcode.errors import NoNontrivialCycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class unresolved:
    """No logical up to weight_cap, so d_min > weight_cap.
    """
    weight_cap: int

    def __str__(self):
        return f'>{self.weight_cap}'


@dataclass(frozen=True)
class distance_result:
    """Distance of a code with witnesses.

    Attributes:
        d_min (int):            min(delta, delta_star).
        delta (int):            Shortest nontrivial cycle, or None when
                                only known to exceed d_min.
        delta_star (int):       Same in the dual.
        witness (tuple):        Edge indices of a delta cycle.
        witness_star (tuple):   Edge indices of a delta_star cycle.
        method (distance_method): Engine that produced the result.
    """
    d_min: int
    delta: int = None
    delta_star: int = None
    witness: tuple[int, ...] = ()
    witness_star: tuple[int, ...] = ()
    method: distance_method = distance_method.BFS

    def best_witness(self) -> tuple[logical, tuple[int, ...]]:
        if self.delta == self.d_min:
            return logical.CYCLE, self.witness
        return logical.COCYCLE, self.witness_star


class distance_engine(ABC):
    """Distance search over a code and its map.
    """
    method = None

    @abstractmethod
    def shortest(self, code, kind: logical) -> tuple[int, tuple[int, ...]]:
        """Least weight logical of one kind.

        Args:
            code (css_code):    Code to search.
            kind (logical):     Cycles (delta) or cocycles (delta_star).

        Raises:
            NoNontrivialCycle: If the code encodes nothing.

        Returns:
            (int, tuple): Weight and sorted edge indices of a witness.
                          Engines that stop at a weight cap return
                          unresolved(cap) instead when nothing is found.
        """
        pass

    @abstractmethod
    def distance(self, code) -> distance_result:
        """d_min of the code with witnesses.

        Raises:
            NoNontrivialCycle: If the code encodes nothing.
        """
        pass


def graph_of(code, kind: logical):
    """Endpoints of every edge in the graph whose cycles are the logicals
    of one kind, with the reduced matrix deciding triviality.

    Returns:
        (int, list, echelon_form): Node count, endpoints per edge index,
                                   reduced matrix.
    """
    check = code.hx if kind is logical.CYCLE else code.hz
    reduced = code.hz_rref if kind is logical.CYCLE else code.hx_rref
    dense = check.dense()
    ends = []
    for e in range(check.cols):
        nodes = [int(x) for x in dense[:, e].nonzero()[0]]
        if len(nodes) != 2:
            raise ValueError(f'Column {e + 1} has weight {len(nodes)}, '
                             f'expected 2')
        ends.append(tuple(nodes))
    return check.rows, ends, reduced


def shortest_cycle_in(num_nodes: int, ends, reduced: gf2.echelon_form):
    """Shortest cycle of a multigraph whose edge vector is outside the row
    space of reduced.

    A breadth-first tree is grown from every node. Each non-tree edge
    closes a candidate made of the two tree paths and the edge; it is kept
    only if the paths meet at the root alone, so candidates are simple
    cycles. A least-weight nontrivial element of the cycle space is always
    of this form for some root.

    Returns:
        (int, tuple): Length and sorted edge indices, or (None, ()) if
                      every cycle is trivial.
    """
    adjacency = [[] for _ in range(num_nodes)]
    for e, (a, b) in enumerate(ends):
        adjacency[a].append((b, e))
        adjacency[b].append((a, e))
    E = len(ends)
    best, witness = None, ()
    tested = 0
    for root in range(num_nodes):
        depth = [-1] * num_nodes
        parent = [-1] * num_nodes
        top = [-1] * num_nodes
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in adjacency[x]:
                if depth[y] == -1:
                    depth[y] = depth[x] + 1
                    parent[y] = e
                    top[y] = y if x == root else top[x]
                    queue.append(y)
        candidates = []
        for e, (a, b) in enumerate(ends):
            if depth[a] == -1 or parent[a] == e or parent[b] == e:
                continue
            if a != root and b != root and top[a] == top[b]:
                continue
            candidates.append((depth[a] + depth[b] + 1, e))
        candidates.sort()
        for length, e in candidates:
            if best is not None and length >= best:
                break
            edges = _path(ends, parent, ends[e][0], root) \
                + _path(ends, parent, ends[e][1], root) + [e]
            tested += 1
            if not gf2.in_rowspace(reduced, gf2.vector(E, edges)):
                best, witness = length, tuple(sorted(edges))
                break
    logger.debug('Tested %d candidate cycles, shortest nontrivial %s',
                 tested, best)
    return best, witness


def _path(ends, parent, x, root) -> list[int]:
    edges = []
    while x != root:
        e = parent[x]
        edges.append(e)
        a, b = ends[e]
        x = a if b == x else b
    return edges


def shortest_nontrivial_cycle(m, hz_rref: gf2.echelon_form):
    """Shortest cycle of map m whose edge vector is outside rowspace(H_Z).

    Raises:
        NoNontrivialCycle: If every cycle of m bounds (k = 0).

    Returns:
        (int, tuple): Length and sorted edge indices of a witness.
    """
    length, witness = shortest_cycle_in(m.num_vertices, list(m.edges),
                                        hz_rref)
    if length is None:
        raise NoNontrivialCycle('Every cycle of the map is trivial (k=0)')
    return length, witness


def distance(code, method: distance_method = distance_method.BFS,
             limit: int = None) -> distance_result:
    """d_min of a map code by breadth-first search or enumeration.

    Args:
        code (css_code):            Code to search.
        method (distance_method):   BFS or ORACLE.
        limit (int, optional):      Subset budget for the oracle. Defaults
                                    to budget.SUBSETS.

    Raises:
        NoNontrivialCycle:  If k = 0.
        MethodTooExpensive: If the oracle would exceed its budget.
    """
    if method is distance_method.BFS:
        from homcode.bfs import bfs_engine
        engine = bfs_engine()
    elif method is distance_method.ORACLE:
        from homcode.oracle import oracle_engine
        engine = oracle_engine(limit)
    else:
        raise ValueError(f'No distance engine for {method}')
    result = engine.distance(code)
    logger.info('d_min=%d by %s', result.d_min, method.value)
    return result


def witness_labels(edges, witness) -> str:
    """Witness as comma-separated 1-based edge endpoints 'u-v'.
    """
    return ','.join(f'{edges[e][0] + 1}-{edges[e][1] + 1}' for e in witness)

"""Breadth-first implementation of the distance engine.
"""

from homcode.constants import distance_method, logical
from homcode.distance import (distance_engine, distance_result, graph_of,
                              shortest_cycle_in)
from homcode.errors import NoNontrivialCycle


class bfs_engine(distance_engine):
    method = distance_method.BFS

    def shortest(self, code, kind):
        if code.k == 0:
            raise NoNontrivialCycle('k=0: the code has no logical operators')
        num_nodes, ends, reduced = graph_of(code, kind)
        length, witness = shortest_cycle_in(num_nodes, ends, reduced)
        if length is None:
            raise NoNontrivialCycle(f'No nontrivial {kind.value} found')
        return length, witness

    def distance(self, code):
        delta, witness = self.shortest(code, logical.CYCLE)
        delta_star, witness_star = self.shortest(code, logical.COCYCLE)
        return distance_result(d_min=min(delta, delta_star),
                               delta=delta,
                               delta_star=delta_star,
                               witness=witness,
                               witness_star=witness_star,
                               method=self.method)

"""Enumeration implementation of the distance engine.

Edge subsets are enumerated by weight. A subset is a logical of one kind
when its columns of the check matrix sum to zero and its vector is outside
the row space of the other matrix. Syndromes are Python int bitsets; the
last column of each subset is looked up by syndrome, so weight w costs
C(n, w-1) steps per kind.
"""

import logging
from functools import reduce
from itertools import combinations
from math import comb
from operator import xor
from homcode import gf2
from homcode.constants import budget, distance_method, logical
from homcode.distance import distance_engine, distance_result, unresolved
from homcode.errors import MethodTooExpensive, NoNontrivialCycle

logger = logging.getLogger(__name__)


class oracle_engine(distance_engine):
    method = distance_method.ORACLE

    def __init__(self, limit: int = None):
        """Create an engine.

        Args:
            limit (int, optional):  Largest C(n, w) to enumerate. Defaults
                                    to budget.SUBSETS at search time.
        """
        self._limit = limit

    @property
    def limit(self) -> int:
        return budget.SUBSETS if self._limit is None else self._limit

    def _check_budget(self, n: int, w: int):
        subsets = comb(n, w)
        if subsets > self.limit:
            raise MethodTooExpensive(subsets, self.limit)

    def search(self, code, kind: logical, w: int):
        """First logical of one kind at exactly weight w.

        Returns:
            tuple: Sorted edge indices, or None.
        """
        check = code.hx if kind is logical.CYCLE else code.hz
        reduced = code.hz_rref if kind is logical.CYCLE else code.hx_rref
        dense = check.dense()
        syndromes = []
        for e in range(check.cols):
            bits = 0
            for x in dense[:, e].nonzero()[0]:
                bits |= 1 << int(x)
            syndromes.append(bits)
        last = {}
        for e, s in enumerate(syndromes):
            last.setdefault(s, []).append(e)
        n = check.cols
        found = 0
        for head in combinations(range(n), w - 1):
            s = reduce(xor, (syndromes[e] for e in head), 0)
            floor = head[-1] if head else -1
            for e in last.get(s, ()):
                if e <= floor:
                    continue
                found += 1
                subset = head + (e,)
                if not gf2.in_rowspace(reduced, gf2.vector(n, subset)):
                    logger.debug('Weight %d %s found after %d kernel '
                                 'elements', w, kind.value, found)
                    return subset
        logger.debug('Weight %d: %d %s kernel elements, all trivial', w,
                     found, kind.value)
        return None

    def shortest(self, code, kind, weight_cap: int = None):
        """Least weight logical of one kind up to weight_cap.

        Returns:
            (int, tuple) or unresolved: Weight and witness, or
                                        unresolved(weight_cap) if no
                                        logical of that kind is that light.
        """
        if code.k == 0:
            raise NoNontrivialCycle('k=0: the code has no logical operators')
        cap = code.n if weight_cap is None else weight_cap
        for w in range(1, cap + 1):
            self._check_budget(code.n, w)
            subset = self.search(code, kind, w)
            if subset is not None:
                return w, subset
        return unresolved(cap)

    def distance(self, code, weight_cap: int = None):
        """Raise the weight one step at a time until either kind has a
        logical.

        Returns:
            distance_result: delta and delta_star are set only for the
                             kinds found at d_min.

        Raises:
            NoNontrivialCycle:  If k = 0.
            MethodTooExpensive: If C(n, w) exceeds the limit before a
                                logical is found.
        """
        if code.k == 0:
            raise NoNontrivialCycle('k=0: the code has no logical operators')
        cap = code.n if weight_cap is None else weight_cap
        for w in range(1, cap + 1):
            self._check_budget(code.n, w)
            witness = self.search(code, logical.CYCLE, w)
            witness_star = self.search(code, logical.COCYCLE, w)
            if witness is None and witness_star is None:
                continue
            return distance_result(
                d_min=w,
                delta=w if witness is not None else None,
                delta_star=w if witness_star is not None else None,
                witness=witness or (),
                witness_star=witness_star or (),
                method=self.method)
        return unresolved(cap)


def oracle_distance(code, weight_cap: int, limit: int = None):
    """Least logical weight up to weight_cap by exhaustive enumeration.

    Args:
        code (css_code):        Code to search.
        weight_cap (int):       Largest weight to try, at least 1.
        limit (int, optional):  Subset budget. Defaults to budget.SUBSETS.

    Raises:
        ValueError:         If weight_cap < 1.
        NoNontrivialCycle:  If k = 0.
        MethodTooExpensive: If C(n, weight_cap) exceeds the budget.

    Returns:
        int or unresolved: d_min, or unresolved(weight_cap) if no logical
                           has weight <= weight_cap.
    """
    if weight_cap < 1:
        raise ValueError('weight_cap must be at least 1')
    engine = oracle_engine(limit)
    engine._check_budget(code.n, weight_cap)
    result = engine.distance(code, weight_cap)
    if isinstance(result, unresolved):
        logger.info('No logical up to weight %d', weight_cap)
        return result
    return result.d_min

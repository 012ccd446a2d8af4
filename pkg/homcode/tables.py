"""Code tables: catalog data, cover families and the reproducible sweeps.

Every sweep computes codes from constructed maps and sets each row's
status by comparing with the closed-form or catalog value.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from homcode import generators
from homcode.constants import distance_method
from homcode.covering import cover_spec, d_cover, find_gluing_cycle
from homcode.css import build_css
from homcode.distance import distance
from homcode.errors import FormulaMismatch
from homcode.polygonal_map import vertex_type

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class catalog_entry:
    """Known code of a class of maps with a common vertex type.
    """
    map_type: vertex_type
    maps: tuple[str, ...]
    n: int
    k: int
    d: int

    @property
    def code(self) -> str:
        return f'[[{self.n},{self.k},{self.d}]]'


def _entry(text, maps, n, k, d) -> catalog_entry:
    return catalog_entry(vertex_type.parse(text), tuple(maps), n, k, d)


SEM_CATALOG = (
    _entry('[3^7]', ['N1', 'N2', 'N3', 'N4', 'N5', 'N6'], 42, 4, 3),
    _entry('[4^3,5^1]', ['K1', 'K2', 'K3'], 40, 3, 4),
    _entry('[3^1,4^1,7^1,4^1]', ['K4'], 84, 3, 4),
    _entry('[6^2,7^1]', ['K5'], 63, 3, 4),
    _entry('[4^1,6^1,14^1]', ['K6'], 126, 3, 4),
    _entry('[4^1,8^1,10^1]', ['K7'], 60, 3, 4),
    _entry('[4^1,6^1,16^1]', ['K8', 'K9'], 72, 3, 4),
    _entry('[3^1,4^1,8^1,4^1]', ['K10', 'K11'], 48, 3, 4),
    _entry('[6^2,8^1]', ['K12', 'K13'], 36, 3, 3),
    _entry('[3^1,4^1,3^1,4^2]', ['K14'], 30, 3, 4),
    _entry('[3^5,4^1]', ['K15', 'K16', 'K17'], 36, 3, 3),
)


def match_catalog(report) -> catalog_entry:
    """Catalog entry with the report's vertex type and length, or None.
    """
    for entry in SEM_CATALOG:
        if str(entry.map_type) == report.vertex_type and entry.n == report.n:
            return entry
    return None


@dataclass(frozen=True)
class cover_family:
    """Codes [[n*d, k0 + slope*d, d_min]] of the d-sheeted covers of one
    class of maps.
    """
    map_type: vertex_type
    edges: int
    k0: int
    slope: int
    d_min: int

    def code(self, d: int) -> tuple[int, int, int]:
        return self.edges * d, self.k0 + self.slope * d, self.d_min

    def __str__(self):
        if self.slope == self.k0:
            k = f'{self.k0}(1+d)'
        elif self.slope == 1:
            k = f'{self.k0}+d'
        else:
            k = f'{self.k0}+{self.slope}d'
        return f'[[{self.edges}d,{k},{self.d_min}]]'


COVER_FAMILIES = tuple(
    cover_family(entry.map_type, entry.n, 2,
                 2 if entry.k == 4 else 1, entry.d)
    for entry in SEM_CATALOG)


def rate(family: cover_family, d: int) -> Fraction:
    """Exact k/n of the d-sheeted cover.
    """
    n, k, _ = family.code(d)
    return Fraction(k, n)


def rate_limit(family: cover_family) -> Fraction:
    """Limit of k/n as d grows.
    """
    return Fraction(family.slope, family.edges)


def cover_family_of(text: str) -> cover_family:
    """Cover family of a vertex type given in printed form.

    Raises:
        KeyError: If no family has that type.
    """
    wanted = vertex_type.parse(text)
    for family in COVER_FAMILIES:
        if family.map_type == wanted:
            return family
    raise KeyError(text)


@dataclass
class table_row:
    """One printed row: predicted and computed code side by side.
    """
    label: str
    map_type: str
    predicted: tuple[int, int, int]
    computed: tuple[int, int, int]
    rate: Fraction = None
    limit: Fraction = None
    note: str = ''

    @property
    def ok(self) -> bool:
        return all(p is None or p == c
                   for p, c in zip(self.predicted, self.computed))

    @property
    def status(self) -> str:
        return 'OK' if self.ok else 'MISMATCH'


def _code_string(code) -> str:
    return '[[' + ','.join('?' if x is None else str(x) for x in code) + ']]'


def _measure(m, with_distance: bool):
    code = build_css(m)
    d = None
    if with_distance and code.k > 0:
        d = distance(code, distance_method.BFS).d_min
    return code, d


def catalog_rows(with_distance: bool = True) -> list[table_row]:
    """Rows for the built-in catalog maps.
    """
    rows = []
    for name in ('k3', 'n1'):
        m = generators.builtin(name)
        code, d = _measure(m, with_distance)
        vtype = str(m.vertex_type())
        entry = next(e for e in SEM_CATALOG if str(e.map_type) == vtype)
        rows.append(table_row(label=name.upper(), map_type=vtype,
                              predicted=(entry.n, entry.k, entry.d),
                              computed=(code.n, code.k,
                                        d if with_distance else entry.d),
                              rate=Fraction(code.k, code.n)))
    return rows


def family_rows(m1_max: int = 4, m2_max: int = 3,
                with_distance: bool = True) -> list[table_row]:
    """Rows for both families over 3 <= m1 <= m1_max, 0 <= m2 <= m2_max.

    The note column reports whether each map is isomorphic to its dual.
    """
    rows = []
    for params_type, gen in ((generators.odd_family_params,
                              generators.gen_odd),
                             (generators.even_family_params,
                              generators.gen_even)):
        for m1 in range(3, m1_max + 1):
            for m2 in range(m2_max + 1):
                params = params_type(m1, m2)
                m = gen(params)
                code, d = _measure(m, with_distance)
                expected = params.predicted_code()
                self_dual = m.is_isomorphic(m.dual())
                rows.append(table_row(
                    label=str(params), map_type=str(m.vertex_type()),
                    predicted=(expected.n, expected.k, expected.d),
                    computed=(code.n, code.k,
                              d if with_distance else expected.d),
                    rate=Fraction(code.k, code.n),
                    note='self-dual' if self_dual else 'not self-dual'))
                logger.info('%s: %s', params, rows[-1].status)
    return rows


def cover_rows(d_max: int = 3, with_distance: bool = True) -> list[table_row]:
    """Rows for the d-sheeted covers of the built-in maps, 1 <= d <= d_max.
    """
    rows = []
    for name in ('n1', 'k3'):
        base = generators.builtin(name)
        family = cover_family_of(str(base.vertex_type()))
        cycle = find_gluing_cycle(base)
        for d in range(1, d_max + 1):
            m = d_cover(base, cover_spec(tuple(cycle), d))
            code, dist = _measure(m, with_distance)
            predicted = family.code(d)
            rows.append(table_row(
                label=f'{name.upper()}^{d}', map_type=str(m.vertex_type()),
                predicted=predicted,
                computed=(code.n, code.k,
                          dist if with_distance else predicted[2]),
                rate=Fraction(code.k, code.n),
                limit=rate_limit(family)))
            logger.info('%s^%d: %s', name, d, rows[-1].status)
    return rows


def check_rows(rows: list[table_row]) -> None:
    """Raise FormulaMismatch listing every row whose computed code differs
    from its prediction.
    """
    bad = [row for row in rows if not row.ok]
    if bad:
        raise FormulaMismatch(bad)


def render(rows: list[table_row]) -> str:
    """Fixed-width text table.
    """
    header = ('map', 'type', 'predicted', 'computed', 'k/n', 'limit',
              'status', 'note')
    body = []
    for row in rows:
        body.append((row.label, row.map_type, _code_string(row.predicted),
                     _code_string(row.computed),
                     '' if row.rate is None else str(row.rate),
                     '' if row.limit is None else str(row.limit),
                     row.status, row.note))
    widths = [max(len(line[i]) for line in [header] + body)
              for i in range(len(header))]
    lines = ['  '.join(cell.ljust(w) for cell, w in zip(line, widths))
             .rstrip() for line in [header] + body]
    return '\n'.join(lines) + '\n'

"""CSS codes of maps.

Qubits sit on edges. Each vertex v gives the X-stabilizer A_v on its
incident edges (a row of H_X) and each face f gives the Z-stabilizer B_f on
its boundary edges (a row of H_Z).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
import numpy as np
from homcode import gf2
from homcode.errors import ChainConditionError
from homcode.polygonal_map import polygonal_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class css_code:
    """Check matrices of a map's code.

    Attributes:
        hx (bit_matrix):    V x E vertex-edge incidence.
        hz (bit_matrix):    F x E face-edge incidence.
        edges (tuple):      Edge list of the map, indexing the columns.
        chi (int):          Euler characteristic of the map.
        k (int):            n - rank(hx) - rank(hz).
    """
    hx: gf2.bit_matrix
    hz: gf2.bit_matrix
    edges: tuple[tuple[int, int], ...]
    chi: int
    k: int

    @property
    def n(self) -> int:
        return self.hx.cols

    @cached_property
    def hx_rref(self) -> gf2.echelon_form:
        return gf2.rref(self.hx)

    @cached_property
    def hz_rref(self) -> gf2.echelon_form:
        return gf2.rref(self.hz)

    def __str__(self):
        return f'[[{self.n},{self.k}]]'


@dataclass(frozen=True)
class css_check:
    """Outcome of verify_css; falsy when a condition fails.
    """
    ok: bool
    cell: tuple[int, int] = None
    reason: str = ''

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class code_report:
    """One row of a code table.
    """
    n: int
    k: int
    chi: int
    vertex_type: str
    provenance: str = ''
    d: int = None
    witness: str = None

    def __post_init__(self):
        if self.d is not None and self.d < 1:
            raise ValueError('d must be at least 1')

    @property
    def rate(self) -> Fraction:
        return encoding_rate(self)

    @property
    def parameters(self) -> str:
        d = '?' if self.d is None else self.d
        return f'[[{self.n},{self.k},{d}]]'

    def __str__(self):
        line = (f'{self.parameters} chi={self.chi} type={self.vertex_type} '
                f'rate={_fraction(self.rate)} src={self.provenance}')
        if self.witness:
            line += f' witness={self.witness}'
        return line


def _fraction(value: Fraction) -> str:
    return f'{value.numerator}/{value.denominator}'


def build_css(m: polygonal_map) -> css_code:
    """Build H_X and H_Z of a map and compute k from their ranks.

    Raises:
        ChainConditionError: If k disagrees with 2 - chi.
    """
    E = m.num_edges
    incident = [[] for _ in range(m.num_vertices)]
    for e, (u, v) in enumerate(m.edges):
        incident[u].append(e)
        incident[v].append(e)
    hx = gf2.bit_matrix.from_supports(E, incident)
    hz = gf2.bit_matrix.from_supports(E, (m.face_edges(f)
                                          for f in range(m.num_faces)))
    k = E - gf2.rank(hx) - gf2.rank(hz)
    chi = m.euler_characteristic()
    if k != 2 - chi:
        raise ChainConditionError(f'k={k} from ranks but 2-chi={2 - chi}')
    logger.info('Built code [[%d,%d]] with chi=%d', E, k, chi)
    return css_code(hx=hx, hz=hz, edges=m.edges, chi=chi, k=k)


def homology_dimension(code: css_code) -> int:
    """Dimension of the first Z_2-homology, recomputed from the matrices.
    """
    return code.n - gf2.rank(code.hx) - gf2.rank(code.hz)


def verify_css(code: css_code) -> css_check:
    """Check hx . hz^T = 0 and k = 2 - chi.

    Returns:
        css_check: Falsy with the first nonzero (vertex row, face row)
                   cell of hx . hz^T, or with reason set when k is off.
    """
    product = gf2.mul(code.hx, code.hz.T)
    if not product.is_zero():
        cell = product.nonzeros()[0]
        return css_check(False, cell, f'hx.hz^T is 1 at vertex '
                                      f'{cell[0] + 1}, face {cell[1] + 1}')
    k = homology_dimension(code)
    if k != 2 - code.chi:
        return css_check(False, None, f'k={k} but 2-chi={2 - code.chi}')
    return css_check(True)


def encoding_rate(report) -> Fraction:
    """Exact k/n of a report or code.
    """
    return Fraction(report.k, report.n)


def stabilizer_supports(code: css_code):
    """Edge supports of every A_v and every B_f.

    Returns:
        (list, list): Vertex stabilizers, then face stabilizers.
    """
    return ([code.hx.support(v) for v in range(code.hx.rows)],
            [code.hz.support(f) for f in range(code.hz.rows)])


def check_matrix(code: css_code) -> gf2.bit_matrix:
    """Binary check matrix [[H_X, 0], [0, H_Z]] of size (V+F) x 2n.
    """
    hx, hz = code.hx.dense(), code.hz.dense()
    return gf2.bit_matrix.from_dense(np.block([
        [hx, np.zeros((hx.shape[0], hz.shape[1]), dtype=np.uint8)],
        [np.zeros((hz.shape[0], hx.shape[1]), dtype=np.uint8), hz],
    ]))


def make_report(m: polygonal_map, code: css_code, provenance: str = '',
                d: int = None, witness: str = None) -> code_report:
    return code_report(n=code.n, k=code.k, chi=code.chi,
                       vertex_type=str(m.vertex_type()),
                       provenance=provenance, d=d, witness=witness)

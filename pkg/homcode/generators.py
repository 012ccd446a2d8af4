"""Parametric self-dual equivelar maps and the built-in catalog maps.

Both families live on the vertex set Z_N. Face F_j is obtained by adding j
to a fixed offset pattern built from the sequence

    a_(2n-1) = 3^(n-1) - 1,    a_(2n) = 2 * 3^(n-1) - 1

so the maps are circulant. Labels are emitted as residues 1..N (N stands
for 0), internally shifted to 0..N-1.
"""

import logging
from dataclasses import dataclass
from homcode.polygonal_map import polygonal_map
from homcode.errors import DegenerateParams, MapError, UnknownName

logger = logging.getLogger(__name__)


def offset(i: int) -> int:
    """The i-th term (1-based) of the offset sequence.
    """
    if i < 1:
        raise ValueError('Offsets are indexed from 1')
    n = (i + 1) // 2
    return 3 ** (n - 1) - 1 if i % 2 else 2 * 3 ** (n - 1) - 1


@dataclass(frozen=True)
class family_code:
    """Closed-form code parameters of one family member.
    """
    n: int
    k: int
    chi: int
    d: int = 4


def _check(m1: int, m2: int):
    if not isinstance(m1, int) or m1 < 3:
        raise DegenerateParams('m1 must be ≥ 3')
    if not isinstance(m2, int) or m2 < 0:
        raise DegenerateParams('m2 must be ≥ 0')


@dataclass(frozen=True)
class odd_family_params:
    """Parameters of the [(2m1-1)^(2m1-1)] family.
    """
    m1: int
    m2: int = 0

    def __post_init__(self):
        _check(self.m1, self.m2)

    @property
    def base(self) -> int:
        return 3 ** (self.m1 - 1) + 2 * self.m2 - 1

    @property
    def N(self) -> int:
        return 2 * self.base

    @property
    def face_size(self) -> int:
        return 2 * self.m1 - 1

    def offsets(self) -> list[int]:
        size = self.face_size
        pattern = [offset(i) for i in range(1, size + 1)]
        pattern[size - 2] += self.m2
        pattern[size - 1] += 2 * self.m2
        return pattern

    def predicted_code(self) -> family_code:
        b = self.base
        return family_code(n=(2 * self.m1 - 1) * b,
                           k=2 + (2 * self.m1 - 5) * b,
                           chi=(5 - 2 * self.m1) * b)

    def witness_cycle(self) -> list[int]:
        """Four-cycle through vertices 1 and 2 (1-based labels) that is
        homologically nontrivial in every member of the family.
        """
        top = 3 ** (self.m1 - 1) + 2 * self.m2
        return [top, 1, 2, top + 1]

    def __str__(self):
        return f'odd m1={self.m1} m2={self.m2}'


@dataclass(frozen=True)
class even_family_params:
    """Parameters of the [(2m1)^(2m1)] family.
    """
    m1: int
    m2: int = 0

    def __post_init__(self):
        _check(self.m1, self.m2)

    @property
    def base(self) -> int:
        return 3 ** self.m1 + 2 * self.m2 - 1

    @property
    def N(self) -> int:
        return self.base

    @property
    def face_size(self) -> int:
        return 2 * self.m1

    def offsets(self) -> list[int]:
        size = self.face_size
        pattern = [offset(i) for i in range(1, size + 1)]
        pattern[size - 1] += self.m2
        return pattern

    def predicted_code(self) -> family_code:
        b = self.base
        return family_code(n=self.m1 * b, k=2 + (self.m1 - 2) * b,
                           chi=(2 - self.m1) * b)

    def witness_cycle(self) -> list[int]:
        top = 2 * 3 ** (self.m1 - 1) + self.m2
        return [top, 1, 2, top + 1]

    def __str__(self):
        return f'even m1={self.m1} m2={self.m2}'


def circulant_faces(N: int, pattern: list[int]) -> list[list[int]]:
    """Faces F_1..F_N of the circulant map, 0-based labels.
    """
    return [[(j + a - 1) % N for a in pattern] for j in range(1, N + 1)]


def _generate(params) -> polygonal_map:
    faces = circulant_faces(params.N, params.offsets())
    try:
        m = polygonal_map.from_faces(faces)
    except MapError as error:
        raise DegenerateParams(f'{params} does not give a valid map: '
                               f'{error}') from error
    logger.info('Generated %s: %s', params, m.summary())
    return m


def gen_odd(params: odd_family_params) -> polygonal_map:
    """Build the odd family member.

    Raises:
        DegenerateParams: If the face formula does not give a valid map.
    """
    return _generate(params)


def gen_even(params: even_family_params) -> polygonal_map:
    """Build the even family member.

    Raises:
        DegenerateParams: If the face formula does not give a valid map.
    """
    return _generate(params)


# Double-torus map of type [3^7] on 12 vertices
N1 = [
    [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 7], [1, 6, 8],
    [1, 7, 8], [2, 3, 6], [2, 4, 7], [2, 6, 9], [2, 7, 10], [2, 9, 10],
    [3, 5, 9], [3, 6, 11], [3, 9, 12], [3, 11, 12], [4, 6, 9], [4, 7, 8],
    [4, 8, 12], [4, 9, 12], [5, 7, 11], [5, 9, 10], [5, 10, 12],
    [5, 11, 12], [6, 8, 11], [7, 10, 11], [8, 10, 11], [8, 10, 12],
]

# Map of type [4^3,5^1] with chi = -1, as usually listed. The second face
# leaves {16,17}, {17,19}, {18,19} open and triples {16,18}.
K3_AS_PRINTED = [
    [1, 2, 10, 9, 8], [3, 4, 19, 18, 16], [5, 11, 13, 15, 14],
    [6, 7, 20, 18, 12], [1, 2, 3, 4], [1, 4, 5, 6], [1, 6, 7, 8],
    [2, 3, 12, 11], [2, 10, 13, 11], [3, 12, 18, 16], [4, 5, 14, 19],
    [5, 6, 12, 11], [7, 8, 14, 19], [7, 19, 17, 20], [8, 9, 15, 14],
    [9, 10, 16, 17], [9, 15, 20, 17], [10, 13, 18, 16], [13, 15, 20, 18],
]

K3 = [list(face) for face in K3_AS_PRINTED]
K3[1] = [3, 4, 19, 17, 16]

BUILTINS = {
    'n1': N1,
    'k3': K3,
}


def builtin(name: str) -> polygonal_map:
    """Built-in catalog map by name ('n1' or 'k3').

    Raises:
        UnknownName: If name is not a built-in map.
    """
    key = name.strip().lower()
    if key not in BUILTINS:
        raise UnknownName(name, sorted(BUILTINS))
    return polygonal_map.from_faces(BUILTINS[key])

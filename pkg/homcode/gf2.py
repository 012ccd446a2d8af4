"""Dense linear algebra over GF(2): bit-packed matrices, reduced row
echelon form, products, nullspaces and row-space membership.
"""

from dataclasses import dataclass
import numpy as np
from homcode.errors import DimensionMismatch


class bit_matrix:
    """Binary matrix whose rows are packed eight columns per byte
    (numpy.packbits, big-endian bit order, zero padding).

    Values are immutable: every operation returns a new matrix.
    """

    def __init__(self, rows: int, cols: int, bits: np.ndarray = None):
        """Create a matrix from packed rows, or a zero matrix.

        Args:
            rows (int):                 Number of rows.
            cols (int):                 Number of columns.
            bits (ndarray, optional):   Packed rows of shape
                                        (rows, ceil(cols / 8)), uint8.
                                        Defaults to all zeros.

        Raises:
            ValueError: If a dimension is negative or bits has the wrong
                        shape.
        """
        if rows < 0 or cols < 0:
            raise ValueError('Matrix dimensions must be non-negative')
        width = (cols + 7) // 8
        if bits is None:
            bits = np.zeros((rows, width), dtype=np.uint8)
        else:
            bits = np.ascontiguousarray(bits, dtype=np.uint8)
            if bits.shape != (rows, width):
                raise ValueError(f'Packed rows have shape {bits.shape}, '
                                 f'expected {(rows, width)}')
        bits.flags.writeable = False
        self._rows = rows
        self._cols = cols
        self._bits = bits

    @classmethod
    def from_dense(cls, array) -> 'bit_matrix':
        """Pack a dense 0/1 array (entries are reduced mod 2).
        """
        dense = np.asarray(array, dtype=np.int64)
        if dense.ndim != 2:
            raise ValueError('Expected a two-dimensional array')
        dense = (dense & 1).astype(np.uint8)
        rows, cols = dense.shape
        if cols == 0:
            return cls(rows, 0)
        return cls(rows, cols, np.packbits(dense, axis=1))

    @classmethod
    def from_supports(cls, cols: int, supports) -> 'bit_matrix':
        """Build a matrix with one row per support (iterable of column
        indices). Repeated indices cancel.
        """
        supports = list(supports)
        dense = np.zeros((len(supports), cols), dtype=np.uint8)
        for i, support in enumerate(supports):
            for j in support:
                dense[i, j] ^= 1
        return cls.from_dense(dense)

    @classmethod
    def identity(cls, n: int) -> 'bit_matrix':
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def packed(self) -> np.ndarray:
        """Read-only view of the packed rows.
        """
        return self._bits

    def dense(self) -> np.ndarray:
        """Unpack to a (rows, cols) uint8 array of 0/1.
        """
        if self._cols == 0:
            return np.zeros((self._rows, 0), dtype=np.uint8)
        return np.unpackbits(self._bits, axis=1, count=self._cols)

    def row(self, i: int) -> np.ndarray:
        return np.unpackbits(self._bits[i], count=self._cols)

    def support(self, i: int) -> tuple[int, ...]:
        """Column indices of the ones in row i.
        """
        return tuple(int(j) for j in np.flatnonzero(self.row(i)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f'Cell {index} outside {self.shape}')
        return int(self._bits[i, j >> 3] >> (7 - (j & 7))) & 1

    def flip(self, i: int, j: int) -> 'bit_matrix':
        """Return a copy with cell (i, j) inverted.
        """
        bits = self._bits.copy()
        bits[i, j >> 3] ^= np.uint8(0x80 >> (j & 7))
        return bit_matrix(self._rows, self._cols, bits)

    def transpose(self) -> 'bit_matrix':
        return bit_matrix.from_dense(self.dense().T)

    @property
    def T(self) -> 'bit_matrix':
        return self.transpose()

    def is_zero(self) -> bool:
        return not self._bits.any()

    def nonzeros(self) -> list[tuple[int, int]]:
        """All (i, j) with a one, sorted by row then column.
        """
        return [(int(i), int(j)) for i, j in np.argwhere(self.dense())]

    def row_weights(self) -> list[int]:
        return [int(w) for w in self.dense().sum(axis=1)]

    def column_weights(self) -> list[int]:
        return [int(w) for w in self.dense().sum(axis=0)]

    def rank(self) -> int:
        return rref(self).rank

    def __matmul__(self, other: 'bit_matrix') -> 'bit_matrix':
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, bit_matrix):
            return NotImplemented
        return (self.shape == other.shape
                and np.array_equal(self._bits, other._bits))

    def __hash__(self):
        return hash((self._rows, self._cols, self._bits.tobytes()))

    def __repr__(self):
        return f'bit_matrix({self._rows}x{self._cols})'


@dataclass(frozen=True)
class echelon_form:
    """Reduced row echelon form: the nonzero echelon rows and their
    strictly increasing pivot columns.
    """
    echelon: bit_matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def cols(self) -> int:
        return self.echelon.cols


def vector(cols: int, support) -> np.ndarray:
    """Dense 0/1 vector of length cols with ones at the given indices.
    Repeated indices cancel.
    """
    v = np.zeros(cols, dtype=np.uint8)
    for j in support:
        v[j] ^= 1
    return v


def rref(m: bit_matrix) -> echelon_form:
    """Gauss-Jordan elimination with XOR row operations on packed rows.

    Args:
        m (bit_matrix): Matrix to reduce.

    Returns:
        echelon_form: Echelon rows (rank x cols) and pivot columns.
    """
    bits = m.packed.copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        byte = col >> 3
        mask = np.uint8(0x80 >> (col & 7))
        hits = np.flatnonzero(bits[r:, byte] & mask)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            bits[[r, p]] = bits[[p, r]]
        others = np.flatnonzero(bits[:, byte] & mask)
        others = others[others != r]
        if others.size:
            bits[others] ^= bits[r]
        pivots.append(col)
        r += 1
    return echelon_form(bit_matrix(r, cols, bits[:r]), tuple(pivots))


def rank(m: bit_matrix) -> int:
    return rref(m).rank


def mul(a: bit_matrix, b: bit_matrix) -> bit_matrix:
    """GF(2) matrix product a . b.

    Raises:
        DimensionMismatch: If a.cols != b.rows.
    """
    if a.cols != b.rows:
        raise DimensionMismatch(a.shape, b.shape)
    product = a.dense().astype(np.int64) @ b.dense().astype(np.int64)
    return bit_matrix.from_dense(product & 1)


def in_rowspace(r: echelon_form, v) -> bool:
    """Check whether v is a GF(2) combination of the echelon rows.

    In reduced form each pivot column has a single one, so the only
    candidate combination is the sum of the rows whose pivot is set in v.

    Args:
        r (echelon_form):   Reduced form of the spanning matrix.
        v (array-like):     Dense 0/1 vector of length r.cols.

    Raises:
        DimensionMismatch: If v has the wrong length.

    Returns:
        bool: True if v lies in the row space.
    """
    v = np.asarray(v, dtype=np.uint8) & 1
    if v.ndim != 1 or v.size != r.cols:
        raise DimensionMismatch((1, v.size), (1, r.cols))
    if r.cols == 0:
        return True
    packed = np.packbits(v)
    chosen = np.flatnonzero(v[list(r.pivots)]) if r.pivots else []
    if len(chosen) == 0:
        return not packed.any()
    combo = np.bitwise_xor.reduce(r.echelon.packed[chosen], axis=0)
    return bool(np.array_equal(combo, packed))


def nullspace_basis(m: bit_matrix) -> list[np.ndarray]:
    """Basis of {v : m . v = 0}, one vector per free column.

    Returns:
        list: cols - rank dense 0/1 vectors.
    """
    reduced = rref(m)
    echelon = reduced.echelon.dense()
    pivots = list(reduced.pivots)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.uint8)
        v[free] = 1
        if pivots:
            v[pivots] = echelon[:, free]
        basis.append(v)
    return basis


def format_spm(m: bit_matrix) -> str:
    """Sparse text export: '<rows> <cols>' then '<i> <j>' per nonzero,
    0-based and sorted.
    """
    lines = [f'{m.rows} {m.cols}']
    lines.extend(f'{i} {j}' for i, j in m.nonzeros())
    return '\n'.join(lines) + '\n'


def parse_spm(text: str) -> bit_matrix:
    """Inverse of format_spm.

    Raises:
        ValueError: If the header is missing or an entry is out of range.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError('Missing "<rows> <cols>" header')
    rows, cols = int(lines[0][0]), int(lines[0][1])
    dense = np.zeros((rows, cols), dtype=np.uint8)
    for entry in lines[1:]:
        i, j = int(entry[0]), int(entry[1])
        if not (0 <= i < rows and 0 <= j < cols):
            raise ValueError(f'Entry ({i}, {j}) outside {rows}x{cols}')
        dense[i, j] = 1
    return bit_matrix.from_dense(dense)


def write_spm(m: bit_matrix, path) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_spm(m))


def read_spm(path) -> bit_matrix:
    with open(path, encoding='utf-8') as f:
        return parse_spm(f.read())

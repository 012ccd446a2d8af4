"""Exceptions raised by map validation, linear algebra, covers and
distance searches.

Every exception derives from ValueError or RuntimeError so callers may
catch the built-in type. Vertex ids in messages are 1-based.
"""


class MapError(ValueError):
    """Base class for polygonal map validation failures.
    """


class ShortFace(MapError):
    def __init__(self, face: int, length: int):
        self.face = face
        self.length = length
        super().__init__(f'Face {face + 1} has {length} vertices, '
                         f'at least 3 are required')


class RepeatedVertexInFace(MapError):
    def __init__(self, face: int, vertex: int):
        self.face = face
        self.vertex = vertex
        super().__init__(f'Vertex {vertex + 1} repeats in face {face + 1}')


class NonContiguousVertices(MapError):
    def __init__(self, missing: list[int]):
        self.missing = missing
        shown = ', '.join(str(v + 1) for v in missing[:5])
        super().__init__(f'Vertex ids are not contiguous, missing {shown}')


class OpenEdge(MapError):
    def __init__(self, pair: tuple[int, int], count: int):
        self.pair = pair
        self.count = count
        super().__init__(f'Edge {pair[0] + 1}-{pair[1] + 1} lies on '
                         f'{count} face boundaries, expected 2')


class PinchedVertex(MapError):
    def __init__(self, vertex: int, cycles: int):
        self.vertex = vertex
        self.cycles = cycles
        super().__init__(f'Faces around vertex {vertex + 1} split into '
                         f'{cycles} cycles')


class Disconnected(MapError):
    def __init__(self, components: int):
        self.components = components
        super().__init__(f'Edge graph has {components} components')


class NonSimpleDual(MapError):
    def __init__(self, faces: tuple[int, int]):
        self.faces = faces
        super().__init__(f'Faces {faces[0] + 1} and {faces[1] + 1} share more '
                         f'than one edge, the dual is not a simple map')


class DimensionMismatch(ValueError):
    def __init__(self, left: tuple[int, int], right: tuple[int, int]):
        self.left = left
        self.right = right
        super().__init__(f'Incompatible shapes {left[0]}x{left[1]} '
                         f'and {right[0]}x{right[1]}')


class DegenerateParams(ValueError):
    """Raised when a family formula does not produce a valid map.
    """


class UnknownName(ValueError):
    def __init__(self, name: str, known: list[str]):
        self.name = name
        super().__init__(f'Unknown built-in map {name!r}, '
                         f'expected one of {", ".join(known)}')


class CoverError(ValueError):
    """Base class for cutting and covering failures.
    """


class NoSuchCycle(CoverError):
    pass


class NotACycle(CoverError):
    def __init__(self, cycle: list[int], reason: str):
        self.cycle = cycle
        super().__init__(f'{_cycle_str(cycle)} is not a cycle: {reason}')


class OneSidedCycle(CoverError):
    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__(f'{_cycle_str(cycle)} is one-sided, its '
                         f'neighbourhood is a Moebius band')


class DisconnectedCover(CoverError):
    def __init__(self, cycle: list[int], components: int):
        self.cycle = cycle
        self.components = components
        super().__init__(f'Gluing along {_cycle_str(cycle)} gives '
                         f'{components} components, the cycle separates')


class NoNontrivialCycle(ValueError):
    pass


class MethodTooExpensive(RuntimeError):
    def __init__(self, subsets: int, limit: int):
        self.subsets = subsets
        self.limit = limit
        super().__init__(f'Enumeration of {subsets} subsets exceeds the '
                         f'budget of {limit}')


class ChainConditionError(RuntimeError):
    pass


class FormulaMismatch(RuntimeError):
    def __init__(self, rows: list):
        self.rows = rows
        super().__init__(f'{len(rows)} computed row(s) disagree with '
                         f'their closed-form prediction')


def _cycle_str(cycle: list[int]) -> str:
    return 'C(' + ','.join(str(v + 1) for v in cycle) + ')'

"""All defined enums and settings used across the code constructions.
"""

import os
from enum import Enum


class budget:
    SUBSETS = 50_000_000        # Oracle enumeration budget (subset count)
    CROSSCHECK_MAX_N = 64       # CLI cross-checks bfs with the oracle up to n
    ENV_VAR = 'HOMCODE_BUDGET'

    def from_environment():
        """Update SUBSETS from the HOMCODE_BUDGET environment variable,
        if it is set.

        Raises:
            ValueError: If the variable is not a positive integer.

        Returns:
            int: The budget now in effect.
        """
        raw = os.environ.get(budget.ENV_VAR)
        if raw is None or raw.strip() == '':
            return budget.SUBSETS
        try:
            value = int(raw)
        except ValueError as error:
            raise ValueError(f'{budget.ENV_VAR} must be an integer, '
                             f'got {raw!r}') from error
        if value < 1:
            raise ValueError(f'{budget.ENV_VAR} must be positive')
        budget.SUBSETS = value
        return value


class distance_method(Enum):
    """Enums for distance engine selection.
    """
    BFS = 'bfs'
    ORACLE = 'oracle'
    NONE = 'none'


class family(Enum):
    """Enums for the two parametric equivelar families.
    """
    ODD = 'odd'     # type [(2m1-1)^(2m1-1)]
    EVEN = 'even'   # type [(2m1)^(2m1)]


class side(Enum):
    """Enums for the two banks of a cut cycle.
    """
    A = 0
    B = 1


class table_name(Enum):
    """Enums for reproducible code tables.
    """
    T1_K3 = 't1-k3'
    T2_FAMILIES = 't2-families'
    T3_COVERS = 't3-covers'


class logical(Enum):
    """Enums for the two kinds of logical operators. A cycle is an edge
    set in ker H_X outside rowspace H_Z (a nontrivial cycle of the map), a
    cocycle is in ker H_Z outside rowspace H_X (one of the dual map).
    """
    CYCLE = 'cycle'
    COCYCLE = 'cocycle'

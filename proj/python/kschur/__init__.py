"""k-Schur functions, k-tableaux, Gromov-Witten invariants and fusion rules.

Partitions are lists of weakly decreasing positive integers. Expansions
are returned as dicts keyed by partition tuples.
"""

from ._core import *  # noqa: F401,F403
from ._core import ParseError, InternalError  # noqa: F401

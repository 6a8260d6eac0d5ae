"""Hochschild cohomology and Gerstenhaber brackets of radical square zero algebras."""

from qhh.errors import BudgetExceeded, PathError, QuiverError
from qhh.quiver import (
    Arrow,
    ParallelPair,
    Path,
    Quiver,
    enumerate_paths,
    one_loop,
    parallel_pairs,
    parse_quiver,
    substitute,
    two_loops,
)
from qhh.cochains import Cochain, CochainSpace, CohomologyGroup, cohomology, hh_dim_table
from qhh.bracket import bracket_q, circ, circ_i, hh1_action, induced_bracket

__all__ = [
    "Arrow",
    "BudgetExceeded",
    "Cochain",
    "CochainSpace",
    "CohomologyGroup",
    "ParallelPair",
    "Path",
    "PathError",
    "Quiver",
    "QuiverError",
    "bracket_q",
    "circ",
    "circ_i",
    "cohomology",
    "enumerate_paths",
    "hh1_action",
    "hh_dim_table",
    "induced_bracket",
    "one_loop",
    "parallel_pairs",
    "parse_quiver",
    "substitute",
    "two_loops",
]

__version__ = "0.1.0"

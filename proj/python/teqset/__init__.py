"""Tournament equilibrium set (TEQ) and retentive-set computations.

Alternatives are 0-based here; sets are sorted lists of indices. The
command-line tool uses 1-based indices instead.
"""

import json

from ._teqset import (
    MAX_ORDER,
    FormatError,
    Tournament,
    build_counterexample,
    compose_structured,
    dominators,
    find_isomorphism,
    is_retentive,
    minimal_retentive_sets,
    parse,
    random_tournament,
    restrict,
    teq,
    teq_bruteforce,
)
from . import _teqset

__all__ = [
    "MAX_ORDER",
    "FormatError",
    "Tournament",
    "build_counterexample",
    "compose_structured",
    "dominators",
    "find_isomorphism",
    "is_retentive",
    "minimal_retentive_sets",
    "parse",
    "random_tournament",
    "restrict",
    "search_random",
    "teq",
    "teq_bruteforce",
    "verify_counterexample",
]


def verify_counterexample():
    """Check every claim about the embedded 24-alternative instance.

    Returns the report as a dict (claim sets in it are 1-based labels).
    """
    return json.loads(_teqset.verify_counterexample_json())


def search_random(order, trials, seed, mode="uniform", witness_cap=10, threads=0):
    """Sample tournaments and count those with several minimal retentive sets."""
    return json.loads(_teqset.search_random_json(order, trials, seed, mode, witness_cap, threads))

"""Centralized numeric tolerances.

All default tolerances live in one record so that tests and the CLI can
scale or override them in a single place.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # operator identities evaluated on interior projectors
    identity: float = 1e-12
    # norm slack for constructed states (truncation tail)
    state: float = 1e-10
    # matrix exponential accuracy contract
    exponential: float = 1e-10
    # acceptable tail mass outside the truncated basis
    tail: float = 1e-10


DEFAULT_TOL = Tolerances()

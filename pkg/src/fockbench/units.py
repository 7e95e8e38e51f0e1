"""Natural units used throughout the package.

Every formula in this package is written for hbar = m = omega = 1.  This
record is the only place the three constants appear; nothing else in the
code base hard-codes a dimensional factor.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class NaturalUnits:
    hbar: float = 1.0
    mass: float = 1.0
    omega: float = 1.0


UNITS = NaturalUnits()

"""Fractional ideals of O_F and the ideal counting function rho.

rho(I) counts fractional O_K-ideals J with relative norm J * conj(J) = I O_K.
It is computed prime by prime from the splitting type of each prime in
the support of I.
"""

from __future__ import annotations

from .cm_fields import FieldTower, SplittingType, splitting_in_K
from .number_field import (
    ElementF,
    IdealF,
    PrimeOfF,
    ideal_norm,
    ord_at,
    principal_ideal,
)

__all__ = [
    "ElementF",
    "IdealF",
    "ideal_norm",
    "ord_P",
    "principal_ideal",
    "rho",
    "rho_local",
]


def ord_P(alpha: ElementF, P: PrimeOfF) -> int:
    return ord_at(alpha, P)


def rho_local(st: SplittingType, a: int) -> int:
    """Number of local O_K-ideals of relative norm P^a."""
    if a < 0:
        return 0
    if st is SplittingType.SPLIT:
        return a + 1
    if st is SplittingType.INERT:
        return 1 if a % 2 == 0 else 0
    return 1


def rho(tower: FieldTower, I: IdealF) -> int:
    out = 1
    for P, k in I.exponents:
        out *= rho_local(splitting_in_K(tower, P), k)
        if out == 0:
            return 0
    return out

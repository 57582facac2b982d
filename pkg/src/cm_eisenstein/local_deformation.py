"""Numeric output of the local deformation theory at a nonsplit prime.

Only the integers that the degree computation consumes are modelled: the
shift exponent epsilon_P, the lifting bound k, the length of the local ring
at a divisor point, and the order profile of a generator of Hom(A_1, A_2)
across the embeddings of the maximal unramified subfield.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cm_fields import FieldTower, SplittingType, e_tilde, splitting_in_K
from .ideal_arith import rho_local
from .number_field import PrimeOfF


class DeformationError(ValueError):
    pass


def epsilon_P(st: SplittingType) -> int:
    """Exponent of P in beta O_F: 1 at inert primes, 0 at ramified ones."""
    if st is SplittingType.INERT:
        return 1
    if st is SplittingType.RAMIFIED:
        return 0
    raise DeformationError("epsilon is undefined at a split prime (no divisor points)")


@dataclass(frozen=True)
class LocalContext:
    P: PrimeOfF
    st: SplittingType
    e_tilde: int

    def __post_init__(self):
        if self.st is SplittingType.SPLIT:
            raise DeformationError(f"{self.P} splits in K")
        if self.e_tilde < 1:
            raise DeformationError("e_tilde must be positive")
        if self.st is SplittingType.RAMIFIED and self.e_tilde % 2:
            # K sits inside the normal closure, so the index is a multiple of e(K/F) = 2
            raise DeformationError("a prime ramified in K/F has even ramification index in K~")


def local_context(tower: FieldTower, P: PrimeOfF) -> LocalContext:
    return LocalContext(P, splitting_in_K(tower, P), e_tilde(tower, P))


def lift_bound_k(ctx: LocalContext, a: int) -> Fraction:
    """k with f liftable to level k but not k + 1, for ord_P(<f, f>) = a.

    k = ord(alpha * p_F) / 2 measured at a prime of K~ above P.
    """
    if rho_local(ctx.st, a - epsilon_P(ctx.st)) == 0:
        raise DeformationError(f"no homomorphism with ord_P = {a} exists ({ctx.st.value})")
    ord_tilde = ctx.e_tilde * a + ctx.e_tilde  # ord(alpha) + ord(p_F), both scaled by e
    return Fraction(ord_tilde, 2)


def deformation_length(ctx: LocalContext, a: int) -> Fraction:
    return Fraction(ctx.e_tilde * (a + 1), 2)


def order_profile(d: int, i: int) -> list[int]:
    """ord_{psi^r}(s) for r = 0..d-1, when phi^sp restricts to psi^i."""
    if d <= 0 or d % 2:
        raise ValueError("d must be a positive even integer")
    if not 0 <= i < d:
        raise ValueError("i must lie in [0, d)")
    half = d // 2
    profile = [0] * d
    for step in range(1, half + 1):
        profile[(i + step) % d] = 1
    return profile

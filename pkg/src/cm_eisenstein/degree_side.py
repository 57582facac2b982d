"""Arakelov degree of the special divisor Z(alpha) and its Green-function completion."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cm_fields import FieldTower, nonsplit_candidates, normal_closure_degree, splitting_in_K
from .eisenstein_side import _broadcast_y, arch_beta1
from .ideal_arith import ElementF, IdealF, principal_ideal, rho
from .local_deformation import deformation_length, epsilon_P, local_context
from .number_field import PrimeOfF, ord_at


class CaseTag(enum.Enum):
    TOTALLY_POSITIVE = "TotallyPositive"
    ONE_NEGATIVE_PLACE = "OneNegativePlace"
    ZERO = "Zero"


@dataclass(frozen=True)
class PrimeTerm:
    P: PrimeOfF
    ord_a: int
    rho_shifted: int
    length: Fraction
    term: float


@dataclass(frozen=True)
class DegreeBreakdown:
    total: float
    per_prime: tuple[PrimeTerm, ...] = ()
    green_term: float = 0.0
    case_tag: CaseTag = CaseTag.ZERO
    negative_place: int | None = field(default=None)


def point_count(tower: FieldTower, alpha: ElementF, P: PrimeOfF) -> Fraction:
    """Stacky number of geometric points of Z(alpha) above P."""
    if not alpha.is_totally_positive:
        raise ValueError("point counts are defined for totally positive alpha")
    eps = epsilon_P(splitting_in_K(tower, P))
    shifted = principal_ideal(alpha) * IdealF.prime(P, -eps)
    return tower.mass * rho(tower, shifted)


def _term_direct(tower: FieldTower, P: PrimeOfF, ord_a: int, rho_shifted: int) -> float:
    weight = tower.mass * (ord_a + 1) * rho_shifted
    return float(weight) * math.log(P.norm) / tower.degree_K


def _term_via_points(tower: FieldTower, alpha: ElementF, P: PrimeOfF) -> float:
    """Same term assembled as points x length summed over the primes of K~ above P.

    Those primes satisfy g * e~ * f = [K~:F], so the sum collapses to
    [K~:F]/e~ copies of log N(P) * points * length.
    """
    ctx = local_context(tower, P)
    deg_closure = normal_closure_degree(tower)
    weight = (Fraction(deg_closure, tower.degree_n) / ctx.e_tilde
              * point_count(tower, alpha, P)
              * deformation_length(ctx, ord_at(alpha, P)) / deg_closure)
    return float(weight) * math.log(P.norm)


def finite_degree(tower: FieldTower, alpha: ElementF) -> DegreeBreakdown:
    if alpha.is_zero or not alpha.is_totally_positive:
        raise ValueError("finite_degree needs totally positive alpha; use arithmetic_degree")
    ideal = principal_ideal(alpha)
    rows = []
    for P in nonsplit_candidates(tower, alpha):
        ctx = local_context(tower, P)
        a = ord_at(alpha, P)
        count = rho(tower, ideal * IdealF.prime(P, -epsilon_P(ctx.st)))
        term = _term_direct(tower, P, a, count) if count else 0.0
        rows.append(PrimeTerm(P, a, count, deformation_length(ctx, a), term))
    total = math.fsum(r.term for r in rows)
    return DegreeBreakdown(total, tuple(rows), 0.0, CaseTag.TOTALLY_POSITIVE)


def green_contribution(tower: FieldTower, alpha: ElementF, y) -> float:
    negative = [v for v, s in enumerate(alpha.signs()) if s < 0]
    if len(negative) != 1:
        raise ValueError("the Green term needs alpha negative at exactly one real place")
    (v,) = negative
    ys = _broadcast_y(tower, y)
    t = 4 * math.pi * abs(ys[v] * alpha.embeddings[v])
    weight = tower.mass * rho(tower, principal_ideal(alpha)) / tower.degree_K
    return float(weight) * arch_beta1(t)


def arithmetic_degree(tower: FieldTower, alpha: ElementF, y) -> DegreeBreakdown:
    if alpha.is_zero:
        raise ValueError("alpha = 0 is not covered")
    signs = alpha.signs()
    negative = [v for v, s in enumerate(signs) if s < 0]
    if not negative:
        return finite_degree(tower, alpha)
    if len(negative) == 1:
        g = green_contribution(tower, alpha, y)
        return DegreeBreakdown(g, (), g, CaseTag.ONE_NEGATIVE_PLACE, negative[0])
    _broadcast_y(tower, y)
    return DegreeBreakdown(0.0, (), 0.0, CaseTag.ZERO)

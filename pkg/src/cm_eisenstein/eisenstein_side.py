"""Derivatives at s = 0 of the Fourier coefficients of the incoherent Eisenstein series.

Local Whittaker values are reported "stripped": the local factor
chi_v(-1) eps(1/2, chi_v, c_v psi_v) is removed at every place (their
product over all places is the global sign -1, applied once), and at the
real places the factor y_v^(1/2) exp(2 pi i alpha_v tau_v) is removed as
well, so every coefficient is the coefficient of q^alpha and carries no
dependence on x = Re(tau).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .cm_fields import (
    FieldTower,
    SplittingType,
    arch_chi,
    local_chi,
    nonsplit_candidates,
    relevant_primes,
    splitting_in_K,
)
from .ideal_arith import ElementF, IdealF, ideal_norm, principal_ideal, rho, rho_local
from .local_deformation import epsilon_P
from .number_field import PrimeOfF, ord_at

EULER_GAMMA = 0.57721566490153286061
_EPS = 1e-16
_TINY = 1e-300

# product of the stripped local epsilon factors over all places
GLOBAL_SIGN = -1


# ---------------------------------------------------------------------------
# beta_1 = E_1
# ---------------------------------------------------------------------------

def _e1_series(t: float) -> float:
    # E1(t) = -gamma - log t - sum_{k>=1} (-t)^k / (k k!)
    total = 0.0
    term = 1.0
    k = 1
    while True:
        term *= -t / k
        contrib = term / k
        total += contrib
        if abs(contrib) < _EPS * abs(total):
            break
        k += 1
    return -EULER_GAMMA - math.log(t) - total


def _e1_scaled_cf(t: float) -> float:
    # e^t E1(t) by the modified Lentz continued fraction, valid for t > 1
    b = t + 1.0
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    i = 1
    while True:
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
        i += 1
        if i > 10_000:
            raise ArithmeticError("continued fraction for E1 did not converge")


def beta1(t: float) -> float:
    """beta_1(t) = int_1^oo exp(-t u) du / u."""
    if not t > 0:
        raise ValueError(f"beta1 needs t > 0, got {t}")
    if t <= 1.0:
        return _e1_series(t)
    return _e1_scaled_cf(t) * math.exp(-t)


def beta1_scaled(t: float) -> float:
    """exp(t) * beta_1(t), finite for every t > 0."""
    if not t > 0:
        raise ValueError(f"beta1 needs t > 0, got {t}")
    if t <= 1.0:
        return math.exp(t) * _e1_series(t)
    return _e1_scaled_cf(t)


def arch_beta1(t: float) -> float:
    # through the scaled variant so exp(-t) is the only exponential formed
    return beta1_scaled(t) * math.exp(-t) if t > 1.0 else beta1(t)


# ---------------------------------------------------------------------------
# incoherent classes and difference sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncoherentClass:
    """Signs chi_P(c_P) at the finite ramified primes; their product is -1."""

    signs: tuple[tuple[PrimeOfF, int], ...]

    def __post_init__(self):
        if math.prod(s for _, s in self.signs) != -1:
            raise ValueError("an incoherent class has chi(c) = -1")

    def sign(self, P: PrimeOfF) -> int:
        for Q, s in self.signs:
            if Q == P:
                return s
        return 1

    def label(self) -> str:
        return "".join("+" if s > 0 else "-" for _, s in self.signs)


@dataclass(frozen=True)
class DiffSet:
    finite: tuple[PrimeOfF, ...]
    arch: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.finite) + len(self.arch)

    def label(self) -> str:
        parts = [P.label() for P in self.finite] + [f"inf{v}" for v in self.arch]
        return "{" + ",".join(parts) + "}"


@dataclass(frozen=True)
class WhittakerEval:
    value0: float
    deriv0: float
    stripped: bool = True


def enumerate_Xi(tower: FieldTower) -> list[IncoherentClass]:
    ram = tower.finite_ramified
    out = []
    for signs in product((1, -1), repeat=len(ram)):
        if math.prod(signs) == -1:
            out.append(IncoherentClass(tuple(zip(ram, signs))))
    return out


def diff_set(tower: FieldTower, alpha: ElementF, c: IncoherentClass) -> DiffSet:
    finite = []
    for P in relevant_primes(tower, alpha):
        sign = c.sign(P) if splitting_in_K(tower, P) is SplittingType.RAMIFIED else 1
        if local_chi(tower, alpha, P) * sign == -1:
            finite.append(P)
    arch = tuple(v for v, s in enumerate(arch_chi(alpha)) if s < 0)
    return DiffSet(tuple(finite), arch)


# ---------------------------------------------------------------------------
# local Whittaker values
# ---------------------------------------------------------------------------

def whittaker_finite(tower: FieldTower, P: PrimeOfF, alpha: ElementF,
                     c: IncoherentClass) -> WhittakerEval:
    st = splitting_in_K(tower, P)
    a = ord_at(alpha, P)
    if a < 0:
        return WhittakerEval(0.0, 0.0)
    chi = local_chi(tower, alpha, P)
    log_norm = math.log(P.norm)
    if st is SplittingType.RAMIFIED:
        scale = 2.0 / math.sqrt(P.norm)  # ord_P(d_{K/F}) = 1
        chi *= c.sign(P)
        rho_v = rho_local(st, a)
        if chi == 1:
            return WhittakerEval(scale * rho_v, 0.0)
        return WhittakerEval(0.0, (a + 1) / 2 * log_norm * scale * rho_v)
    if chi == 1:
        return WhittakerEval(float(rho_local(st, a)), 0.0)
    # inert with odd order
    return WhittakerEval(0.0, (a + 1) / 2 * log_norm * rho_local(st, a - 1))


def whittaker_arch(alpha_v: float, y_v: float) -> WhittakerEval:
    if alpha_v == 0:
        raise ValueError("alpha_v must be nonzero")
    if not y_v > 0:
        raise ValueError("y_v must be positive")
    if alpha_v > 0:
        return WhittakerEval(2.0, 0.0)
    return WhittakerEval(0.0, arch_beta1(4 * math.pi * abs(y_v * alpha_v)))


def _broadcast_y(tower: FieldTower, y) -> tuple[float, ...]:
    if isinstance(y, (int, float)):
        ys = (float(y),) * tower.degree_n
    else:
        ys = tuple(float(v) for v in y)
        if len(ys) == 1:
            ys = ys * tower.degree_n
    if len(ys) != tower.degree_n:
        raise ValueError(f"need {tower.degree_n} y-values, got {len(ys)}")
    if any(not v > 0 for v in ys):
        raise ValueError("y must be positive")
    return ys


def _local_values(tower, alpha, y, c):
    ys = _broadcast_y(tower, y)
    finite = {P: whittaker_finite(tower, P, alpha, c) for P in relevant_primes(tower, alpha)}
    arch = [whittaker_arch(av, yv) for av, yv in zip(alpha.embeddings, ys)]
    return finite, arch


def coeff_derivative_for_class(tower: FieldTower, alpha: ElementF, y,
                               c: IncoherentClass) -> float:
    diff = diff_set(tower, alpha, c)
    if len(diff) != 1:
        return 0.0
    finite, arch = _local_values(tower, alpha, y, c)
    if diff.finite:
        (w,) = diff.finite
        result = finite[w].deriv0
        others = [ev.value0 for P, ev in finite.items() if P != w] + [ev.value0 for ev in arch]
    else:
        (v,) = diff.arch
        result = arch[v].deriv0
        others = [ev.value0 for ev in finite.values()] + [ev.value0 for i, ev in enumerate(arch) if i != v]
    for value in others:
        result *= value
    return GLOBAL_SIGN * result + 0.0


def value_at_zero(tower: FieldTower, alpha: ElementF, y, c: IncoherentClass) -> float:
    finite, arch = _local_values(tower, alpha, y, c)
    result = float(GLOBAL_SIGN)
    for ev in list(finite.values()) + arch:
        result *= ev.value0
    return result + 0.0  # normalise -0.0


def b_phi(tower: FieldTower, alpha: ElementF, y) -> float:
    """Coefficient of q^alpha in the derivative at s = 0, summed over Xi."""
    return math.fsum(coeff_derivative_for_class(tower, alpha, y, c) for c in enumerate_Xi(tower))


def _prefactor(tower: FieldTower) -> float:
    return -(2 ** (tower.r - 1)) / math.sqrt(ideal_norm(tower.rel_disc))


def b_phi_closed(tower: FieldTower, alpha: ElementF, y,
                 epsilon: Callable[[SplittingType], int] = epsilon_P) -> float:
    """Closed form of :func:`b_phi` as a sum over nonsplit primes.

    ``epsilon`` is injectable only so the self-test can mutate the shift convention.
    """
    if alpha.is_zero:
        raise ValueError("alpha must be nonzero")
    ys = _broadcast_y(tower, y)
    signs = alpha.signs()
    negative = [v for v, s in enumerate(signs) if s < 0]
    if not negative:
        total = 0.0
        terms = []
        ideal = principal_ideal(alpha)
        for P in nonsplit_candidates(tower, alpha):
            st = splitting_in_K(tower, P)
            shifted = ideal * IdealF.prime(P, -epsilon(st))
            count = rho(tower, shifted)
            if count:
                terms.append((ord_at(alpha, P) + 1) * count * math.log(P.norm))
        total = math.fsum(terms)
        return _prefactor(tower) * total + 0.0
    if len(negative) == 1:
        (v,) = negative
        t = 4 * math.pi * abs(ys[v] * alpha.embeddings[v])
        return _prefactor(tower) * rho(tower, principal_ideal(alpha)) * arch_beta1(t) + 0.0
    return 0.0


def local_table(tower: FieldTower, alpha: ElementF, y, c: IncoherentClass) -> list[tuple[str, WhittakerEval]]:
    """(place label, stripped value) for every place that is not identically 1."""
    finite, arch = _local_values(tower, alpha, y, c)
    rows = [(P.label(), ev) for P, ev in finite.items()]
    rows += [(f"inf{v}", ev) for v, ev in enumerate(arch)]
    return rows

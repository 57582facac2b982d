"""CM field towers K = F(sqrt(delta)) over a totally real F of degree <= 2.

The tower is the global context object for every other module: it fixes
the finite ramified primes, the number r of ramified places, the number of
roots of unity w(K) and the class data |C_K|, h(K).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .number_field import (
    ElementF,
    IdealF,
    PrimeOfF,
    factorint,
    field_degree,
    is_fundamental_discriminant,
    is_prime,
    omega_data,
    ord_at,
    primes_above,
    principal_ideal,
    residue_symbol,
    sqrt_in_field,
)

# precision (as a power of 2) of the 2-adic square test
TWO_ADIC_PRECISION = 6


class TowerError(ValueError):
    """Raised when a field description does not define an admissible tower."""


class UnsupportedDegreeError(NotImplementedError):
    pass


class SplittingType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    @property
    def is_nonsplit(self) -> bool:
        return self is not SplittingType.SPLIT


@dataclass(frozen=True)
class ClassData:
    h: int
    ck: int
    ck_source: str  # "computed" or "supplied"

    def __post_init__(self):
        if self.h <= 0 or self.ck <= 0:
            raise TowerError("class data must be positive")
        if self.ck % self.h:
            raise TowerError(f"h = {self.h} does not divide |C_K| = {self.ck}")
        if self.ck_source not in ("computed", "supplied"):
            raise TowerError(f"unknown ck_source {self.ck_source!r}")


@dataclass(frozen=True)
class FieldTower:
    base_disc: int
    degree_n: int
    delta: ElementF
    rel_disc: IdealF
    finite_ramified: tuple[PrimeOfF, ...]
    r: int
    w: int
    class_data: ClassData

    @property
    def mass(self) -> Fraction:
        """|C_K| / w(K) as an exact rational."""
        return Fraction(self.class_data.ck, self.w)

    @property
    def degree_K(self) -> int:
        return 2 * self.degree_n

    def element(self, coords) -> ElementF:
        return ElementF.from_coords(self.base_disc, coords)

    def describe(self) -> str:
        if self.base_disc == 1:
            return f"Q(sqrt({self.delta}))"
        return f"Q(sqrt({self.base_disc}))(sqrt({self.delta}))"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def build_tower(base_disc: int, delta, h: int | None = None, ck: int | None = None,
                brute_force_class: bool = True) -> FieldTower:
    """Validate a field description and populate the tower invariants.

    ``delta`` is an integer, an :class:`ElementF`, or a pair of coordinates
    over {1, w}.
    """
    if base_disc != 1 and not (base_disc > 0 and is_fundamental_discriminant(base_disc)):
        raise TowerError(f"base_disc = {base_disc} is neither 1 nor a real fundamental discriminant")
    n = field_degree(base_disc)
    try:
        delta = ElementF.from_coords(base_disc, delta)
    except ValueError as exc:
        raise TowerError(str(exc)) from exc
    if delta.is_zero or not delta.is_integral:
        raise TowerError("delta must be a nonzero element of O_F")
    if any(s > 0 for s in delta.signs()):
        raise TowerError(f"delta = {delta} is not totally negative")

    norm = abs(int(delta.norm()))
    finite_ramified = []
    for p in sorted(factorint(norm)):
        for P in primes_above(base_disc, p):
            k = ord_at(delta, P)
            if k > 1:
                raise TowerError(f"delta is not squarefree at {P} (ord = {k})")
            if k == 1:
                if p == 2:
                    raise TowerError(f"K/F is ramified above 2 (at {P})")
                finite_ramified.append(P)
    if not _square_mod_4(delta):
        raise TowerError("K/F is ramified above 2 (delta is not a square modulo 4 O_F)")
    if not finite_ramified:
        raise TowerError("condition 1 fails: K/F is unramified at all finite primes")

    finite_ramified = tuple(sorted(finite_ramified))
    rel_disc = IdealF.from_map({P: 1 for P in finite_ramified})
    tower = FieldTower(base_disc, n, delta, rel_disc, finite_ramified,
                       n + len(finite_ramified), 2, ClassData(1, 1, "supplied"))
    w = roots_of_unity(tower)

    if n == 1:
        h_bf = _class_number_forms(_disc_K(delta))
        if h is not None and h != h_bf:
            raise TowerError(f"supplied h = {h} disagrees with computed h = {h_bf}")
        if ck is not None and ck != h_bf:
            raise TowerError(f"for F = Q, |C_K| = h(K) = {h_bf}, got ck = {ck}")
        class_data = ClassData(h_bf, h_bf, "computed")
    else:
        if h is None or ck is None:
            if brute_force_class:
                raise TowerError("class data must be supplied for a quartic CM field "
                                 "(brute-force class numbers are only available over Q)")
            raise TowerError("class data absent")
        class_data = ClassData(int(h), int(ck), "supplied")
    return FieldTower(base_disc, n, delta, rel_disc, finite_ramified,
                      n + len(finite_ramified), w, class_data)


def _square_mod_4(delta: ElementF) -> bool:
    D = delta.base_disc
    span = (0,) if D == 1 else (0, 1)
    for a, b in product((0, 1), span):
        diff = delta - ElementF(D, a, b) ** 2
        if diff.is_zero:
            return True
        if diff.a % 4 == 0 and diff.b % 4 == 0:
            return True
    return False


def _disc_K(delta: ElementF) -> int:
    # delta = 1 mod 4 and squarefree over Q, so disc(K) = delta
    return delta.a


# ---------------------------------------------------------------------------
# primes and splitting
# ---------------------------------------------------------------------------

def factor_rational_prime(tower: FieldTower, p: int) -> list[PrimeOfF]:
    return list(primes_above(tower.base_disc, p))


@lru_cache(maxsize=None)
def splitting_in_K(tower: FieldTower, P: PrimeOfF) -> SplittingType:
    if P in tower.finite_ramified:
        return SplittingType.RAMIFIED
    if P.p == 2:
        return SplittingType.SPLIT if _two_adic_square(tower.delta, P) else SplittingType.INERT
    k = ord_at(tower.delta, P)
    if k % 2:
        raise AssertionError(f"{P} ramifies but is not recorded")  # excluded at build time
    unit = tower.delta * ElementF(tower.base_disc, P.p) ** (-k) if k else tower.delta
    return SplittingType.SPLIT if residue_symbol(unit, P) == 1 else SplittingType.INERT


def _two_adic_square(delta: ElementF, P: PrimeOfF) -> bool:
    """Is delta a square in F_P, tested modulo 2^6 O_F."""
    D = delta.base_disc
    size = 1 << TWO_ADIC_PRECISION
    need = TWO_ADIC_PRECISION * P.e
    bs = range(size) if D != 1 else (0,)
    for a in range(size):
        for b in bs:
            diff = delta - ElementF(D, a, b) ** 2
            if diff.is_zero or ord_at(diff, P) >= need:
                return True
    return False


def chi_at_prime(tower: FieldTower, P: PrimeOfF) -> int:
    return {SplittingType.SPLIT: 1, SplittingType.INERT: -1,
            SplittingType.RAMIFIED: 0}[splitting_in_K(tower, P)]


def local_chi(tower: FieldTower, alpha: ElementF, P: PrimeOfF) -> int:
    """chi_P(alpha): the Hilbert symbol (alpha, delta)_P for alpha in F^x."""
    st = splitting_in_K(tower, P)
    k = ord_at(alpha, P)
    if st is SplittingType.SPLIT:
        return 1
    if st is SplittingType.INERT:
        return -1 if k % 2 else 1
    # tame symbol with ord_P(delta) = 1
    unit = alpha * tower.delta ** (-k)
    if k % 2:
        unit = -unit
    return residue_symbol(unit, P)


def arch_chi(alpha: ElementF) -> tuple[int, ...]:
    """chi_v(alpha) at the real places: K is totally imaginary, so this is the sign."""
    return alpha.signs()


def relevant_primes(tower: FieldTower, alpha: ElementF) -> list[PrimeOfF]:
    """Primes in the support of (alpha) together with the finite ramified primes."""
    return sorted(set(principal_ideal(alpha).support) | set(tower.finite_ramified))


def nonsplit_candidates(tower: FieldTower, alpha: ElementF) -> list[PrimeOfF]:
    return [P for P in relevant_primes(tower, alpha)
            if splitting_in_K(tower, P).is_nonsplit]


# ---------------------------------------------------------------------------
# global invariants
# ---------------------------------------------------------------------------

# m -> minimal polynomial of 2cos(2 pi / m) as (c1, c0): x^2 + c1 x + c0,
# or (c0,) for a linear polynomial x + c0
_REAL_CYCLOTOMIC = {
    3: (1,), 4: (0,), 6: (-1,),
    5: (1, -1), 10: (-1, -1), 8: (0, -2), 12: (0, -3),
}


def roots_of_unity(tower: FieldTower) -> int:
    """Order of the torsion of O_K^x.

    zeta_m lies in K = F(sqrt(delta)) exactly when eta = zeta + 1/zeta lies in F
    and delta * (eta^2 - 4) is a square in F.
    """
    D = tower.base_disc
    w = 2
    for m, poly in _REAL_CYCLOTOMIC.items():
        if (2 * tower.degree_n) % _phi(m):
            continue
        for eta in _roots_in_F(D, poly):
            c = eta * eta - 4
            if sqrt_in_field(tower.delta * c) is not None:
                w = math.lcm(w, m)
                break
    return w


def _phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def _roots_in_F(D: int, poly: tuple[int, ...]) -> list[ElementF]:
    if len(poly) == 1:
        return [ElementF(D, -poly[0])]
    c1, c0 = poly
    disc = ElementF(D, c1 * c1 - 4 * c0)
    s = sqrt_in_field(disc)
    if s is None:
        return []
    return [(s - c1) / 2, (-s - c1) / 2]


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """Reduced positive definite forms (a, b, c) with b^2 - 4ac = disc < 0."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError("need a negative discriminant = 0, 1 mod 4")
    out = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if c == a and b < 0:
                continue
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            out.append((a, b, c))
        a += 1
    return out


def _class_number_forms(disc: int) -> int:
    return len(reduced_forms(disc))


def class_number_bruteforce(tower: FieldTower) -> int:
    if tower.degree_n != 1:
        raise UnsupportedDegreeError("class numbers are only computed for imaginary quadratic K")
    return _class_number_forms(_disc_K(tower.delta))


def e_tilde(tower: FieldTower, P: PrimeOfF) -> int:
    """Ramification index in K~/F of the primes above P.

    K~ = F(sqrt(delta), sqrt(delta')) with delta' the conjugate of delta; all
    ramification is tame, so the inertia group is cyclic and the index is 2
    exactly when P ramifies in F(sqrt(delta)) or F(sqrt(delta')).
    """
    ram = set(tower.finite_ramified)
    return 2 if (P in ram or P.conjugate() in ram) else 1


def normal_closure_degree(tower: FieldTower) -> int:
    if tower.degree_n == 1:
        return 2
    # K/Q is Galois iff delta * delta' = N(delta) is a square in F
    n = ElementF.rational(tower.base_disc, tower.delta.norm())
    return 4 if sqrt_in_field(n) is not None else 8


@dataclass(frozen=True)
class Diagnostics:
    passed: bool
    failures: tuple[str, ...]
    normal_closure_degree: int
    checked_primes: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.passed


def ramification_index_over_Q(tower: FieldTower, l: int) -> int:
    """Largest ramification index over Q of a prime of K~ above l."""
    return max(P.e * e_tilde(tower, P) for P in primes_above(tower.base_disc, l))


def validate_conditions(tower: FieldTower) -> Diagnostics:
    failures = []
    if not tower.finite_ramified:
        failures.append("condition 1: K/F is unramified at all finite primes")
    deg = normal_closure_degree(tower)
    bound = deg // tower.degree_K + 1
    checked = tuple(l for l in range(2, bound + 1) if is_prime(l))
    for l in checked:
        e = ramification_index_over_Q(tower, l)
        if e >= l:
            failures.append(f"condition 2: ramification index {e} above l = {l} is not < {l}")
    return Diagnostics(not failures, tuple(failures), deg, checked)

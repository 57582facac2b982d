"""Exact arithmetic in Q and in real quadratic fields.

A real quadratic field F = Q(sqrt(D)) is presented over the integral basis
{1, w} where w = (1 + sqrt(D))/2 when D = 1 mod 4 and w = sqrt(D/4) when
D = 0 mod 4.  The rational field is the degenerate case D = 1, where every
element has b = 0.

Everything here is exact integer/rational arithmetic; floating point only
appears in :meth:`ElementF.embeddings`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping


# ---------------------------------------------------------------------------
# rational integers
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def factorint(n: int) -> dict[int, int]:
    """Trial-division factorization of |n|; {} for n = +-1."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    i = 5
    while i * i <= n:
        for p in (i, i + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        i += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo the prime p (Tonelli-Shanks), or None."""
    a %= p
    if p == 2 or a == 0:
        return a
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# the base field
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def omega_data(base_disc: int) -> tuple[int, int]:
    """(trace, norm) of w, so that w^2 = trace*w - norm."""
    if base_disc == 1:
        return 0, 0
    if base_disc % 4 == 1:
        return 1, (1 - base_disc) // 4
    return 0, -(base_disc // 4)


def field_degree(base_disc: int) -> int:
    return 1 if base_disc == 1 else 2


@dataclass(frozen=True)
class ElementF:
    """(a + b*w)/den in F, kept in lowest terms with den > 0."""

    base_disc: int
    a: int
    b: int = 0
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        if self.base_disc == 1 and self.b != 0:
            raise ValueError("elements of Q have no w-coordinate")
        a, b, den = self.a, self.b, self.den
        if den < 0:
            a, b, den = -a, -b, -den
        g = math.gcd(math.gcd(a, b), den)
        if g > 1:
            a, b, den = a // g, b // g, den // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "den", den)

    @classmethod
    def rational(cls, base_disc: int, q) -> "ElementF":
        q = Fraction(q)
        return cls(base_disc, q.numerator, 0, q.denominator)

    @classmethod
    def from_coords(cls, base_disc: int, coords) -> "ElementF":
        """Build from an int, a Fraction, or an (a, b[, den]) tuple."""
        if isinstance(coords, ElementF):
            return coords
        if isinstance(coords, (int, Fraction)):
            return cls.rational(base_disc, coords)
        coords = tuple(coords)
        if len(coords) == 1:
            return cls.rational(base_disc, coords[0])
        if len(coords) == 2:
            a, b = (Fraction(c) for c in coords)
            den = math.lcm(a.denominator, b.denominator)
            return cls(base_disc, int(a * den), int(b * den), den)
        a, b, den = coords
        return cls(base_disc, int(a), int(b), int(den))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "ElementF":
        if isinstance(other, ElementF):
            if other.base_disc != self.base_disc:
                raise ValueError("elements of different fields")
            return other
        return ElementF.rational(self.base_disc, other)

    def __add__(self, other):
        o = self._coerce(other)
        return ElementF(self.base_disc, self.a * o.den + o.a * self.den,
                        self.b * o.den + o.b * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ElementF(self.base_disc, -self.a, -self.b, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        t, m = omega_data(self.base_disc)
        a = self.a * o.a - m * self.b * o.b
        b = self.a * o.b + o.a * self.b + t * self.b * o.b
        return ElementF(self.base_disc, a, b, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "ElementF":
        if self.is_zero:
            raise ZeroDivisionError("inverse of 0")
        if self.base_disc == 1:
            return ElementF(1, self.den, 0, self.a)
        n = self.norm()
        c = self.conjugate()
        # c / n with n rational
        return ElementF(self.base_disc, c.a * n.denominator, c.b * n.denominator,
                        c.den * n.numerator)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = ElementF(self.base_disc, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- invariants ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def degree(self) -> int:
        return field_degree(self.base_disc)

    def conjugate(self) -> "ElementF":
        if self.base_disc == 1:
            return self
        t, _ = omega_data(self.base_disc)
        return ElementF(self.base_disc, self.a + t * self.b, -self.b, self.den)

    def norm(self) -> Fraction:
        if self.base_disc == 1:
            return Fraction(self.a, self.den)
        t, m = omega_data(self.base_disc)
        num = self.a * self.a + t * self.a * self.b + m * self.b * self.b
        return Fraction(num, self.den * self.den)

    def trace(self) -> Fraction:
        if self.base_disc == 1:
            return Fraction(self.a, self.den)
        t, _ = omega_data(self.base_disc)
        return Fraction(2 * self.a + t * self.b, self.den)

    def signs(self) -> tuple[int, ...]:
        """Exact signs under the real embeddings (w -> (t +- sqrt D)/2)."""
        if self.base_disc == 1:
            return (_sign(self.a),)
        t, _ = omega_data(self.base_disc)
        x = 2 * self.a + t * self.b
        out = []
        for s in (1, -1):
            y = s * self.b  # value is (x + y*sqrt(D)) / (2 den)
            if y == 0:
                out.append(_sign(x))
            elif x == 0 or _sign(x) == _sign(y):
                out.append(_sign(y) if x == 0 else _sign(x))
            else:
                out.append(_sign(x) if x * x > y * y * self.base_disc else _sign(y))
        return tuple(out)

    @cached_property
    def embeddings(self) -> tuple[float, ...]:
        if self.base_disc == 1:
            return (self.a / self.den,)
        t, _ = omega_data(self.base_disc)
        r = math.sqrt(self.base_disc)
        x = 2 * self.a + t * self.b
        return ((x + self.b * r) / (2 * self.den), (x - self.b * r) / (2 * self.den))

    @property
    def is_totally_positive(self) -> bool:
        return all(s > 0 for s in self.signs())

    def numerator(self) -> "ElementF":
        return ElementF(self.base_disc, self.a, self.b, 1)

    def __str__(self) -> str:
        if self.base_disc == 1:
            return str(Fraction(self.a, self.den))
        if self.b == 0:
            return str(Fraction(self.a, self.den))
        wpart = {1: "w", -1: "-w"}.get(self.b, f"{self.b}*w")
        if self.a:
            body = f"{self.a}{'+' if self.b > 0 else ''}{wpart}"
        else:
            body = wpart
        return body if self.den == 1 else f"({body})/{self.den}"


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sqrt_in_field(x: ElementF) -> ElementF | None:
    """A square root of x inside F, or None when x is not a square."""
    D = x.base_disc
    if x.is_zero:
        return x
    if D == 1:
        r = rational_sqrt(Fraction(x.a, x.den))
        return None if r is None else ElementF.rational(1, r)
    t, _ = omega_data(D)
    # x = u + v sqrt(D) with w = (t + sqrt D)/2
    u = Fraction(2 * x.a + t * x.b, 2 * x.den)
    v = Fraction(x.b, 2 * x.den)
    candidates: list[tuple[Fraction, Fraction]] = []
    if v == 0:
        r = rational_sqrt(u)
        if r is not None:
            candidates.append((r, Fraction(0)))
        r = rational_sqrt(u / D)
        if r is not None:
            candidates.append((Fraction(0), r))
    else:
        s = rational_sqrt(u * u - D * v * v)
        if s is not None:
            for half in ((u + s) / 2, (u - s) / 2):
                p = rational_sqrt(half)
                if p:
                    candidates.append((p, v / (2 * p)))
    for p, q in candidates:
        # p + q sqrt(D) = (p - q t) + 2 q w
        root = ElementF.from_coords(D, (p - q * t, 2 * q))
        if root * root == x:
            return root
    return None


# ---------------------------------------------------------------------------
# primes of F
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PrimeOfF:
    """A prime of O_F above the rational prime p.

    ``root`` is the residue of w modulo the prime when f = 1 and F != Q,
    otherwise None.
    """

    p: int
    root: int | None
    f: int
    e: int
    base_disc: int

    @property
    def norm(self) -> int:
        return self.p ** self.f

    def label(self) -> str:
        if self.root is None:
            return f"({self.p})"
        return f"({self.p},w-{self.root})"

    def __str__(self) -> str:
        return self.label()

    def conjugate(self) -> "PrimeOfF":
        """The Galois conjugate prime sigma(P) (itself unless P is split)."""
        if self.root is None or self.e == 2:
            return self
        t, _ = omega_data(self.base_disc)
        return PrimeOfF(self.p, (t - self.root) % self.p, 1, 1, self.base_disc)


@lru_cache(maxsize=None)
def primes_above(base_disc: int, p: int) -> tuple[PrimeOfF, ...]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if base_disc == 1:
        return (PrimeOfF(p, None, 1, 1, 1),)
    t, m = omega_data(base_disc)
    if p == 2:
        roots = [r for r in (0, 1) if (r * r - t * r + m) % 2 == 0]
    else:
        s = sqrt_mod(base_disc, p)
        if s is None:
            roots = []
        else:
            inv2 = pow(2, -1, p)
            roots = sorted({(t + s) * inv2 % p, (t - s) * inv2 % p})
    if base_disc % p == 0:
        (r,) = roots
        return (PrimeOfF(p, r, 1, 2, base_disc),)
    if not roots:
        return (PrimeOfF(p, None, 2, 1, base_disc),)
    return tuple(PrimeOfF(p, r, 1, 1, base_disc) for r in roots)


def _ord_integral(a: int, b: int, P: PrimeOfF) -> int:
    p = P.p
    if b == 0 and P.base_disc == 1:
        return valuation(a, p)
    content = math.gcd(a, b)
    k = valuation(content, p)
    a //= p ** k
    b //= p ** k
    base = P.e * k
    if P.f == 2:
        return base
    t, m = omega_data(P.base_disc)
    n = a * a + t * a * b + m * b * b
    if P.e == 2:
        return base + valuation(n, p)
    if (a + b * P.root) % p:
        return base
    return base + valuation(n, p)


def ord_at(alpha: ElementF, P: PrimeOfF) -> int:
    """P-adic valuation of a nonzero element of F."""
    if alpha.is_zero:
        raise ValueError("valuation of 0")
    if alpha.base_disc != P.base_disc:
        raise ValueError("element and prime live in different fields")
    num = _ord_integral(alpha.a, alpha.b, P)
    return num - P.e * valuation(alpha.den, P.p)


def residue_symbol(alpha: ElementF, P: PrimeOfF) -> int:
    """Quadratic character of the residue of a P-unit, P above an odd prime."""
    p = P.p
    if p == 2:
        raise ValueError("residue symbol needs odd residue characteristic")
    if ord_at(alpha, P) != 0:
        raise ValueError(f"{alpha} is not a unit at {P}")
    k = valuation(alpha.den, p)
    d_rest = alpha.den // p ** k
    num = alpha.numerator()
    correction = 1
    if P.f == 1 and P.e == 1 and P.base_disc != 1 and k:
        # push the conjugate prime out of the numerator before dividing by p^k
        other = P.conjugate().root
        lam = ElementF(P.base_disc, -other, 1) ** k
        num = num * lam
        correction = legendre((P.root - other) ** k, p)
    if k:
        num = ElementF(P.base_disc, num.a // p ** k, num.b // p ** k)
    # rational residues are squares in F_{p^2}, so d_rest goes through the same map
    sym = _integral_symbol(num, P) * _integral_symbol(ElementF(P.base_disc, d_rest), P) * correction
    if sym == 0:
        raise AssertionError("residue vanished for a unit")
    return sym


def _integral_symbol(beta: ElementF, P: PrimeOfF) -> int:
    p = P.p
    if P.base_disc == 1:
        return legendre(beta.a, p)
    if P.f == 2:
        # character of F_{p^2}^x restricted through the norm to F_p^x
        n = beta.norm()
        return legendre(n.numerator, p)
    return legendre(beta.a + beta.b * P.root, p)


# ---------------------------------------------------------------------------
# fractional ideals of O_F
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdealF:
    """A fractional ideal of O_F stored as a sorted prime -> exponent map."""

    exponents: tuple[tuple[PrimeOfF, int], ...] = ()

    @classmethod
    def from_map(cls, mapping: Mapping[PrimeOfF, int] | Iterable[tuple[PrimeOfF, int]]) -> "IdealF":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        acc: dict[PrimeOfF, int] = {}
        for P, k in items:
            acc[P] = acc.get(P, 0) + k
        return cls(tuple(sorted((P, k) for P, k in acc.items() if k != 0)))

    @classmethod
    def unit(cls) -> "IdealF":
        return cls(())

    @classmethod
    def prime(cls, P: PrimeOfF, k: int = 1) -> "IdealF":
        return cls.from_map({P: k})

    def as_dict(self) -> dict[PrimeOfF, int]:
        return dict(self.exponents)

    def __mul__(self, other: "IdealF") -> "IdealF":
        return IdealF.from_map(list(self.exponents) + list(other.exponents))

    def __pow__(self, k: int) -> "IdealF":
        return IdealF.from_map([(P, e * k) for P, e in self.exponents])

    def inverse(self) -> "IdealF":
        return self ** -1

    def __truediv__(self, other: "IdealF") -> "IdealF":
        return self * other.inverse()

    def ord(self, P: PrimeOfF) -> int:
        return self.as_dict().get(P, 0)

    @property
    def support(self) -> tuple[PrimeOfF, ...]:
        return tuple(P for P, _ in self.exponents)

    @property
    def is_integral(self) -> bool:
        return all(k > 0 for _, k in self.exponents)

    @property
    def is_unit(self) -> bool:
        return not self.exponents

    def __str__(self) -> str:
        if not self.exponents:
            return "(1)"
        return "*".join(P.label() if k == 1 else f"{P.label()}^{k}" for P, k in self.exponents)


def principal_ideal(alpha: ElementF) -> IdealF:
    """The fractional ideal (alpha) as an exponent map."""
    if alpha.is_zero:
        raise ValueError("principal ideal of 0")
    n = alpha.numerator().norm()
    rational_primes = set(factorint(int(n))) | set(factorint(alpha.den))
    out = {}
    for p in sorted(rational_primes):
        for P in primes_above(alpha.base_disc, p):
            k = ord_at(alpha, P)
            if k:
                out[P] = k
    return IdealF.from_map(out)


def ideal_norm(I: IdealF) -> Fraction:
    out = Fraction(1)
    for P, k in I.exponents:
        out *= Fraction(P.norm) ** k
    return out

"""Brute-force enumerations in an imaginary quadratic O_K, used as independent oracles.

O_K = Z[theta] with theta = (1 + sqrt(disc))/2, disc = 1 mod 4.  Ideals are
Z-lattices in the coordinates (x, y) <-> x + y*theta, given in Hermite normal
form by the rows (A, 0), (B, C) with 0 <= B < A.  Nothing here touches the
local-factor machinery of :mod:`cm_eisenstein.ideal_arith`.
"""

from __future__ import annotations

import math


def _k(disc: int) -> int:
    # theta^2 = theta + k
    if disc % 4 != 1:
        raise ValueError("oracle needs disc = 1 mod 4")
    return (disc - 1) // 4


def _contains(lattice, x: int, y: int) -> bool:
    (A, _), (B, C) = lattice
    if y % C:
        return False
    j = y // C
    return (x - j * B) % A == 0


def is_ideal(lattice, disc: int) -> bool:
    (A, _), (B, C) = lattice
    k = _k(disc)
    # theta * (x + y theta) = y k + (x + y) theta
    return _contains(lattice, 0, A) and _contains(lattice, C * k, B + C)


def ideals_of_norm(disc: int, m: int):
    """All ideals of O_K of norm m, as HNF lattices."""
    out = []
    for A in range(1, m + 1):
        if m % A:
            continue
        C = m // A
        for B in range(A):
            lat = ((A, 0), (B, C))
            if is_ideal(lat, disc):
                out.append(lat)
    return out


def count_ideals_of_norm(disc: int, m: int) -> int:
    return len(ideals_of_norm(disc, m))


def norm_form(disc: int, x: int, y: int) -> int:
    return x * x + x * y - _k(disc) * y * y


def _hnf(vectors) -> tuple[tuple[int, int], tuple[int, int]]:
    """Row HNF of the lattice spanned by integer vectors (x, y) in Z^2."""
    vectors = [tuple(v) for v in vectors]
    # a lattice vector g with minimal positive y-part C
    gx, C = 0, 0
    for x, y in vectors:
        g, s, t = _egcd(C, y)
        gx, C = s * gx + t * x, g
    if C < 0:
        gx, C = -gx, -C
    # L meets the x-axis in the span of v - (y/C) g
    A = 0
    for x, y in vectors:
        A = math.gcd(A, x - (y // C) * gx)
    return ((A, 0), (gx % A, C))


def _egcd(a: int, b: int):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t


def multiply(I, J, disc: int):
    k = _k(disc)
    gens = []
    for (x1, y1) in I:
        for (x2, y2) in J:
            gens.append((x1 * x2 + y1 * y2 * k, x1 * y2 + x2 * y1 + y1 * y2))
    return _hnf(gens)


def conjugate(I, disc: int):
    # conj(x + y theta) = (x + y) - y theta
    return _hnf([(x + y, -y) for (x, y) in I])


def lattice_norm(I) -> int:
    (A, _), (_, C) = I
    return A * C


def has_element_of_norm(I, n: int, disc: int) -> bool:
    """Whether the lattice I contains an element x + y theta of norm n."""
    D = -disc
    # n = (x + y/2)^2 + D y^2 / 4
    ymax = math.isqrt(4 * n // D) + 1
    for y in range(-ymax, ymax + 1):
        rest4 = 4 * n - D * y * y  # = (2x + y)^2
        if rest4 < 0:
            continue
        s = math.isqrt(rest4)
        if s * s != rest4:
            continue
        for twox_plus_y in {s, -s}:
            if (twox_plus_y - y) % 2:
                continue
            x = (twox_plus_y - y) // 2
            if _contains(I, x, y):
                return True
    return False


def equivalent(I, J, disc: int) -> bool:
    """I ~ J iff I * conj(J) is principal."""
    prod = multiply(I, conjugate(J, disc), disc)
    return has_element_of_norm(prod, lattice_norm(prod), disc)


def class_number_ideals(disc: int) -> int:
    """h(K) by partitioning ideals of norm <= the Minkowski bound into classes."""
    bound = int(2 / math.pi * math.sqrt(-disc)) + 1
    reps = []
    for m in range(1, bound + 1):
        for I in ideals_of_norm(disc, m):
            if not any(equivalent(I, R, disc) for R in reps):
                reps.append(I)
    return len(reps)

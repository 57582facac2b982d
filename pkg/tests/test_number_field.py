from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cm_eisenstein.number_field import (
    ElementF,
    IdealF,
    factorint,
    ideal_norm,
    is_fundamental_discriminant,
    ord_at,
    primes_above,
    principal_ideal,
    residue_symbol,
    sqrt_in_field,
    sqrt_mod,
)

coords = st.integers(-60, 60)
nonzero = st.tuples(coords, coords).filter(lambda c: c != (0, 0))


def test_factorint_and_sqrt_mod():
    assert factorint(360) == {2: 3, 3: 2, 5: 1}
    for p in (3, 7, 13, 101):
        for a in range(1, p):
            r = sqrt_mod(a, p)
            if r is not None:
                assert r * r % p == a


def test_fundamental_discriminants():
    assert [d for d in range(2, 30) if is_fundamental_discriminant(d)] == [5, 8, 12, 13, 17, 21, 24, 28, 29]


def test_primes_of_sqrt5():
    assert [P.f for P in primes_above(5, 11)] == [1, 1]
    (P5,) = primes_above(5, 5)
    assert P5.e == 2
    (P7,) = primes_above(5, 7)
    assert P7.f == 2 and P7.norm == 49
    (P3,) = primes_above(1, 3)
    assert (P3.e, P3.f) == (1, 1)


def test_ord_examples():
    P3 = primes_above(1, 3)[0]
    P7 = primes_above(1, 7)[0]
    assert ord_at(ElementF(1, 3), P3) == 1
    assert ord_at(ElementF(1, 1, 0, 7), P7) == -1
    w = ElementF(5, 0, 1)
    P11 = next(P for P in primes_above(5, 11) if P.root == 4)
    assert ord_at(w, P11) == 0


def test_principal_ideal_examples():
    assert principal_ideal(ElementF(1, 1)) == IdealF.unit()
    P2, P3 = primes_above(1, 2)[0], primes_above(1, 3)[0]
    assert principal_ideal(ElementF(1, 12)).as_dict() == {P2: 2, P3: 1}
    sqrt5 = ElementF(5, -1, 2)  # 2w - 1
    assert sqrt5 * sqrt5 == ElementF(5, 5)
    (P5,) = primes_above(5, 5)
    (Q3,) = primes_above(5, 3)  # 3 is inert in Q(sqrt 5)
    assert principal_ideal(ElementF(5, 3) * sqrt5).as_dict() == {P5: 1, Q3: 1}


def test_ideal_norm_examples():
    assert ideal_norm(IdealF.unit()) == 1
    assert ideal_norm(principal_ideal(ElementF(5, 3))) == 9
    P7 = primes_above(1, 7)[0]
    assert ideal_norm(IdealF.prime(P7, -1)) == Fraction(1, 7)


@given(nonzero, nonzero)
def test_norm_multiplicative(x, y):
    a, b = ElementF(5, *x), ElementF(5, *y)
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * a.inverse() == ElementF(5, 1)


@given(nonzero)
def test_norm_of_principal_ideal(x):
    a = ElementF(13, *x)
    assert ideal_norm(principal_ideal(a)) == abs(a.norm())


@given(nonzero, nonzero)
def test_principal_ideal_multiplicative(x, y):
    a, b = ElementF(5, *x), ElementF(5, *y)
    assert principal_ideal(a * b) == principal_ideal(a) * principal_ideal(b)
    assert principal_ideal(a / b) == principal_ideal(a) / principal_ideal(b)


@given(nonzero)
def test_signs_match_embeddings(x):
    a = ElementF(8, *x)
    assert a.signs() == tuple((v > 0) - (v < 0) for v in a.embeddings)


@given(nonzero)
def test_sqrt_in_field(x):
    a = ElementF(5, *x)
    assert sqrt_in_field(a * a) in (a, -a)


@pytest.mark.parametrize("D,p", [(5, 11), (5, 7), (5, 19), (13, 3), (1, 13)])
def test_residue_symbol_is_multiplicative(D, p):
    for P in primes_above(D, p):
        units = [ElementF(D, a, b) for a in range(1, 6) for b in (range(3) if D != 1 else (0,)) if ord_at(ElementF(D, a, b), P) == 0]
        for u in units:
            for v in units:
                assert residue_symbol(u * v, P) == residue_symbol(u, P) * residue_symbol(v, P)

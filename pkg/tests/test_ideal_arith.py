import pytest
from hypothesis import given, strategies as st

from cm_eisenstein import SplittingType, build_tower
from cm_eisenstein.ideal_arith import ElementF, IdealF, principal_ideal, rho, rho_local
from cm_eisenstein.number_field import primes_above
from cm_eisenstein.oracles import count_ideals_of_norm, class_number_ideals, ideals_of_norm


def test_rho_local_examples():
    assert rho_local(SplittingType.SPLIT, 2) == 3
    assert rho_local(SplittingType.INERT, 3) == 0
    assert rho_local(SplittingType.SPLIT, -1) == 0
    assert rho_local(SplittingType.RAMIFIED, 5) == 1


def test_rho_examples(k7):
    assert rho(k7, IdealF.unit()) == 1
    assert rho(k7, principal_ideal(ElementF(1, 2))) == 2
    assert rho(k7, principal_ideal(ElementF(1, 3))) == 0


@pytest.mark.parametrize("d", [-7, -11, -15, -23, -35])
def test_rho_against_enumeration(d):
    K = build_tower(1, d)
    for m in range(1, 301):
        assert rho(K, principal_ideal(ElementF(1, m))) == count_ideals_of_norm(d, m), m


def test_oracle_counts_for_m7():
    got = [count_ideals_of_norm(-7, m) for m in range(1, 20)]
    assert got == [1, 2, 0, 3, 0, 0, 1, 4, 1, 0, 2, 0, 0, 2, 0, 5, 0, 2, 0]


def test_oracle_lattices_are_ideals():
    for I in ideals_of_norm(-23, 12):
        (A, _), (B, C) = I
        assert A * C == 12 and 0 <= B < A


def test_oracle_class_numbers():
    assert [class_number_ideals(d) for d in (-3, -7, -15, -23, -47, -71)] == [1, 1, 2, 3, 5, 7]


ideal_exps = st.lists(st.tuples(st.sampled_from([2, 3, 7, 11, 13, 29]), st.integers(-2, 5)), max_size=4)


@given(ideal_exps, ideal_exps)
def test_rho_multiplicative_on_coprime(a, b):
    K = build_tower(1, -7)
    I = IdealF.from_map({primes_above(1, p)[0]: k for p, k in a})
    J = IdealF.from_map({primes_above(1, p)[0]: k for p, k in b})
    if set(I.support) & set(J.support):
        return
    assert rho(K, I * J) == rho(K, I) * rho(K, J)


@given(st.integers(1, 10**6))
def test_rho_nonnegative_and_zero_on_fractional(m):
    K = build_tower(1, -23)
    I = principal_ideal(ElementF(1, m))
    assert rho(K, I) >= 1 or any(k % 2 for P, k in I.exponents)
    P = primes_above(1, 2)[0]
    assert rho(K, I * IdealF.prime(P, -(I.ord(P) + 1))) == 0

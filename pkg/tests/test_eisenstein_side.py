import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cm_eisenstein import (
    ElementF,
    b_phi,
    b_phi_closed,
    beta1,
    beta1_scaled,
    build_tower,
    coeff_derivative_for_class,
    diff_set,
    enumerate_Xi,
    value_at_zero,
    whittaker_arch,
    whittaker_finite,
)
from cm_eisenstein.eisenstein_side import IncoherentClass, arch_beta1, local_table
from cm_eisenstein.number_field import primes_above

from oracle_quad import beta1_quad

P2, P3, P7 = (primes_above(1, p)[0] for p in (2, 3, 7))
BETA1_AT_1 = 0.219383934395520
BETA1_AT_TENTH = 1.8229239584193906


def test_beta1_spot_values():
    assert beta1(1.0) == pytest.approx(BETA1_AT_1, abs=1e-12)
    assert beta1(0.1) == pytest.approx(BETA1_AT_TENTH, rel=1e-14)


@pytest.mark.parametrize("t", np.logspace(np.log10(0.1), np.log10(50), 50))
def test_beta1_matches_quadrature(t):
    assert beta1(t) == pytest.approx(beta1_quad(t), rel=1e-10)


def test_beta1_tail():
    t = 500.0
    assert abs(t * beta1_scaled(t) - 1) < 1e-2
    for t in np.linspace(1, 60, 40):
        assert beta1(t) < math.exp(-t) / t
    assert arch_beta1(800.0) == 0.0  # underflows cleanly instead of overflowing
    with pytest.raises(ValueError):
        beta1(0.0)


@given(st.floats(0.01, 300))
def test_beta1_scaled_consistent(t):
    assert beta1_scaled(t) * math.exp(-t) == pytest.approx(beta1(t), rel=1e-12)


def test_xi():
    (c,) = enumerate_Xi(build_tower(1, -7))
    assert c.signs == ((P7, -1),)
    two = enumerate_Xi(build_tower(1, -15))
    assert sorted(c.label() for c in two) == ["+-", "-+"]
    assert len(enumerate_Xi(build_tower(1, -231))) == 4  # 3, 7, 11
    with pytest.raises(ValueError):
        IncoherentClass(((P7, 1),))


def test_diff_examples(k7):
    (c,) = enumerate_Xi(k7)
    d = diff_set(k7, ElementF(1, 3), c)
    assert d.finite == (P3,) and d.arch == ()
    d = diff_set(k7, ElementF(1, -2), c)
    assert d.finite == () and d.arch == (0,)
    d = diff_set(k7, ElementF(1, 1), c)
    assert d.finite == (P7,)


def test_whittaker_examples(k7):
    (c,) = enumerate_Xi(k7)
    ev = whittaker_finite(k7, P3, ElementF(1, 3), c)
    assert ev.value0 == 0 and ev.deriv0 == pytest.approx(math.log(3))
    assert whittaker_finite(k7, P2, ElementF(1, 4), c).value0 == 3
    ev = whittaker_finite(k7, P7, ElementF(1, 3), c)
    assert ev.value0 == pytest.approx(2 / math.sqrt(7)) and ev.deriv0 == 0
    assert whittaker_finite(k7, P3, ElementF(1, 1, 0, 3), c).value0 == 0
    assert whittaker_arch(3.0, 0.7).value0 == 2
    assert whittaker_arch(-2.0, 1.0).deriv0 == pytest.approx(beta1(8 * math.pi), rel=1e-14)
    assert whittaker_arch(-2.0, 1e3).deriv0 < 1e-300


def test_worked_instance(k7):
    golden = -(4 / math.sqrt(7)) * math.log(3)
    (c,) = enumerate_Xi(k7)
    alpha = ElementF(1, 3)
    assert coeff_derivative_for_class(k7, alpha, 1.0, c) == pytest.approx(golden, abs=1e-12)
    assert b_phi(k7, alpha, 1.0) == pytest.approx(golden, abs=1e-12)
    assert b_phi_closed(k7, alpha, 1.0) == pytest.approx(golden, abs=1e-12)
    labels = dict(local_table(k7, alpha, 1.0, c))
    assert labels["(7)"].value0 == pytest.approx(2 / math.sqrt(7))


def test_negative_alpha(k7):
    want = -(2 / math.sqrt(7)) * 2 * beta1(8 * math.pi)
    assert b_phi(k7, ElementF(1, -2), 1.0) == pytest.approx(want, rel=1e-13)
    assert b_phi_closed(k7, ElementF(1, -2), 1.0) == pytest.approx(want, rel=1e-13)


def test_diff_of_size_three_gives_zero():
    # over Q(sqrt -7), alpha = 3*5 has odd order at two inert primes
    K = build_tower(1, -7)
    (c,) = enumerate_Xi(K)
    alpha = ElementF(1, 15)
    assert len(diff_set(K, alpha, c)) == 3
    assert coeff_derivative_for_class(K, alpha, 1.0, c) == 0.0
    assert b_phi(K, alpha, 1.0) == 0.0


def test_alpha_two_all_split():
    K = build_tower(1, -7)
    # (2) splits; only the ramified prime can carry Diff
    assert b_phi(K, ElementF(1, 2), 1.0) == pytest.approx(b_phi_closed(K, ElementF(1, 2), 1.0), rel=1e-14)


TOWERS = [(1, -7), (1, -11), (1, -15), (1, -23), (1, -231), (5, -7), (5, (-11, -3)), (5, (-2, -1)), (13, -7)]


@pytest.mark.parametrize("D,delta", TOWERS)
def test_diff_odd_and_value_zero(D, delta):
    K = build_tower(D, delta, h=1, ck=1) if D != 1 else build_tower(D, delta)
    span = [(a, 0) for a in range(-30, 31)] if D == 1 else [(a, b) for a in range(-7, 8) for b in range(-7, 8)]
    for coords in span:
        alpha = K.element(coords)
        if alpha.is_zero:
            continue
        for c in enumerate_Xi(K):
            assert len(diff_set(K, alpha, c)) % 2 == 1
            assert value_at_zero(K, alpha, (1.0,) * K.degree_n, c) == 0.0


@pytest.mark.parametrize("D,delta", TOWERS)
def test_two_routes_norm_box(D, delta):
    K = build_tower(D, delta, h=1, ck=1) if D != 1 else build_tower(D, delta)
    ys = [0.3, 1.0, 4.0]
    if D == 1:
        alphas = [K.element(a) for a in range(-100, 101) if a]
    else:
        alphas = [K.element((a, b)) for a in range(-40, 41) for b in range(-40, 41)
                  if (a, b) != (0, 0) and abs(K.element((a, b)).norm()) <= 10**4][::7]
    for alpha in alphas:
        for y in ys:
            s, c = b_phi(K, alpha, y), b_phi_closed(K, alpha, y)
            assert s == pytest.approx(c, rel=1e-9, abs=1e-12), (str(alpha), y)


@given(st.integers(1, 3000))
def test_b_phi_nonpositive_for_positive_alpha(a):
    K = build_tower(1, -23)
    assert b_phi(K, ElementF(1, a), 1.0) <= 0

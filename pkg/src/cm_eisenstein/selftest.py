"""Built-in invariant suites, run by ``cmeis selftest``.

Each suite returns a list of failure strings; an empty list is a pass.
The two mutation suites check that the harness would notice a wrong shift
convention or a wrong global sign.
"""

from __future__ import annotations

import sys

import mpmath

from . import oracles
from .cm_fields import build_tower
from .degree_side import arithmetic_degree
from .eisenstein_side import b_phi, b_phi_closed, beta1, enumerate_Xi
from .ideal_arith import ElementF, principal_ideal, rho
from .local_deformation import epsilon_P, order_profile
from .verify_cli import rhs_from_b_phi

BUILTIN_DISCS = (-7, -11, -23)
REL_TOL = 1e-9


def _close(a: float, b: float, tol: float = REL_TOL) -> bool:
    return abs(a - b) <= 1e-12 or abs(a - b) <= tol * max(abs(a), abs(b))


def suite_rho_oracle(bound: int = 200) -> list[str]:
    bad = []
    for d in (-7, -23):
        tower = build_tower(1, d)
        for m in range(1, bound + 1):
            got = rho(tower, principal_ideal(ElementF(1, m)))
            want = oracles.count_ideals_of_norm(d, m)
            if got != want:
                bad.append(f"rho disc {d}, m = {m}: {got} != {want}")
    return bad


def _beta1_quad(t: float) -> float:
    with mpmath.workdps(30):
        return float(mpmath.quad(lambda u: mpmath.exp(-t * u) / u, [1, 1 + 1 / t, mpmath.inf]))


def suite_beta1() -> list[str]:
    bad = []
    for t in (0.1, 0.5, 1.0, 2.0, 7.5, 20.0, 50.0):
        got, want = beta1(t), _beta1_quad(t)
        if abs(got - want) > 1e-10 * want:
            bad.append(f"beta1({t}) = {got!r}, quadrature {want!r}")
    return bad


def suite_order_profile(max_d: int = 20) -> list[str]:
    bad = []
    for d in range(2, max_d + 1, 2):
        for i in range(d):
            prof = order_profile(d, i)
            if any(prof[r] + prof[(r + d // 2) % d] != 1 for r in range(d)):
                bad.append(f"order_profile({d}, {i}) is not antipodal")
    return bad


def suite_xi_cardinality() -> list[str]:
    bad = []
    for d in (-7, -15, -231):
        tower = build_tower(1, d)
        want = 2 ** (tower.r - tower.degree_n - 1)
        if len(enumerate_Xi(tower)) != want:
            bad.append(f"|Xi| for disc {d} is {len(enumerate_Xi(tower))}, want {want}")
    return bad


def _grid():
    for d in BUILTIN_DISCS:
        tower = build_tower(1, d)
        for a in list(range(1, 51)) + list(range(-1, -51, -1)):
            for y in (0.5, 1.0, 5.0):
                yield tower, ElementF(1, a), y


def suite_two_routes(epsilon=epsilon_P) -> list[str]:
    bad = []
    for tower, alpha, y in _grid():
        b_sum = b_phi(tower, alpha, y)
        b_cl = b_phi_closed(tower, alpha, y, epsilon=epsilon)
        if not _close(b_sum, b_cl):
            bad.append(f"{tower.describe()} alpha={alpha} y={y}: {b_sum!r} vs {b_cl!r}")
    return bad


def suite_identity_sign(sign: int = -1) -> list[str]:
    bad = []
    for tower, alpha, y in _grid():
        deg = arithmetic_degree(tower, alpha, y).total
        rhs = rhs_from_b_phi(tower, b_phi(tower, alpha, y), sign=sign)
        if not _close(deg, rhs):
            bad.append(f"{tower.describe()} alpha={alpha} y={y}: {deg!r} vs {rhs!r}")
    return bad


def _flipped_epsilon(st):
    return 1 - epsilon_P(st)


def run_selftest(stream=None) -> int:
    stream = stream or sys.stdout
    suites = [
        ("rho oracle", suite_rho_oracle, True),
        ("beta1 quadrature", suite_beta1, True),
        ("order_profile antipodal", suite_order_profile, True),
        ("Xi cardinality", suite_xi_cardinality, True),
        ("two-route equality", suite_two_routes, True),
        ("identity with global sign -1", suite_identity_sign, True),
        # mutations: these must fail
        ("mutation: flipped epsilon", lambda: suite_two_routes(_flipped_epsilon), False),
        ("mutation: global sign +1", lambda: suite_identity_sign(+1), False),
    ]
    ok = True
    for name, fn, expect_clean in suites:
        failures = fn()
        passed = (not failures) if expect_clean else bool(failures)
        ok &= passed
        note = f"{len(failures)} mismatches" if failures else "clean"
        print(f"{'PASS' if passed else 'FAIL'}  {name} ({note})", file=stream)
        if expect_clean:
            for line in failures[:5]:
                print(f"      {line}", file=stream)
    return 0 if ok else 1

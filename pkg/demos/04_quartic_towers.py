# Quartic CM fields K = F(sqrt(delta)) over F = Q(sqrt 5). Class data is supplied (h = ck = 1 here).
from collections import Counter

from cm_eisenstein import arithmetic_degree, b_phi, b_phi_closed, build_tower, diff_set, enumerate_Xi
from cm_eisenstein.cm_fields import normal_closure_degree
from cm_eisenstein.verify_cli import rhs_from_b_phi

towers = {
    "biquadratic": build_tower(5, -7, h=1, ck=1),
    "Q(zeta_5)": build_tower(5, (-2, -1), h=1, ck=1),
    "non-Galois": build_tower(5, (-7, 1), h=1, ck=1),
    "two ramified": build_tower(5, (-11, -3), h=1, ck=1),
}

for name, K in towers.items():
    print(f"{name:13} delta={K.delta}  ramified={[P.label() for P in K.finite_ramified]}"
          f"  r={K.r}  w={K.w}  [K~:Q]={normal_closure_degree(K)}  |Xi|={len(enumerate_Xi(K))}")

K = towers["two ramified"]
worst, cases = 0.0, Counter()
for a in range(-10, 11):
    for b in range(-10, 11):
        if a == b == 0:
            continue
        alpha = K.element((a, b))
        deg = arithmetic_degree(K, alpha, (1.0, 2.0))
        cases[deg.case_tag.value] += 1
        bs = b_phi(K, alpha, (1.0, 2.0))
        rhs = rhs_from_b_phi(K, bs)
        worst = max(worst, abs(deg.total - rhs))
        assert abs(bs - b_phi_closed(K, alpha, (1.0, 2.0))) <= 1e-12 + 1e-9 * abs(bs)
print(dict(cases), "max |deg - rhs| =", worst)

# which places each class sees for a few alphas
for coords in [(3, 0), (1, 1), (7, 2), (-1, 3)]:
    alpha = K.element(coords)
    print(alpha, [diff_set(K, alpha, c).label() for c in enumerate_Xi(K)])

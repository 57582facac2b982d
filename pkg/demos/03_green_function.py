# beta_1(t) = E_1(t): the archimedean derivative and the Green-function term.
import math

import numpy as np

from cm_eisenstein import ElementF, arithmetic_degree, b_phi, beta1, beta1_scaled, build_tower
from cm_eisenstein.verify_cli import rhs_from_b_phi

ts = np.logspace(-1, np.log10(50), 8)
for t in ts:
    print(f"t={t:9.4f}  beta1={beta1(t):.15e}  t*e^t*beta1={t * beta1_scaled(t):.12f}")

print("t*e^t*beta1 at 500:", 500 * beta1_scaled(500.0))

# alpha = -2 over Q(sqrt -7): one negative place, degree = Green term only
K = build_tower(1, -7)
alpha = ElementF(1, -2)
for y in (0.01, 0.1, 1.0, 5.0, 50.0):
    deg = arithmetic_degree(K, alpha, y).total
    rhs = rhs_from_b_phi(K, b_phi(K, alpha, y))
    print(f"y={y:6}  deg={deg:.6e}  rhs={rhs:.6e}  beta1(8 pi y)/2={beta1(8 * math.pi * y) / 2:.6e}")

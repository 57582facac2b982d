# Both sides of the identity for K = Q(sqrt(-7)) and alpha = 3, by hand and by the library.
import math

from cm_eisenstein import (
    ElementF,
    arithmetic_degree,
    b_phi,
    b_phi_closed,
    build_tower,
    diff_set,
    enumerate_Xi,
)
from cm_eisenstein.eisenstein_side import local_table
from cm_eisenstein.verify_cli import rhs_from_b_phi

K = build_tower(1, -7)
print(K.describe(), "ramified:", [P.label() for P in K.finite_ramified], "r =", K.r, "w =", K.w, "h =", K.class_data.h)

alpha = ElementF(1, 3)

# degree side: 3 is inert in K, ord_3(alpha) = 1, so the shifted ideal (3)(3)^-1 is trivial
deg = arithmetic_degree(K, alpha, 1.0)
for t in deg.per_prime:
    print(f"  {t.P.label():>5}  ord={t.ord_a}  rho={t.rho_shifted}  length={t.length}  term={t.term:.15f}")
print("deg Z(3)      =", deg.total, " log(3)/2 =", math.log(3) / 2)

# Eisenstein side: one incoherent class, and Diff(3, c) = {(3)}
(c,) = enumerate_Xi(K)
print("Diff(3, c)    =", diff_set(K, alpha, c).label())
for place, ev in local_table(K, alpha, 1.0, c):
    print(f"  {place:>5}  W(0)={ev.value0:.6f}  W'(0)={ev.deriv0:.6f}")

b_sum = b_phi(K, alpha, 1.0)
b_cl = b_phi_closed(K, alpha, 1.0)
print("b_Phi (sum)   =", b_sum)
print("b_Phi (closed)=", b_cl, " -(4/sqrt7) log 3 =", -(4 / math.sqrt(7)) * math.log(3))
print("rhs           =", rhs_from_b_phi(K, b_sum))

# alpha = 1: nothing in the support, but the ramified prime still carries a term
print("deg Z(1)      =", arithmetic_degree(K, ElementF(1, 1), 1.0).total, " log(7)/4 =", math.log(7) / 4)
print("Diff(1, c)    =", diff_set(K, ElementF(1, 1), c).label())

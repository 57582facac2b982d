# rho((m)) from local factors against a brute-force lattice enumeration of O_K-ideals.
from cm_eisenstein import ElementF, build_tower, principal_ideal, rho
from cm_eisenstein.cm_fields import class_number_bruteforce, reduced_forms
from cm_eisenstein.oracles import class_number_ideals, count_ideals_of_norm, ideals_of_norm

for d in (-7, -23):
    K = build_tower(1, d)
    local = [rho(K, principal_ideal(ElementF(1, m))) for m in range(1, 31)]
    brute = [count_ideals_of_norm(d, m) for m in range(1, 31)]
    print(d, "agree" if local == brute else "DIFFER", local)

# the ideals of norm 8 in Z[(1+sqrt-7)/2], as HNF lattices (A, 0), (B, C)
for lat in ideals_of_norm(-7, 8):
    print("  ", lat)

# class numbers two ways
for d in (-23, -47, -71, -163, -191):
    K = build_tower(1, d)
    print(d, "forms:", class_number_bruteforce(K), "ideals:", class_number_ideals(d), reduced_forms(d)[:3], "...")

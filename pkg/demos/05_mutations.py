# What the checks catch: flip the shift exponent or the global sign and count mismatches.
from cm_eisenstein.local_deformation import epsilon_P
from cm_eisenstein.selftest import suite_identity_sign, suite_two_routes

clean = suite_two_routes()
flipped = suite_two_routes(lambda st: 1 - epsilon_P(st))
print("two routes, correct epsilon:", len(clean), "mismatches")
print("two routes, flipped epsilon:", len(flipped), "mismatches, e.g.", flipped[0])

print("identity, sign -1:", len(suite_identity_sign(-1)), "mismatches")
wrong = suite_identity_sign(+1)
print("identity, sign +1:", len(wrong), "mismatches, e.g.", wrong[0])

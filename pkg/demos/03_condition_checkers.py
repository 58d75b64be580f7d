"""Integral conditions between pairs of Young functions.

A pair (Phi2, Phi1) admits the joint operator head(p0,r0) + tail(p1,r1)
boundedly iff a pair of integral growth conditions holds, one per
endpoint.  The checkers search the free scale constant, certify the
supremum when it is finite, and classify the divergence otherwise.
"""

import json

from orliczkit import (
    check_cianchi_lower,
    check_stepanov_pair,
    check_theorem_joint,
    check_zs_lower,
    check_zs_upper,
    power_young,
    worked_example_pair,
)

# pure power Phi = t^3 strictly between the endpoints p0 = 2 and p1 = 4:
# both conditions hold with certified constant 1
cube = power_young(3.0)
rep = check_theorem_joint(cube, cube, 2.0, 2.0, 4.0, 4.0)
print("t^3 pair, endpoints (2,2) and (4,4):", "holds" if rep.holds else "fails")
for part in rep.parts:
    print(f"  {part.name}: sup = {part.constant:.12f} at scale {part.scale}")

# a power at the endpoint itself makes the inner integral diverge
sq = power_young(2.0)
rep = check_zs_lower(sq, sq, 2.0)
print("\nt^2 at the p = 2 endpoint:", rep.mode, f"(rate ~ {rep.rate:.3f} {rep.rate_type})")

# power-log pair: t^5 below e, then t^4 vs t^4 (log t)^2 -- the lower
# endpoint p0 = 4 is critical and boundedness depends on the inner weight r
phi1, phi2 = worked_example_pair()
for r in (1.0, 2.0):
    rep = check_cianchi_lower(phi1, phi2, 4.0, r)
    if rep.holds:
        print(f"\nr = {r}: holds, sup = {rep.constant:.4f} (scale {rep.scale})")
    else:
        print(f"\nr = {r}: {rep.mode}, truncations grow like X^{rep.rate:.3f}")

# the single-condition (two-factor) form gives the same verdicts
for r in (1.0, 2.0):
    a = check_stepanov_pair(phi1, phi2, 4.0, r)
    b = check_cianchi_lower(phi1, phi2, 4.0, r)
    print(f"r = {r}: two-factor form {'holds' if a.holds else 'fails'},"
          f" head/tail form {'holds' if b.holds else 'fails'}")
    assert a.holds == b.holds

# reports serialize to plain dicts for the JSON output of the CLI
print("\nreport as JSON:")
print(json.dumps(check_zs_upper(cube, cube, 4.0).to_dict(), indent=2)[:400])

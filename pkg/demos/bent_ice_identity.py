"""Bent ice partition functions against the deformed orthogonal character.

Run with ``python3 demos/bent_ice_identity.py``.  For each case the script
prints whether Z equals C* s^so with the factor as stated and with the
deformed factor (1 + t z_i/z_j), then shows where the stated form breaks.
"""

from icechar import iceb
from icechar.combinat import staircase
from icechar.sundaram import so_char_via_tableaux

CASES = [((1,), 1), ((2,), 1), ((1, 1), 2), ((2, 1), 2)]

for lam, n in CASES:
    stated = iceb.verify_thm51(lam, n)
    deformed = iceb.verify_thm51(lam, n, deformed=True)
    states = sum(1 for _ in iceb.enumerate_ice_b([a + b for a, b in zip(lam, staircase(n, 1))], n))
    print(f"lambda={lam} n={n}: {states} states, as stated {'PASS' if stated.passed else 'FAIL'}, deformed {'PASS' if deformed.passed else 'FAIL'}")

# at t = 0 the partition function is z^-rho s^so, which the stated factor misses
lam, n = (1, 1), 2
r = iceb.verify_thm51(lam, n)
print()
print("t = 0 partition function:", r.lhs.at_t(0))
print("z^-rho s^so            :", so_char_via_tableaux(lam, n).shift([-2, -1]))
print("stated C* s^so at t = 0:", r.rhs.at_t(0))

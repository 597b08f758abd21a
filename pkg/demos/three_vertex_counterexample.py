"""Rows of three-vertex type do not force the left-leaning rule.

Run with ``python3 demos/three_vertex_counterexample.py``.  Builds the ice
state of a strict pattern that breaks the left-leaning rule and shows it
still passes the three-vertex and tie check, then lists every such state
the direct enumeration finds for lambda = (2, 1), n = 2.
"""

from icechar import koiketerada as kt

p = ((2, 1), (2, 1), (1, 0), (0,), (0,), (0,))
state = kt.pattern_to_kt_ice_unchecked(p, 2)
print("pattern:", p)
print("rule 4:", kt.rule4(p, 2), " rule 5:", kt.rule5(p, 2))
print("three-vertex rows and admissible ties:", kt.verify_three_vertex(state))
for row in state.grid:
    print("  ", " ".join(row))

report = kt.verify_kt_three_vertex((2, 1), 2)
print()
print(report.summary())
for key in ("states", "direct_states", "rule5_violators", "rule5_violators_passing_check"):
    print(f"  {key}: {report.details[key]}")

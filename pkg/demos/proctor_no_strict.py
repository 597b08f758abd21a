"""Strict Proctor patterns: none for n = 4, some for smaller ranks.

Run with ``python3 demos/proctor_no_strict.py``.  Row 4 of a strict pattern
with n = 4 has four distinct entries; the smallest is (3, 2, 1, 0), whose
capped sum 2 + 2 + 1 + 0 = 5 already exceeds the bound 4.
"""

from icechar import proctor

for n, max_entry in [(1, 4), (2, 4), (4, 6)]:
    d = proctor.verify_no_strict_proctor(n, max_entry).details
    print(f"n={n}, entries <= {max_entry}: {d['strict_patterns']} strict patterns over {d['tops_searched']} top rows")

d = proctor.verify_no_strict_proctor(4, 6).details
print(f"witness row {tuple(d['witness_row'])}: capped sum {d['witness_sum']} > {d['bound']}")

T = proctor.tableau_from_labels([[1, 1, 3, 5], [3, 3, 4], [5]], 3)
print("example tableau valid:", proctor.check_2c_orthogonal(T, 3) and proctor.check_2m_protection(T, 3))
print("its pattern:", proctor.proctor_tableau_to_pattern(T, 3))

"""Proctor's SO(2n+1) tableaux and their patterns.

Letters are ``1 < 2 < ... < 2n < 0`` with 0 playing the role of infinity; it
is stored as rank ``2n + 1``.  Rows weakly increase, columns strictly
increase, and two extra conditions apply:

* orthogonal: for every ``c <= n`` the first two columns hold at most ``2c``
  nonzero entries ``<= 2c``;
* protection: if row ``i`` starts with ``2m - 1``, put ``k = 2m - i``; if
  row ``k`` contains ``2m`` with leftmost occurrence in column ``h``, then
  ``T[k][j] = 2m - 1`` for ``2 <= j < h`` and ``T[k-1][h] = 2m - 1``.  When
  ``k`` is not a row of the tableau the condition is vacuous; when ``k = 1``
  there is no row ``k - 1`` and the condition fails.

Patterns are indexed by letter value: row ``v`` (for ``v = 1..2n``) is the
shape of the entries ``<= v`` and has ``min(v, n)`` entries, the top row is
``lambda`` itself and row 0 is a row of ``n`` zeros.  They are stored top
to bottom: ``lambda``, row ``2n``, ..., row 1.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .combinat import (
    Pattern,
    Tableau,
    ValidationError,
    cells,
    fillings,
    interleaves,
    interleaving_rows,
    is_strictly_decreasing,
    layers_to_tableau,
    normalize_partition,
    tableau_to_layers,
)
from .reports import IdentityReport

__all__ = [
    "by_value",
    "check_2c_orthogonal",
    "check_2m_protection_transcribed",
    "enumerate_column_strict",
    "letter_label",
    "parse_letter",
    "row_length",
    "strict_rows",
    "tableau_from_labels",
    "tableau_labels",
    "validate_proctor_pattern",
    "validate_proctor_tableau",
    "zero_rank",
    "check_2m_protection",
    "enumerate_proctor_patterns",
    "enumerate_proctor_tableaux",
    "orthogonal_sum",
    "pattern_orthogonal_ok",
    "pattern_protection_exact",
    "pattern_protection_literal",
    "proctor_pattern_to_tableau",
    "proctor_tableau_to_pattern",
    "verify_no_strict_proctor",
]


def zero_rank(n: int) -> int:
    return 2 * n + 1


def letter_label(rank: int, n: int) -> str:
    return "0" if rank == zero_rank(n) else str(rank)


def parse_letter(label: str, n: int) -> int:
    v = int(label)
    if v == 0:
        return zero_rank(n)
    if not 1 <= v <= 2 * n:
        raise ValidationError(f"letter {label!r} outside 1..{2 * n}, 0")
    return v


def tableau_labels(T: Tableau, n: int) -> list[list[str]]:
    return [[letter_label(x, n) for x in row] for row in T]


def tableau_from_labels(rows: Sequence[Sequence], n: int) -> Tableau:
    return tuple(tuple(parse_letter(str(x), n) for x in row) for row in rows)


# -- tableau conditions -------------------------------------------------------------

def check_2c_orthogonal(T: Tableau, n: int) -> bool:
    zero = zero_rank(n)
    firsts = [x for row in T for x in row[:2] if x != zero]
    return all(sum(1 for x in firsts if x <= 2 * c) <= 2 * c for c in range(1, n + 1))


def check_2m_protection(T: Tableau, n: int, inclusive: bool = False) -> bool:
    """The protection condition.

    ``inclusive=True`` reads the column range as ``2 <= j <= h``; that
    version can never hold once triggered because ``T[k][h] = 2m``.
    """
    rows = len(T)
    for m in range(1, n + 1):
        odd, even = 2 * m - 1, 2 * m
        for i in range(1, rows + 1):
            if T[i - 1][0] != odd:
                continue
            k = 2 * m - i
            if not 1 <= k <= rows:
                continue
            row_k = T[k - 1]
            if even not in row_k:
                continue
            h = row_k.index(even) + 1
            last = h if inclusive else h - 1
            if any(row_k[j - 1] != odd for j in range(2, last + 1)):
                return False
            if k - 1 < 1 or len(T[k - 2]) < h or T[k - 2][h - 1] != odd:
                return False
    return True


def check_2m_protection_transcribed(T: Tableau, n: int) -> bool:
    """Independent transcription of the protection steps over a cell map."""
    grid = cells(T)
    for m in range(1, n + 1):
        starts = [i for (i, j), x in grid.items() if j == 1 and x == 2 * m - 1]
        for i in starts:
            k = 2 * m - i
            if k < 1 or k > len(T):
                continue
            cols = sorted(j for (r, j), x in grid.items() if r == k and x == 2 * m)
            if not cols:
                continue
            h = cols[0]
            for j in range(2, h):
                if grid.get((k, j)) != 2 * m - 1:
                    return False
            if grid.get((k - 1, h)) != 2 * m - 1:
                return False
    return True


def _row_col_ok(grid, i, j, x) -> bool:
    left, up = grid.get((i, j - 1)), grid.get((i - 1, j))
    if left is not None and left > x:
        return False
    if up is not None and up >= x:
        return False
    return True


def _shape(lam: Sequence[int]) -> list[int]:
    """Positive parts of ``lam``; more than ``n`` rows is allowed on the tableau side."""
    shape = [int(x) for x in lam if x]
    if any(x < 0 for x in lam) or shape != sorted(shape, reverse=True):
        raise ValidationError(f"{tuple(lam)} is not a partition")
    return shape


def enumerate_column_strict(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    shape = _shape(lam)
    yield from fillings(shape, range(1, zero_rank(n) + 1), _row_col_ok)


def enumerate_proctor_tableaux(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    for T in enumerate_column_strict(lam, n):
        if check_2c_orthogonal(T, n) and check_2m_protection(T, n):
            yield T


def validate_proctor_tableau(T: Tableau, n: int) -> None:
    grid: dict = {}
    for (i, j), x in sorted(cells(T).items()):
        if not 1 <= x <= zero_rank(n) or not _row_col_ok(grid, i, j, x):
            raise ValidationError(f"entry at ({i},{j}) breaks row or column order")
        grid[(i, j)] = x
    if not check_2c_orthogonal(T, n):
        raise ValidationError("orthogonal condition fails")
    if not check_2m_protection(T, n):
        raise ValidationError("protection condition fails")


# -- patterns ---------------------------------------------------------------------------

def row_length(v: int, n: int) -> int:
    """Entries in the row of letter value ``v``; the top row is ``v = 2n + 1``."""
    return min(v, n)


def by_value(p: Pattern, n: int) -> dict[int, tuple[int, ...]]:
    """Rows keyed by letter value, each padded to ``n`` entries, with row 0 added."""
    rows = {2 * n + 1 - idx: tuple(row) + (0,) * (n - len(row)) for idx, row in enumerate(p)}
    rows[0] = (0,) * n
    return rows


def orthogonal_sum(row: Sequence[int]) -> int:
    return sum(min(a, 2) for a in row)


def pattern_orthogonal_ok(p: Pattern, n: int) -> bool:
    rows = by_value(p, n)
    return all(orthogonal_sum(rows[2 * c]) <= 2 * c for c in range(1, n + 1))


def _nonleaning_zeros(rows, n: int):
    """(m, i) with a zero at position i of row 2m - 2 whose upper neighbour is nonzero."""
    for m in range(1, n + 1):
        low, mid = rows[2 * m - 2], rows[2 * m - 1]
        for i in range(1, n + 1):
            if low[i - 1] == 0 and mid[i - 1] != 0:
                yield m, i


def pattern_protection_literal(p: Pattern, n: int) -> bool:
    """The pattern-side protection rule read step by step.

    Out-of-range indices make the check fail, matching the tableau side when
    ``k - 1`` is not a row.
    """
    rows = by_value(p, n)
    for m, i in _nonleaning_zeros(rows, n):
        j = 2 * m - i
        if not 1 <= j <= n:
            continue
        if rows[2 * m][j - 1] >= rows[2 * m - 1][j - 1]:
            if j - 1 < 1:
                return False
            a_low, a_mid, a_top = rows[2 * m - 2], rows[2 * m - 1], rows[2 * m]
            if not (a_mid[j - 2] >= a_low[j - 2] and a_mid[j - 2] >= a_top[j - 1] and a_low[j - 1] <= 1):
                return False
    return True


def pattern_protection_exact(p: Pattern, n: int) -> bool:
    """Protection condition translated exactly from the tableau side."""
    rows = by_value(p, n)
    for m, i in _nonleaning_zeros(rows, n):
        k = 2 * m - i
        if not 1 <= k <= n:
            continue
        low, mid, top = rows[2 * m - 2], rows[2 * m - 1], rows[2 * m]
        if top[k - 1] <= mid[k - 1]:
            continue  # row k holds no 2m
        if top[k - 1] == 0 and mid[k - 1] == 0:
            continue
        h = mid[k - 1] + 1
        if h >= 3 and low[k - 1] > 1:
            return False
        if k == 1 or not low[k - 2] < h <= mid[k - 2]:
            return False
    return True


def validate_proctor_pattern(p: Pattern, n: int, strict: bool = False) -> None:
    if len(p) != 2 * n + 1:
        raise ValidationError(f"pattern must have {2 * n + 1} rows")
    for idx, row in enumerate(p):
        v = 2 * n + 1 - idx
        if len(row) != row_length(v, n):
            raise ValidationError(f"row of value {v} must have {row_length(v, n)} entries")
        if strict and not is_strictly_decreasing(row):
            raise ValidationError(f"row {row} is not strictly decreasing")
    for upper, lower in zip(p, p[1:]):
        if not interleaves(upper, lower):
            raise ValidationError(f"rows {upper} and {lower} do not interleave")
    if not pattern_orthogonal_ok(p, n):
        raise ValidationError("orthogonal sum bound fails")
    if not pattern_protection_exact(p, n):
        raise ValidationError("protection rule fails")


def _descend(rows: list, n: int, strict: bool, prune_orthogonal: bool) -> Iterator[Pattern]:
    v = 2 * n + 1 - len(rows)
    if v == 0:
        yield tuple(rows)
        return
    for row in interleaving_rows(rows[-1], row_length(v, n), strict=strict):
        if prune_orthogonal and v % 2 == 0 and v <= 2 * n and orthogonal_sum(row) > v:
            continue
        yield from _descend(rows + [row], n, strict, prune_orthogonal)


def enumerate_proctor_patterns(lam: Sequence[int], n: int) -> Iterator[Pattern]:
    lam = normalize_partition(lam, n)
    for p in _descend([lam], n, strict=False, prune_orthogonal=True):
        if pattern_protection_exact(p, n):
            yield p


def _layers(p: Pattern, n: int) -> list[tuple[int, ...]]:
    rows = by_value(p, n)
    return [rows[v] for v in range(1, 2 * n + 2)]


def proctor_pattern_to_tableau(p: Pattern, n: int) -> Tableau:
    validate_proctor_pattern(p, n)
    return layers_to_tableau(_layers(p, n))


def proctor_tableau_to_pattern(T: Tableau, n: int) -> Pattern:
    validate_proctor_tableau(T, n)
    layers = tableau_to_layers(T, 2 * n + 1, n)
    rows = []
    for v in range(2 * n + 1, 0, -1):
        layer, length = layers[v - 1], row_length(v, n)
        if any(layer[length:]):
            raise ValidationError("column strictness violated")
        rows.append(tuple(layer[:length]))
    p = tuple(rows)
    validate_proctor_pattern(p, n)
    return p


# -- strict patterns ----------------------------------------------------------------

def strict_rows(length: int, max_entry: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations(range(max_entry, -1, -1), length):
        yield tuple(combo)


def verify_no_strict_proctor(n: int = 4, max_entry: int = 6, tops: Sequence[Sequence[int]] | None = None) -> IdentityReport:
    """Search for strict patterns obeying the orthogonal bound.

    Every strictly decreasing row of ``n`` entries in ``0..max_entry`` is a
    candidate top row unless ``tops`` is given.  Reports the number of strict
    patterns (expected 0 for n = 4) and, for ``n >= 2``, the smallest strict
    candidate for row ``2c`` with ``2c`` the least even value ``>= n``, which
    is where the bound first fails.
    """
    candidates = [tuple(t) for t in tops] if tops is not None else list(strict_rows(n, max_entry))
    found = 0
    examples = []
    for top in candidates:
        for p in _descend([top], n, strict=True, prune_orthogonal=True):
            if pattern_protection_exact(p, n):
                found += 1
                if len(examples) < 5:
                    examples.append([list(r) for r in p])
    details: dict = {"strict_patterns": found, "tops_searched": len(candidates), "max_entry": max_entry}
    if examples:
        details["examples"] = examples
    c = (n + 1) // 2
    v = 2 * c
    if v <= 2 * n:
        witness = tuple(range(row_length(v, n) - 1, -1, -1))
        rows = list(strict_rows(row_length(v, n), max_entry))
        sums = [orthogonal_sum(r) for r in rows]
        details.update(
            {
                "witness_row_value": v,
                "witness_row": list(witness),
                "witness_sum": orthogonal_sum(witness),
                "bound": v,
                "min_sum_over_candidates": min(sums) if sums else None,
                "all_candidates_exceed_bound": all(s > v for s in sums),
            }
        )
    return IdentityReport("proctor-no-strict", {"n": n, "max_entry": max_entry}, passed=found == 0, details=details)

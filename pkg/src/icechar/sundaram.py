"""SO(2n+1) tableaux with a zero letter, King's Sp(2n) tableaux and their patterns.

Letters are ranked ``1 < 1b < 2 < 2b < ... < n < nb < 0``: letter ``k`` has
rank ``2k - 1``, ``kb`` has rank ``2k`` and ``0`` has rank ``2n + 1``.

A pattern has ``2n + 1`` rows.  The top row is ``lambda`` with an appended 0
(``n + 1`` entries); row ``r >= 2`` has ``n - r // 2 + 1`` entries.  Row ``r``
(from the top) is the shape filled by letters of rank ``<= 2n + 2 - r``, so
row 1 governs zeros, row 2 governs ``nb`` and the bottom row governs ``1``.

Passing from the top row to the second removes at most one zero per tableau
row, so that step is the condition ``0 <= top[i] - second[i] <= 1``; the
remaining steps are ordinary interleaving.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .algebra import LaurentPoly, Monomial
from .combinat import (
    Pattern,
    Tableau,
    ValidationError,
    cells,
    fillings,
    interleaves,
    interleaving_rows,
    is_strictly_decreasing,
    is_weakly_decreasing,
    layers_to_tableau,
    normalize_partition,
    staircase,
    tableau_to_layers,
)

__all__ = [
    "enumerate_king_tableaux",
    "enumerate_shifted_sundaram",
    "enumerate_strict_patterns",
    "enumerate_sundaram_patterns",
    "enumerate_sundaram_tableaux",
    "horizontal_strips",
    "letter_label",
    "parse_letter",
    "pattern_to_tableau",
    "row_length",
    "shifted_to_strict_pattern",
    "so_char_via_branching",
    "so_char_via_tableaux",
    "sp_char_via_tableaux",
    "strict_pattern_to_shifted",
    "sundaram_weight",
    "tableau_to_pattern",
]


# -- letters ---------------------------------------------------------------------

def zero_rank(n: int) -> int:
    return 2 * n + 1


def letter_label(rank: int, n: int) -> str:
    if rank == zero_rank(n):
        return "0"
    k = (rank + 1) // 2
    return f"{k}b" if rank % 2 == 0 else str(k)


def parse_letter(label: str, n: int) -> int:
    label = str(label).strip()
    if label == "0":
        return zero_rank(n)
    barred = label.endswith("b")
    k = int(label[:-1] if barred else label)
    if not 1 <= k <= n:
        raise ValidationError(f"letter {label!r} outside the alphabet for n={n}")
    return 2 * k if barred else 2 * k - 1


def tableau_labels(T: Tableau, n: int) -> list[list[str]]:
    return [[letter_label(x, n) for x in row] for row in T]


def tableau_from_labels(rows: Sequence[Sequence[str]], n: int) -> Tableau:
    return tuple(tuple(parse_letter(x, n) for x in row) for row in rows)


# -- tableaux -----------------------------------------------------------------------

def _check_cell(grid, i, j, x, zero: int, allow_zero: bool) -> bool:
    if x == zero and not allow_zero:
        return False
    if x < 2 * i - 1:
        return False
    left = grid.get((i, j - 1))
    if left is not None and (left > x or (left == zero and x == zero)):
        return False
    up = grid.get((i - 1, j))
    if up is not None and (up > x or (up == x and x != zero)):
        return False
    return True


def enumerate_sundaram_tableaux(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    """Fillings of ``lam`` obeying the four SO(2n+1) rules, in lexicographic order."""
    shape = [x for x in normalize_partition(lam, n) if x]
    zero = zero_rank(n)
    yield from fillings(shape, range(1, zero + 1), lambda g, i, j, x: _check_cell(g, i, j, x, zero, True))


def enumerate_king_tableaux(mu: Sequence[int], n: int) -> Iterator[Tableau]:
    """Symplectic tableaux: the same rules with the zero letter removed."""
    shape = [x for x in normalize_partition(mu, n) if x]
    zero = zero_rank(n)
    yield from fillings(shape, range(1, zero), lambda g, i, j, x: _check_cell(g, i, j, x, zero, False))


def validate_sundaram_tableau(T: Tableau, n: int, allow_zero: bool = True) -> None:
    zero = zero_rank(n)
    if any(len(a) < len(b) for a, b in zip(T, T[1:])):
        raise ValidationError("row lengths must weakly decrease")
    if len(T) > n:
        raise ValidationError(f"more than {n} rows")
    grid: dict = {}
    for (i, j), x in sorted(cells(T).items()):
        if not 1 <= x <= zero:
            raise ValidationError(f"rank {x} outside the alphabet")
        if not _check_cell(grid, i, j, x, zero, allow_zero):
            raise ValidationError(f"entry {letter_label(x, n)} at ({i},{j}) breaks a filling rule")
        grid[(i, j)] = x


def sundaram_weight(T: Tableau, n: int) -> Monomial:
    """Exponent of z_k is #k - #kb; zeros contribute nothing."""
    exps = [0] * n
    zero = zero_rank(n)
    for row in T:
        for x in row:
            if x == zero:
                continue
            k = (x + 1) // 2
            exps[k - 1] += -1 if x % 2 == 0 else 1
    return Monomial(tuple(exps), 0)


def _char(tableaux, n: int) -> LaurentPoly:
    acc: dict[Monomial, int] = {}
    for T in tableaux:
        m = sundaram_weight(T, n)
        acc[m] = acc.get(m, 0) + 1
    return LaurentPoly(acc, n)


def so_char_via_tableaux(lam: Sequence[int], n: int) -> LaurentPoly:
    return _char(enumerate_sundaram_tableaux(lam, n), n)


def sp_char_via_tableaux(mu: Sequence[int], n: int) -> LaurentPoly:
    return _char(enumerate_king_tableaux(mu, n), n)


# -- branching ------------------------------------------------------------------------

def horizontal_strips(lam: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Partitions mu with ``lam[i] - mu[i]`` in {0, 1} for every i.

    Yielded in lexicographically decreasing order (``lam`` first).
    """
    lam = tuple(lam)

    def rec(prefix: tuple[int, ...]):
        i = len(prefix)
        if i == len(lam):
            yield prefix
            return
        for v in (lam[i], lam[i] - 1):
            if v < 0 or (prefix and v > prefix[-1]):
                continue
            yield from rec(prefix + (v,))

    yield from rec(())


def so_char_via_branching(lam: Sequence[int], n: int) -> LaurentPoly:
    lam = normalize_partition(lam, n)
    total = LaurentPoly.zero(n)
    for mu in horizontal_strips(lam):
        total += sp_char_via_tableaux(mu, n)
    return total


# -- patterns ---------------------------------------------------------------------------

def row_length(r: int, n: int) -> int:
    """Length of pattern row ``r`` (1-based from the top)."""
    return n + 1 if r == 1 else n - r // 2 + 1


def row_rank(r: int, n: int) -> int:
    """Largest letter rank recorded by pattern row ``r``."""
    return 2 * n + 2 - r


def row_letter(r: int, n: int) -> str:
    return letter_label(row_rank(r, n), n)


def _zero_step_ok(upper: Sequence[int], lower: Sequence[int]) -> bool:
    return len(lower) == len(upper) - 1 and upper[-1] == 0 and all(
        0 <= a - b <= 1 for a, b in zip(upper, lower)
    )


def validate_pattern(p: Pattern, n: int, strict: bool = False) -> None:
    if len(p) != 2 * n + 1:
        raise ValidationError(f"pattern must have {2 * n + 1} rows")
    for r, row in enumerate(p, start=1):
        if len(row) != row_length(r, n):
            raise ValidationError(f"row {r} must have {row_length(r, n)} entries")
        if any(x < 0 for x in row):
            raise ValidationError("negative entry")
        if not (is_strictly_decreasing(row) if strict else is_weakly_decreasing(row)):
            raise ValidationError(f"row {r} = {row} is not {'strictly' if strict else 'weakly'} decreasing")
    if p[0][-1] != 0:
        raise ValidationError("the top row must end in 0")
    if not _zero_step_ok(p[0], p[1]):
        raise ValidationError("second row must lie within one of the top row entrywise")
    for upper, lower in zip(p[1:], p[2:]):
        if not interleaves(upper, lower):
            raise ValidationError(f"rows {upper} and {lower} do not interleave")
    if strict:
        for r in range(2, 2 * n + 1, 2):
            if p[r - 1][-1] == 0:
                raise ValidationError(f"even row {r} must end in a nonzero entry")


def _second_rows(top: Sequence[int], strict: bool) -> Iterator[tuple[int, ...]]:
    body = tuple(top[:-1])
    for mu in horizontal_strips(body):
        if strict and not is_strictly_decreasing(mu):
            continue
        if strict and mu and mu[-1] == 0:
            continue
        yield mu


def _descend(rows: list, n: int, strict: bool) -> Iterator[Pattern]:
    r = len(rows) + 1
    if r > 2 * n + 1:
        yield tuple(rows)
        return
    for row in interleaving_rows(rows[-1], row_length(r, n), strict=strict):
        if strict and r % 2 == 0 and row[-1] == 0:
            continue
        yield from _descend(rows + [row], n, strict)


def enumerate_sundaram_patterns(lam: Sequence[int], n: int) -> Iterator[Pattern]:
    lam = normalize_partition(lam, n)
    top = lam + (0,)
    for mu in _second_rows(top, strict=False):
        yield from _descend([top, mu], n, strict=False)


def enumerate_strict_patterns(lam: Sequence[int], n: int) -> Iterator[Pattern]:
    """Strict patterns whose top row is ``lambda + rho`` with rho = (n, ..., 1), then 0."""
    lam = normalize_partition(lam, n)
    top = tuple(a + b for a, b in zip(lam, staircase(n, 1))) + (0,)
    yield from enumerate_strict_patterns_top(top, n)


def enumerate_strict_patterns_top(top: Sequence[int], n: int) -> Iterator[Pattern]:
    top = tuple(top)
    if len(top) != n + 1 or top[-1] != 0 or not is_strictly_decreasing(top):
        raise ValidationError(f"top row {top} must be strictly decreasing with a final 0")
    for mu in _second_rows(top, strict=True):
        yield from _descend([top, mu], n, strict=True)


def _layers(p: Pattern, n: int) -> list[tuple[int, ...]]:
    layers = []
    for q in range(1, 2 * n + 2):
        row = p[2 * n + 1 - q]
        layers.append(tuple(row[:n]) + (0,) * (n - min(len(row), n)))
    return layers


def pattern_to_tableau(p: Pattern, n: int) -> Tableau:
    validate_pattern(p, n)
    return layers_to_tableau(_layers(p, n))


def _layers_to_pattern(layers: list[tuple[int, ...]], n: int) -> Pattern:
    rows = []
    for r in range(1, 2 * n + 2):
        layer = layers[row_rank(r, n) - 1]
        length = row_length(r, n)
        if any(layer[length:]):
            raise ValidationError(f"letters of rank <= {row_rank(r, n)} spill past {length} rows")
        rows.append(tuple(layer[:length]) + (0,) * (length - len(layer)))
    return tuple(rows)


def tableau_to_pattern(T: Tableau, n: int) -> Pattern:
    validate_sundaram_tableau(T, n)
    p = _layers_to_pattern(tableau_to_layers(T, 2 * n + 1, n), n)
    validate_pattern(p, n)
    return p


# -- shifted tableaux --------------------------------------------------------------------

def enumerate_shifted_sundaram(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    """Shifted tableaux of shape ``lambda + rho`` obeying the five shifted rules."""
    lam = normalize_partition(lam, n)
    shape = [a + b for a, b in zip(lam, staircase(n, 1))]
    zero = zero_rank(n)

    def ok(grid, i, j, x):
        first = j == i
        if first and x not in (2 * i - 1, 2 * i):
            return False
        left = grid.get((i, j - 1))
        if left is not None and (left > x or (left == zero and x == zero)):
            return False
        up = grid.get((i - 1, j))
        if up is not None and up > x:
            return False
        diag = grid.get((i - 1, j - 1))
        if diag is not None and diag >= x:
            return False
        return True

    yield from fillings(shape, range(1, zero + 1), ok, shifted=True)


def validate_shifted(T: Tableau, n: int) -> None:
    zero = zero_rank(n)
    grid = cells(T, shifted=True)
    for (i, j), x in grid.items():
        if j == i and x not in (2 * i - 1, 2 * i):
            raise ValidationError(f"row {i} must start with {i} or {i}b")
        left, up, diag = grid.get((i, j - 1)), grid.get((i - 1, j)), grid.get((i - 1, j - 1))
        if left is not None and (left > x or (left == zero and x == zero)):
            raise ValidationError("rows must weakly increase without consecutive zeros")
        if up is not None and up > x:
            raise ValidationError("columns must weakly increase")
        if diag is not None and diag >= x:
            raise ValidationError("diagonals must strictly increase")


def strict_pattern_to_shifted(p: Pattern, n: int) -> Tableau:
    validate_pattern(p, n, strict=True)
    return layers_to_tableau(_layers(p, n), shifted=True)


def shifted_to_strict_pattern(T: Tableau, n: int) -> Pattern:
    validate_shifted(T, n)
    p = _layers_to_pattern(tableau_to_layers(T, 2 * n + 1, n), n)
    validate_pattern(p, n, strict=True)
    return p

"""SO(2n+1) tableaux on the triple alphabet 1 < 1b < 1bb < ... < n < nb < nbb.

Letter ``i`` has rank ``3i - 2``, ``ib`` rank ``3i - 1`` and ``ibb`` rank
``3i``.  A pattern has 3n rows; row ``r`` (1-based from the top) records the
shape of letters of rank ``<= 3n + 1 - r``, so the top row is ``lambda``
(letter ``nbb``) and the bottom row is letter ``1``.  Rows of letters
``i``, ``ib``, ``ibb`` have ``i`` entries.

Ice.  A strict pattern with top row ``lambda`` gives a lattice of 3n rows
(same order as the pattern rows) and columns ``lambda_1, ..., 1``.  Rows of
barred letters run through every column and each pair ``kbb`` over ``kb``
closes with a bend:

* ``A``: the upper arrow leaves into the bend, the lower one comes back;
* ``B``: the lower arrow leaves, the upper one comes back;
* ``C``: both arrows leave into the bend.

The fourth shape, both arrows entering from the bend, is not part of the
model.  Rows of unbarred letters stop at column 1 with a tie that receives
the horizontal arrow from the left:

* ``U``: the vertical line passes upward through the tie;
* ``D``: the vertical line passes downward through the tie;
* ``O``: both vertical arrows point away from the tie.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import LaurentPoly, Monomial
from .reports import IdentityReport
from .combinat import (
    CONFIGS,
    Pattern,
    Tableau,
    ValidationError,
    cells,
    config_edges,
    fillings,
    ice_row,
    interleaves,
    interleaving_rows,
    is_strictly_decreasing,
    is_weakly_decreasing,
    layers_to_tableau,
    normalize_partition,
    tableau_to_layers,
)

__all__ = [
    "KTIceState",
    "bend_name",
    "enumerate_kt_ice",
    "enumerate_kt_ice_direct",
    "enumerate_kt_patterns",
    "enumerate_kt_tableaux",
    "enumerate_shifted_kt",
    "enumerate_strict_kt",
    "has_pattern_row_lengths",
    "kt_char",
    "kt_ice_to_strict",
    "kt_pattern_to_tableau",
    "kt_tableau_to_pattern",
    "kt_weight",
    "letter_label",
    "parse_letter",
    "pattern_to_kt_ice_unchecked",
    "read_rows",
    "rule4",
    "rule5",
    "shifted_to_strict_kt",
    "strict_kt_to_ice",
    "strict_kt_to_shifted",
    "tableau_from_labels",
    "tableau_labels",
    "tie_name",
    "validate_kt_pattern",
    "validate_kt_tableau",
    "validate_shifted_kt",
    "verify_kt_three_vertex",
    "verify_three_vertex",
]

THREE_VERTEX = ("SW", "NW", "NE")


# -- letters -------------------------------------------------------------------------

def letter_of(rank: int) -> tuple[int, int]:
    """(index, bars) of a rank; bars is 0, 1 or 2."""
    return (rank + 2) // 3, (rank - 1) % 3


def letter_label(rank: int) -> str:
    i, bars = letter_of(rank)
    return str(i) + "b" * bars


def parse_letter(label: str, n: int) -> int:
    label = str(label).strip()
    bars = len(label) - len(label.rstrip("b"))
    i = int(label.rstrip("b"))
    if not 1 <= i <= n or bars > 2:
        raise ValidationError(f"letter {label!r} outside the alphabet for n={n}")
    return 3 * i - 2 + bars


def tableau_labels(T: Tableau) -> list[list[str]]:
    return [[letter_label(x) for x in row] for row in T]


def tableau_from_labels(rows: Sequence[Sequence[str]], n: int) -> Tableau:
    return tuple(tuple(parse_letter(x, n) for x in row) for row in rows)


# -- tableaux -------------------------------------------------------------------------

def _ok_cell(grid, i, j, x) -> bool:
    idx, bars = letter_of(x)
    if bars == 0 and (i, j) != (idx, 1):
        return False
    if x < 3 * i - 2:
        return False
    left, up = grid.get((i, j - 1)), grid.get((i - 1, j))
    if left is not None and left > x:
        return False
    if up is not None and up >= x:
        return False
    return True


def enumerate_kt_tableaux(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    shape = [x for x in normalize_partition(lam, n) if x]
    yield from fillings(shape, range(1, 3 * n + 1), _ok_cell)


def validate_kt_tableau(T: Tableau, n: int) -> None:
    if len(T) > n or any(len(a) < len(b) for a, b in zip(T, T[1:])):
        raise ValidationError("bad shape")
    grid: dict = {}
    for (i, j), x in sorted(cells(T).items()):
        if not 1 <= x <= 3 * n or not _ok_cell(grid, i, j, x):
            raise ValidationError(f"entry at ({i},{j}) breaks a filling rule")
        grid[(i, j)] = x


def kt_weight(T: Tableau, n: int) -> Monomial:
    """d_i = #ib - #ibb."""
    d = [0] * n
    for row in T:
        for x in row:
            i, bars = letter_of(x)
            if bars == 1:
                d[i - 1] += 1
            elif bars == 2:
                d[i - 1] -= 1
    return Monomial(tuple(d), 0)


def kt_char(lam: Sequence[int], n: int) -> LaurentPoly:
    acc: dict[Monomial, int] = {}
    for T in enumerate_kt_tableaux(lam, n):
        m = kt_weight(T, n)
        acc[m] = acc.get(m, 0) + 1
    return LaurentPoly(acc, n)


# -- patterns ----------------------------------------------------------------------------

def row_rank(r: int, n: int) -> int:
    return 3 * n + 1 - r


def row_length(r: int, n: int) -> int:
    return letter_of(row_rank(r, n))[0]


def row_label(r: int, n: int) -> str:
    return letter_label(row_rank(r, n))


def is_unbarred_row(r: int, n: int) -> bool:
    return letter_of(row_rank(r, n))[1] == 0


def rule4(p: Pattern, n: int) -> bool:
    """Every unbarred row ends in 0 or 1."""
    return all(p[r - 1][-1] <= 1 for r in range(1, 3 * n + 1) if is_unbarred_row(r, n))


def rule5(p: Pattern, n: int) -> bool:
    """Every row ``ibb`` with i < n repeats the row above it entrywise."""
    for r in range(2, 3 * n + 1):
        i, bars = letter_of(row_rank(r, n))
        if bars == 2 and i < n and any(b != a for a, b in zip(p[r - 2], p[r - 1])):
            return False
    return True


def validate_kt_pattern(p: Pattern, n: int, strict: bool = False, rules: bool = True) -> None:
    """Shape, monotonicity and interleaving; with ``rules`` also rules 4 and 5."""
    if len(p) != 3 * n:
        raise ValidationError(f"pattern must have {3 * n} rows")
    for r, row in enumerate(p, start=1):
        if len(row) != row_length(r, n):
            raise ValidationError(f"row {r} must have {row_length(r, n)} entries")
        if any(x < 0 for x in row):
            raise ValidationError("negative entry")
        if not (is_strictly_decreasing(row) if strict else is_weakly_decreasing(row)):
            raise ValidationError(f"row {r} = {row} is not {'strictly' if strict else 'weakly'} decreasing")
    for upper, lower in zip(p, p[1:]):
        if not interleaves(upper, lower):
            raise ValidationError(f"rows {upper} and {lower} do not interleave")
    if rules and not rule4(p, n):
        raise ValidationError("an unbarred row ends in an entry larger than 1")
    if rules and not rule5(p, n):
        raise ValidationError("a double-barred row is not left-leaning")


def _descend(rows: list, n: int, strict: bool, rules: bool) -> Iterator[Pattern]:
    r = len(rows) + 1
    if r > 3 * n:
        yield tuple(rows)
        return
    i, bars = letter_of(row_rank(r, n))
    upper = rows[-1]
    if rules and bars == 2 and i < n:
        candidates = [tuple(upper[:i])]
        if strict and not is_strictly_decreasing(candidates[0]):
            candidates = []
    else:
        candidates = interleaving_rows(upper, i, strict=strict)
    for row in candidates:
        if rules and bars == 0 and row[-1] > 1:
            continue
        yield from _descend(rows + [row], n, strict, rules)


def enumerate_kt_patterns(lam: Sequence[int], n: int) -> Iterator[Pattern]:
    lam = normalize_partition(lam, n)
    yield from _descend([lam], n, strict=False, rules=True)


def enumerate_strict_kt(lam: Sequence[int], n: int, rules: bool = True) -> Iterator[Pattern]:
    """Strict patterns with top row ``lambda``; ``rules=False`` drops rules 4 and 5."""
    lam = normalize_partition(lam, n)
    if not is_strictly_decreasing(lam):
        raise ValidationError(f"{lam} is not strictly decreasing")
    yield from _descend([lam], n, strict=True, rules=rules)


def _layers(p: Pattern, n: int) -> list[tuple[int, ...]]:
    return [tuple(p[3 * n - q]) + (0,) * (n - len(p[3 * n - q])) for q in range(1, 3 * n + 1)]


def _layers_to_pattern(layers, n: int) -> Pattern:
    rows = []
    for r in range(1, 3 * n + 1):
        layer, length = layers[row_rank(r, n) - 1], row_length(r, n)
        if any(layer[length:]):
            raise ValidationError("letters appear below their allowed rows")
        rows.append(tuple(layer[:length]))
    return tuple(rows)


def kt_pattern_to_tableau(p: Pattern, n: int) -> Tableau:
    validate_kt_pattern(p, n)
    return layers_to_tableau(_layers(p, n))


def kt_tableau_to_pattern(T: Tableau, n: int) -> Pattern:
    validate_kt_tableau(T, n)
    p = _layers_to_pattern(tableau_to_layers(T, 3 * n, n), n)
    validate_kt_pattern(p, n)
    return p


# -- shifted tableaux ------------------------------------------------------------------

def _ok_shifted(grid, i, j, x, unbarred_rule: bool = True) -> bool:
    idx, bars = letter_of(x)
    if j == i and idx != i:
        return False
    if unbarred_rule and bars == 0 and j != i:
        return False
    left, up, diag = grid.get((i, j - 1)), grid.get((i - 1, j)), grid.get((i - 1, j - 1))
    if left is not None and left > x:
        return False
    if up is not None and up > x:
        return False
    if diag is not None and diag >= x:
        return False
    return True


def enumerate_shifted_kt(lam: Sequence[int], n: int, unbarred_rule: bool = True) -> Iterator[Tableau]:
    """Shifted tableaux of shape ``lambda``.

    Rows and columns weakly increase, diagonals strictly increase and row k
    starts with k, kb or kbb.  With ``unbarred_rule`` an unbarred letter k
    may only stand at the start of row k; without it the set is strictly
    larger than the set of strict patterns obeying rules 4 and 5.
    """
    lam = normalize_partition(lam, n)
    if not is_strictly_decreasing(lam):
        raise ValidationError(f"{lam} is not strictly decreasing")
    ok = lambda g, i, j, x: _ok_shifted(g, i, j, x, unbarred_rule)  # noqa: E731
    yield from fillings([x for x in lam if x], range(1, 3 * n + 1), ok, shifted=True)


def validate_shifted_kt(T: Tableau, n: int) -> None:
    grid: dict = {}
    for (i, j), x in sorted(cells(T, shifted=True).items()):
        if not 1 <= x <= 3 * n or not _ok_shifted(grid, i, j, x):
            raise ValidationError(f"shifted entry at ({i},{j}) breaks a rule")
        grid[(i, j)] = x


def strict_kt_to_shifted(p: Pattern, n: int) -> Tableau:
    validate_kt_pattern(p, n, strict=True)
    return layers_to_tableau(_layers(p, n), shifted=True)


def shifted_to_strict_kt(T: Tableau, n: int) -> Pattern:
    validate_shifted_kt(T, n)
    p = _layers_to_pattern(tableau_to_layers(T, 3 * n, n), n)
    validate_kt_pattern(p, n, strict=True)
    return p


# -- ice --------------------------------------------------------------------------------

TIE_EDGES = {"U": (False, True), "D": (True, False), "O": (False, False)}  # (north_in, south_in)
BEND_OUTS = {"A": (True, False), "B": (False, True), "C": (True, True)}  # (upper_out, lower_out)


def tie_name(west_in: bool, north_in: bool, south_in: bool) -> str | None:
    if not west_in:
        return None
    for name, edges in TIE_EDGES.items():
        if edges == (north_in, south_in):
            return name
    return None


def bend_name(upper_out: bool, lower_out: bool) -> str | None:
    for name, outs in BEND_OUTS.items():
        if outs == (upper_out, lower_out):
            return name
    return None


@dataclass(frozen=True)
class KTIceState:
    """``grid`` rows run top to bottom.  Unbarred rows omit column 1, which is
    their tie.  ``ties[k-1]`` and ``bends[k-1]`` belong to letter ``k``.  A
    tie or bend is None when the orientation fits none of the allowed shapes.
    """

    n: int
    top_row: tuple[int, ...]
    columns: tuple[int, ...]
    grid: tuple[tuple[str, ...], ...]
    ties: tuple[str | None, ...]
    bends: tuple[str | None, ...]

    def row_labels(self) -> tuple[str, ...]:
        return tuple(row_label(r, self.n) for r in range(1, 3 * self.n + 1))

    def admissible(self) -> bool:
        return None not in self.ties and None not in self.bends

    def to_json_obj(self) -> dict:
        return {
            "family": "kt-ice",
            "n": self.n,
            "top_row": list(self.top_row),
            "columns": list(self.columns),
            "row_labels": list(self.row_labels()),
            "grid": [list(r) for r in self.grid],
            "ties": list(self.ties),
            "bends": list(self.bends),
            "boundary": {
                "left": ["right"] * (3 * self.n),
                "bottom": ["down"] * len(self.columns),
                "top": ["up" if c in self.top_row else "down" for c in self.columns],
            },
        }


def pattern_to_kt_ice_unchecked(p: Pattern, n: int) -> KTIceState | None:
    """Fill the lattice from any strict pattern; None if a vertex cannot be completed."""
    top = tuple(p[0])
    if not top or top[0] < 1:
        raise ValidationError("the lattice needs lambda_1 >= 1")
    columns = tuple(range(top[0], 0, -1))
    ups = [set(x for x in row if x > 0) for row in p] + [set()]
    grid, outs = [], {}
    ties: dict[int, str | None] = {}
    for r in range(1, 3 * n + 1):
        above, below = ups[r - 1], ups[r]
        if is_unbarred_row(r, n):
            res = ice_row(columns[:-1], above, below)
            if res is None:
                return None
            grid.append(tuple(res[0]))
            ties[letter_of(row_rank(r, n))[0]] = tie_name(res[1], 1 not in above, 1 in below)
        else:
            res = ice_row(columns, above, below)
            if res is None:
                return None
            grid.append(tuple(res[0]))
            outs[r] = res[1]
    bends = []
    for k in range(1, n + 1):
        r_upper = 3 * n + 1 - 3 * k
        bends.append(bend_name(outs[r_upper], outs[r_upper + 1]))
    return KTIceState(n, top, columns, tuple(grid), tuple(ties[k] for k in range(1, n + 1)), tuple(bends))


def strict_kt_to_ice(p: Pattern, n: int) -> KTIceState:
    validate_kt_pattern(p, n, strict=True)
    s = pattern_to_kt_ice_unchecked(p, n)
    if s is None or not s.admissible():
        raise ValidationError(f"pattern {p} does not give an admissible state")
    return s


def kt_ice_to_strict(s: KTIceState) -> Pattern:
    n = s.n
    if not s.admissible():
        raise ValidationError("state has an inadmissible tie or bend")
    rows = []
    for r, ups in enumerate(read_rows(s), start=1):
        length = row_length(r, n)
        if not length - 1 <= len(ups) <= length:
            raise ValidationError(f"row {r} has {len(ups)} up arrows")
        rows.append(tuple(ups) + (0,) * (length - len(ups)))
    p = tuple(rows)
    validate_kt_pattern(p, n, strict=True)
    if strict_kt_to_ice(p, n) != s:
        raise ValidationError("state is not consistent with its own arrows")
    return p


def enumerate_kt_ice(lam: Sequence[int], n: int) -> Iterator[KTIceState]:
    for p in enumerate_strict_kt(lam, n):
        yield strict_kt_to_ice(p, n)


def read_rows(s: KTIceState) -> Pattern:
    """Up-arrow columns above each row, with no length or rule checks."""
    n = s.n
    rows = [tuple(s.top_row)]
    for r in range(2, 3 * n + 1):
        row_configs = s.grid[r - 1]
        cols = s.columns[: len(row_configs)]
        ups = [c for c, name in zip(cols, row_configs) if not config_edges(name)[1]]
        if is_unbarred_row(r, n):
            tie = s.ties[letter_of(row_rank(r, n))[0] - 1]
            if tie is not None and not TIE_EDGES[tie][0]:
                ups.append(1)
        rows.append(tuple(ups))
    return tuple(rows)


def has_pattern_row_lengths(s: KTIceState) -> bool:
    """Each row shows as many up arrows as its pattern row has entries, up to one 0."""
    return all(
        row_length(r, s.n) - 1 <= len(row) <= row_length(r, s.n)
        for r, row in enumerate(read_rows(s), start=1)
        if r > 1
    )


def enumerate_kt_ice_direct(
    lam: Sequence[int], n: int, three_vertex: bool = True, source_bend: bool = False, row_lengths: bool = True
) -> Iterator[KTIceState]:
    """Backtracking over vertices, ties and bends, independent of patterns.

    ``three_vertex`` restricts unbarred rows to SW, NW, NE.  ``source_bend``
    additionally admits the bend with both arrows entering the lattice; such
    states are reported with that bend as None.  ``row_lengths`` keeps only
    states whose up-arrow counts fit the pattern row lengths; the local rules
    alone do not force this because a C bend sends out two arrows.
    """
    lam = normalize_partition(lam, n)
    top = tuple(lam)
    columns = tuple(range(top[0], 0, -1))
    width = len(columns)
    height = 3 * n
    unbarred = [is_unbarred_row(r, n) for r in range(1, height + 1)]
    top_up = [c in top for c in columns]
    grid: list[list[str | None]] = [[None] * width for _ in range(height)]
    ties: dict[int, str] = {}

    # each row's cells; unbarred rows have the tie in the last column
    order = [(i, k) for i in range(height) for k in range(width)]

    def north_in(i, k):
        if i == 0:
            return not top_up[k]
        above = grid[i - 1][k]
        if unbarred[i - 1] and k == width - 1:
            return TIE_EDGES[above][1] is False  # tie's south arrow points down into this row
        return not config_edges(above)[2]

    def west_in(i, k):
        return True if k == 0 else not config_edges(grid[i][k - 1])[3]

    def rec(pos: int):
        if pos == len(order):
            bends = []
            for kk in range(1, n + 1):
                ru = 3 * n - 3 * kk
                up_out = not config_edges(grid[ru][-1])[3]
                lo_out = not config_edges(grid[ru + 1][-1])[3]
                b = bend_name(up_out, lo_out)
                if b is None and not source_bend:
                    return
                bends.append(b)
            rows = []
            for i in range(height):
                rows.append(tuple(grid[i][:-1]) if unbarred[i] else tuple(grid[i]))
            state = KTIceState(n, top, columns, tuple(rows), tuple(ties[kk] for kk in range(1, n + 1)), tuple(bends))
            if not row_lengths or has_pattern_row_lengths(state):
                yield state
            return
        i, k = order[pos]
        w_in, n_in = west_in(i, k), north_in(i, k)
        last = i == height - 1
        if unbarred[i] and k == width - 1:
            letter = letter_of(row_rank(i + 1, n))[0]
            for name, (tn, ts) in TIE_EDGES.items():
                if not w_in or tn != n_in or (last and ts):
                    continue
                grid[i][k] = name
                ties[letter] = name
                yield from rec(pos + 1)
            grid[i][k] = None
            ties.pop(letter, None)
            return
        choices = THREE_VERTEX if (unbarred[i] and three_vertex) else CONFIGS
        for name in choices:
            w, nn, s_, e = config_edges(name)
            if w != w_in or nn != n_in or (last and s_):
                continue
            grid[i][k] = name
            yield from rec(pos + 1)
        grid[i][k] = None

    yield from rec(0)


def verify_three_vertex(s: KTIceState | None) -> bool:
    """Unbarred rows use only SW, NW, NE and every tie fits U, D or O."""
    if s is None:
        return False
    n = s.n
    for r in range(1, 3 * n + 1):
        if is_unbarred_row(r, n) and any(c not in THREE_VERTEX for c in s.grid[r - 1]):
            return False
    return None not in s.ties


def verify_kt_three_vertex(lam: Sequence[int], n: int) -> IdentityReport:
    """Both directions of the three-vertex characterisation for one ``lambda``.

    Forward: every state built from a strict pattern obeying all rules is
    three-vertex with admissible ties.  Converse: strict patterns breaking
    rule 4 or rule 5 give states that fail the check, and the direct
    three-vertex enumeration finds nothing beyond the pattern image.
    """
    lam = normalize_partition(lam, n)
    image = [strict_kt_to_ice(p, n) for p in enumerate_strict_kt(lam, n)]
    forward = all(verify_three_vertex(s) for s in image)
    violators = {4: [], 5: []}
    for p in enumerate_strict_kt(lam, n, rules=False):
        for k, rule in ((4, rule4), (5, rule5)):
            if not rule(p, n):
                violators[k].append(p)
    passing = {k: [p for p in ps if verify_three_vertex(pattern_to_kt_ice_unchecked(p, n))] for k, ps in violators.items()}
    oracle = set(enumerate_kt_ice_direct(lam, n))
    extra = sorted(read_rows(s) for s in oracle - set(image))
    details = {
        "states": len(image),
        "forward_holds": forward,
        "rule4_violators": len(violators[4]),
        "rule4_violators_passing_check": [[list(r) for r in p] for p in passing[4]],
        "rule5_violators": len(violators[5]),
        "rule5_violators_passing_check": [[list(r) for r in p] for p in passing[5]],
        "direct_states": len(oracle),
        "direct_extra_states": [[list(r) for r in p] for p in extra],
    }
    passed = forward and not passing[4] and not passing[5] and not extra
    return IdentityReport("kt-three-vertex", {"lambda": list(lam), "n": n}, passed=passed, details=details)

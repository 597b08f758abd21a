"""Shared machinery: partitions, interleaving rows, layered tableaux, ice rows.

Conventions used throughout the package:

* Partitions and pattern rows are stored largest part first.
* Tableau letters are stored as integer *ranks* 1 < 2 < ... in the family's
  alphabet order; each family module translates ranks to printable labels.
* A pattern is a tuple of rows listed top to bottom.  The top row is the
  shape and each lower row is the shape occupied by letters up to some rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

Row = tuple[int, ...]
Pattern = tuple[Row, ...]
Tableau = tuple[tuple[int, ...], ...]

CONFIGS = ("NW", "NE", "SW", "SE", "NS", "EW")


class ValidationError(ValueError):
    """A combinatorial object violates the rules of its family."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers padded to ``n`` parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValidationError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"{parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int], n: int | None = None) -> "Partition":
        parts = tuple(parts)
        if n is not None:
            nonzero = tuple(p for p in parts if p)
            if len(nonzero) > n:
                raise ValidationError(f"{parts} has more than {n} nonzero parts")
            parts = (nonzero + (0,) * n)[:n]
        return cls(parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return sum(1 for p in self.parts if p)

    def plus(self, other: Sequence[int]) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.parts, other))


def normalize_partition(lam: Sequence[int] | Partition, n: int) -> tuple[int, ...]:
    """Validate ``lam`` and pad or trim trailing zeros to exactly ``n`` parts."""
    if isinstance(lam, Partition):
        lam = lam.parts
    return Partition.of(lam, n).parts


def partitions_in_box(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """All partitions with ``n`` parts (zeros allowed) and parts ``<= max_part``."""
    def rec(prefix: tuple[int, ...], cap: int):
        if len(prefix) == n:
            yield prefix
            return
        for v in range(cap, -1, -1):
            yield from rec(prefix + (v,), v)

    yield from rec((), max_part)


def staircase(n: int, low: int) -> tuple[int, ...]:
    """``(low + n - 1, ..., low + 1, low)``."""
    return tuple(range(low + n - 1, low - 1, -1))


def is_weakly_decreasing(row: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(row, row[1:]))


def is_strictly_decreasing(row: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(row, row[1:]))


def interleaves(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """GT interleaving ``upper[j] >= lower[j] >= upper[j+1]``.

    A missing ``upper[j+1]`` imposes ``lower[j] >= 0``; ``lower`` may be as
    long as ``upper`` or one shorter.
    """
    if not 0 <= len(upper) - len(lower) <= 1:
        return False
    for j, b in enumerate(lower):
        hi = upper[j]
        lo = upper[j + 1] if j + 1 < len(upper) else 0
        if not hi >= b >= lo:
            return False
    return True


def interleaving_rows(upper: Sequence[int], length: int, strict: bool = False) -> Iterator[Row]:
    """Every row of the given length interleaving below ``upper``.

    Order: entries chosen left to right, values descending (depth first).
    """
    bounds = []
    for j in range(length):
        hi = upper[j]
        lo = upper[j + 1] if j + 1 < len(upper) else 0
        bounds.append((hi, lo))

    def rec(prefix: tuple[int, ...]):
        j = len(prefix)
        if j == length:
            yield prefix
            return
        hi, lo = bounds[j]
        if strict and prefix:
            hi = min(hi, prefix[-1] - 1)
        for v in range(hi, lo - 1, -1):
            yield from rec(prefix + (v,))

    yield from rec(())


def count_special(pattern: Pattern) -> int:
    """Entries c with upper-left a and upper-right b satisfying a > c > b."""
    total = 0
    for upper, lower in zip(pattern, pattern[1:]):
        for j, c in enumerate(lower):
            a = upper[j]
            b = upper[j + 1] if j + 1 < len(upper) else 0
            if a > c > b:
                total += 1
    return total


def count_left_leaning(pattern: Pattern) -> int:
    """Entries equal to their upper-left neighbour."""
    total = 0
    for upper, lower in zip(pattern, pattern[1:]):
        total += sum(1 for j, c in enumerate(lower) if c == upper[j])
    return total


# -- layered tableaux ----------------------------------------------------------

def _padded(row: Sequence[int], width: int) -> list[int]:
    return list(row) + [0] * (width - len(row))


def layers_to_tableau(layers: Sequence[Sequence[int]], shifted: bool = False) -> Tableau:
    """Build a tableau from nested shapes.

    ``layers[k]`` is the shape occupied by letters of rank ``<= k + 1`` (row
    lengths, largest row first).  The last layer is the full shape.  For a
    shifted tableau, row ``i`` starts in column ``i`` and layer entries count
    cells of that row.
    """
    width = max((len(l) for l in layers), default=0)
    full = _padded(layers[-1], width) if layers else []
    rows = [[0] * full[i] for i in range(width)]
    prev = [0] * width
    for rank, layer in enumerate(layers, start=1):
        cur = _padded(layer, width)
        for i in range(width):
            if cur[i] < prev[i]:
                raise ValidationError(f"layer {rank} shrinks in row {i + 1}")
            for c in range(prev[i], cur[i]):
                rows[i][c] = rank
        prev = cur
    while rows and not rows[-1]:
        rows.pop()
    return tuple(tuple(r) for r in rows)


def tableau_to_layers(tableau: Tableau, ranks: int, nrows: int) -> list[Row]:
    """Inverse of :func:`layers_to_tableau`: row lengths of letters ``<= k``."""
    if len(tableau) > nrows:
        raise ValidationError(f"tableau has more than {nrows} rows")
    out = []
    for k in range(1, ranks + 1):
        out.append(tuple(sum(1 for x in r if x <= k) for r in tableau) + (0,) * (nrows - len(tableau)))
    return out


def tableau_shape(tableau: Tableau, nrows: int) -> Row:
    return tuple(len(r) for r in tableau) + (0,) * (nrows - len(tableau))


def cells(tableau: Tableau, shifted: bool = False) -> dict[tuple[int, int], int]:
    """Map (row, column), both 1-based, to the entry."""
    out = {}
    for i, r in enumerate(tableau, start=1):
        off = i - 1 if shifted else 0
        for j, x in enumerate(r, start=1):
            out[(i, j + off)] = x
    return out


def fillings(shape: Sequence[int], alphabet: Sequence[int], ok_cell, shifted: bool = False) -> Iterator[Tableau]:
    """Row-major backtracking over fillings of ``shape``.

    ``ok_cell(grid, i, j, x)`` decides whether letter ``x`` may go in cell
    (i, j) given the partially filled ``grid`` dict (1-based coordinates).
    Letters are tried in increasing order, so output is lexicographic.
    """
    positions = []
    for i, length in enumerate(shape, start=1):
        off = i - 1 if shifted else 0
        positions.extend((i, off + j) for j in range(1, length + 1))
    grid: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(positions):
            rows = []
            for i, length in enumerate(shape, start=1):
                off = i - 1 if shifted else 0
                rows.append(tuple(grid[(i, off + j)] for j in range(1, length + 1)))
            while rows and not rows[-1]:
                rows.pop()
            yield tuple(rows)
            return
        i, j = positions[k]
        for x in alphabet:
            if ok_cell(grid, i, j, x):
                grid[(i, j)] = x
                yield from rec(k + 1)
                del grid[(i, j)]

    yield from rec(0)


# -- six-vertex rows -------------------------------------------------------------

_NAMES = {
    frozenset("NW"): "NW",
    frozenset("NE"): "NE",
    frozenset("SW"): "SW",
    frozenset("SE"): "SE",
    frozenset("NS"): "NS",
    frozenset("EW"): "EW",
}


def vertex_config(west_in: bool, north_in: bool, south_in: bool, east_in: bool) -> str | None:
    """Name a vertex by its inbound edges, or None if it is not two-in two-out."""
    inbound = frozenset(d for d, flag in zip("WNSE", (west_in, north_in, south_in, east_in)) if flag)
    return _NAMES.get(inbound)


def config_edges(name: str) -> tuple[bool, bool, bool, bool]:
    """(west_in, north_in, south_in, east_in) for a configuration name."""
    return tuple(d in name for d in "WNSE")  # type: ignore[return-value]


def ice_row(columns: Sequence[int], up_above: set[int], up_below: set[int], rightward: bool = True):
    """Fill one horizontal line given the vertical edges around it.

    ``columns`` is listed left to right.  ``up_above`` holds columns whose edge
    above the vertex points up; ``up_below`` columns whose edge below points up.
    ``rightward`` is the orientation of the left boundary edge (True: pointing
    right, into the first vertex).

    Returns ``(configs, rightward_out)`` where ``rightward_out`` is the
    orientation of the edge leaving the last vertex on the right, or None if
    no two-in two-out filling exists.
    """
    h = rightward
    configs = []
    for c in columns:
        north_in = c not in up_above
        south_in = c in up_below
        ins = int(h) + int(north_in) + int(south_in)
        if ins == 2:
            east_in = False
        elif ins == 1:
            east_in = True
        else:
            return None
        configs.append(vertex_config(h, north_in, south_in, east_in))
        h = not east_in
    return configs, h


def grid_vertical_edges(grid: Sequence[Sequence[str]]) -> list[list[bool]]:
    """Orientation (True = up) of the vertical edge above each vertex."""
    return [[not config_edges(name)[1] for name in row] for row in grid]


def check_grid_consistency(grid: Sequence[Sequence[str]]) -> bool:
    """Neighbouring vertices agree about every shared edge."""
    for row in grid:
        for left, right in zip(row, row[1:]):
            if config_edges(left)[3] == config_edges(right)[0]:
                return False
    for upper, lower in zip(grid, grid[1:]):
        for a, b in zip(upper, lower):
            # south edge of a points up into a iff north edge of b points up (out of b)
            if config_edges(a)[2] == config_edges(b)[1]:
                return False
    return True


def all_rows_of_configs(width: int) -> Iterator[tuple[str, ...]]:
    """Brute-force helper for oracles: every word in the six configurations."""
    return product(CONFIGS, repeat=width)

"""GL(n): Gelfand-Tsetlin patterns, tableaux, type A ice and Tokuyama's formula.

Pattern rows are listed top to bottom; the top row has ``n`` entries and row
``i`` (1-based from the top) has ``n - i + 1``.  Row ``i`` is the shape
filled by the letters ``1..n-i+1`` of the corresponding tableau.

Ice states for a strict top row ``r`` have ``n`` rows and columns
``r[0], ..., 1, 0`` from left to right.  The edge above the vertex in ice row
``i`` (from the top) and column ``c`` points up iff ``c`` is an entry of
pattern row ``i``.  Ice row ``i`` from the top carries the variable ``z_i``;
this is the assignment for which the partition function reproduces
``prod_{i<j} (z_i + t z_j) s_lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .algebra import LaurentPoly, Monomial, product
from .combinat import (
    CONFIGS,
    Pattern,
    Tableau,
    ValidationError,
    cells,
    config_edges,
    count_left_leaning,
    count_special,
    fillings,
    ice_row,
    interleaves,
    interleaving_rows,
    is_strictly_decreasing,
    is_weakly_decreasing,
    layers_to_tableau,
    normalize_partition,
    staircase,
    tableau_shape,
    tableau_to_layers,
    vertex_config,
)
from .reports import IdentityReport

__all__ = [
    "IceStateA",
    "count_left_leaning",
    "count_special",
    "enumerate_gt",
    "enumerate_ice_a",
    "enumerate_ice_a_direct",
    "enumerate_shifted_a",
    "enumerate_ssyt",
    "enumerate_strict_gt",
    "gt_to_tableau",
    "gt_weight",
    "ice_a_to_strict_gt",
    "partition_function_a",
    "schur_via_gt",
    "schur_via_tableaux",
    "shifted_to_strict_gt",
    "strict_gt_to_ice_a",
    "strict_gt_to_shifted",
    "tableau_to_gt",
    "tableau_weight",
    "tokuyama_lhs",
    "tokuyama_rhs",
    "verify_tokuyama",
]


# -- patterns ------------------------------------------------------------------

def _descend(rows: list[tuple[int, ...]], strict: bool) -> Iterator[Pattern]:
    if len(rows[-1]) <= 1:
        yield tuple(rows)
        return
    for row in interleaving_rows(rows[-1], len(rows[-1]) - 1, strict=strict):
        yield from _descend(rows + [row], strict)


def enumerate_gt(top_row: Sequence[int]) -> Iterator[Pattern]:
    """All GT patterns with the given top row, depth first, values descending."""
    top = tuple(top_row)
    if not is_weakly_decreasing(top) or any(x < 0 for x in top):
        raise ValidationError(f"top row {top} must be weakly decreasing and nonnegative")
    if not top:
        yield ()
        return
    yield from _descend([top], strict=False)


def enumerate_strict_gt(top_row: Sequence[int]) -> Iterator[Pattern]:
    """Strict GT patterns (every row strictly decreasing) with the given top row."""
    top = tuple(top_row)
    if not is_strictly_decreasing(top) or any(x < 0 for x in top):
        raise ValidationError(f"top row {top} must be strictly decreasing and nonnegative")
    yield from _descend([top], strict=True)


def validate_gt(p: Pattern, strict: bool = False) -> None:
    n = len(p[0]) if p else 0
    if len(p) != n or any(len(row) != n - i for i, row in enumerate(p)):
        raise ValidationError(f"pattern {p} is not triangular")
    for row in p:
        if any(x < 0 for x in row):
            raise ValidationError(f"negative entry in {p}")
        if strict and not is_strictly_decreasing(row):
            raise ValidationError(f"row {row} is not strictly decreasing")
    for upper, lower in zip(p, p[1:]):
        if not interleaves(upper, lower):
            raise ValidationError(f"rows {upper} and {lower} do not interleave")


def gt_weight(p: Pattern) -> Monomial:
    """Exponent of z_i is R_i - R_{i+1}, rows summed from the top; z_n gets R_n."""
    sums = [sum(row) for row in p] + [0]
    return Monomial(tuple(sums[i] - sums[i + 1] for i in range(len(p))), 0)


# -- semistandard tableaux ----------------------------------------------------------

def gt_to_tableau(p: Pattern) -> Tableau:
    validate_gt(p)
    return layers_to_tableau(list(reversed(p)))


def tableau_to_gt(T: Tableau, n: int) -> Pattern:
    validate_ssyt(T, n)
    layers = tableau_to_layers(T, n, n)
    return tuple(tuple(layers[k - 1][:k]) for k in range(n, 0, -1))


def validate_ssyt(T: Tableau, n: int) -> None:
    if any(len(a) < len(b) for a, b in zip(T, T[1:])):
        raise ValidationError("rows must weakly shrink")
    if len(T) > n:
        raise ValidationError(f"more than {n} rows")
    grid = cells(T)
    for (i, j), x in grid.items():
        if not 1 <= x <= n:
            raise ValidationError(f"entry {x} outside 1..{n}")
        if (i, j + 1) in grid and grid[(i, j + 1)] < x:
            raise ValidationError("rows must weakly increase")
        if (i + 1, j) in grid and grid[(i + 1, j)] <= x:
            raise ValidationError("columns must strictly increase")


def enumerate_ssyt(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    shape = [x for x in normalize_partition(lam, n) if x]

    def ok(grid, i, j, x):
        if (i, j - 1) in grid and grid[(i, j - 1)] > x:
            return False
        if (i - 1, j) in grid and grid[(i - 1, j)] >= x:
            return False
        return True

    yield from fillings(shape, range(1, n + 1), ok)


def tableau_weight(T: Tableau, n: int) -> Monomial:
    counts = [0] * n
    for row in T:
        for x in row:
            counts[x - 1] += 1
    return Monomial(tuple(counts), 0)


def schur_via_tableaux(lam: Sequence[int], n: int) -> LaurentPoly:
    return LaurentPoly(((tableau_weight(T, n), 1) for T in enumerate_ssyt(lam, n)), n)


def schur_via_gt(lam: Sequence[int], n: int) -> LaurentPoly:
    return LaurentPoly(((gt_weight(p), 1) for p in enumerate_gt(normalize_partition(lam, n))), n)


# -- shifted tableaux ------------------------------------------------------------------

def enumerate_shifted_a(top_row: Sequence[int]) -> Iterator[Tableau]:
    """Shifted tableaux of shape ``top_row`` in the letters 1..n.

    Rows and columns weakly increase, diagonals strictly increase.
    """
    top = tuple(top_row)
    n = len(top)

    def ok(grid, i, j, x):
        if (i, j - 1) in grid and grid[(i, j - 1)] > x:
            return False
        if (i - 1, j) in grid and grid[(i - 1, j)] > x:
            return False
        if (i - 1, j - 1) in grid and grid[(i - 1, j - 1)] >= x:
            return False
        return True

    shape = [x for x in top if x]
    yield from fillings(shape, range(1, n + 1), ok, shifted=True)


def strict_gt_to_shifted(p: Pattern) -> Tableau:
    validate_gt(p, strict=True)
    return layers_to_tableau(list(reversed(p)), shifted=True)


def shifted_to_strict_gt(T: Tableau, n: int) -> Pattern:
    layers = tableau_to_layers(T, n, n)
    p = tuple(tuple(layers[k - 1][:k]) for k in range(n, 0, -1))
    if any(layers[k - 1][k:] != (0,) * (n - k) for k in range(1, n + 1)):
        raise ValidationError(f"letter layers of {T} do not fit a triangular pattern")
    validate_gt(p, strict=True)
    return p


# -- Tokuyama -----------------------------------------------------------------------

def tokuyama_lhs(lam: Sequence[int], n: int) -> LaurentPoly:
    t = LaurentPoly.t_var(n)
    deformation = product(
        (LaurentPoly.z(i, n) + t * LaurentPoly.z(j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)), n
    )
    return deformation * schur_via_tableaux(lam, n)


def tokuyama_rhs(lam: Sequence[int], n: int) -> LaurentPoly:
    r"""Sum over strict patterns with top row lambda + rho of (1+t)^S t^L z^wt."""
    lam = normalize_partition(lam, n)
    top = tuple(a + b for a, b in zip(lam, staircase(n, 0)))
    t = LaurentPoly.t_var(n)
    one_plus_t = 1 + t
    total = LaurentPoly.zero(n)
    for p in enumerate_strict_gt(top):
        m = gt_weight(p)
        total += one_plus_t ** count_special(p) * LaurentPoly.monomial(m.z, count_left_leaning(p))
    return total


def verify_tokuyama(lam: Sequence[int], n: int) -> IdentityReport:
    lam = normalize_partition(lam, n)
    return IdentityReport.compare("tokuyama-a", {"lambda": list(lam), "n": n}, tokuyama_lhs(lam, n), tokuyama_rhs(lam, n))


# -- ice -------------------------------------------------------------------------------

ICE_A_WEIGHTS: dict[str, LaurentPoly] = {
    # templates in one variable z (the row's variable) and t
    "NW": LaurentPoly.one(1),
    "SE": LaurentPoly.z(1, 1),
    "SW": LaurentPoly.t_var(1),
    "NE": LaurentPoly.z(1, 1),
    "NS": LaurentPoly.z(1, 1) * (1 + LaurentPoly.t_var(1)),
    "EW": LaurentPoly.one(1),
}


def embed_template(template: LaurentPoly, var: int, n: int) -> LaurentPoly:
    """Read a one-variable template as a polynomial in z_var of the n-variable ring."""
    out = {}
    for m, c in template.items():
        z = [0] * n
        if var:
            z[var - 1] = m.z[0]
        elif m.z[0]:
            raise ValueError("template depends on z but no variable was assigned")
        out[Monomial(tuple(z), m.t)] = c
    return LaurentPoly(out, n)


@dataclass(frozen=True)
class IceStateA:
    """An admissible type A ice state.

    ``grid[i][k]`` is the configuration of the vertex in ice row ``i`` (from
    the top) and the ``k``-th column from the left; ``columns`` lists the
    column labels left to right.
    """

    top_row: tuple[int, ...]
    columns: tuple[int, ...]
    grid: tuple[tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.top_row)

    def row_labels(self) -> tuple[int, ...]:
        """Labels 1..n counted from the bottom, listed top to bottom."""
        return tuple(range(self.n, 0, -1))

    def boundary(self) -> dict:
        return boundary_a(self.top_row)

    def to_json_obj(self) -> dict:
        return {
            "family": "ice-a",
            "top_row": list(self.top_row),
            "columns": list(self.columns),
            "row_labels": list(self.row_labels()),
            "grid": [list(r) for r in self.grid],
            "boundary": self.boundary(),
        }


def boundary_a(top_row: Sequence[int]) -> dict:
    """Boundary orientations for the type A lattice with top row ``top_row``."""
    top = tuple(top_row)
    columns = list(range(top[0], -1, -1)) if top else [0]
    return {
        "left": ["right"] * len(top),
        "right": ["left"] * len(top),
        "bottom": ["down"] * len(columns),
        "top": ["up" if c in top else "down" for c in columns],
        "columns": columns,
    }


def strict_gt_to_ice_a(p: Pattern) -> IceStateA:
    validate_gt(p, strict=True)
    top = p[0]
    columns = tuple(range(top[0], -1, -1))
    rows = list(p) + [()]
    grid = []
    for i in range(len(p)):
        res = ice_row(columns, set(rows[i]), set(rows[i + 1]))
        if res is None or res[1]:
            raise ValidationError(f"pattern {p} does not give an admissible state")
        grid.append(tuple(res[0]))
    return IceStateA(tuple(top), columns, tuple(grid))


def _up_columns_above(state_grid, columns, i) -> tuple[int, ...]:
    return tuple(c for c, name in zip(columns, state_grid[i]) if not config_edges(name)[1])


def check_ice_a(s: IceStateA) -> None:
    """Raise unless ``s`` satisfies every local and boundary rule."""
    b = boundary_a(s.top_row)
    if list(s.columns) != b["columns"] or len(s.grid) != s.n:
        raise ValidationError("state has the wrong dimensions")
    for i, row in enumerate(s.grid):
        if any(name not in CONFIGS for name in row) or len(row) != len(s.columns):
            raise ValidationError("unknown configuration")
        if not config_edges(row[0])[0]:
            raise ValidationError("left boundary must point right")
        if not config_edges(row[-1])[3]:
            raise ValidationError("right boundary must point left")
        for a, c in zip(row, row[1:]):
            if config_edges(a)[3] == config_edges(c)[0]:
                raise ValidationError("horizontal edge disagreement")
    for k, name in enumerate(s.grid[0]):
        if (not config_edges(name)[1]) != (b["top"][k] == "up"):
            raise ValidationError("top boundary mismatch")
    for name in s.grid[-1]:
        if config_edges(name)[2]:
            raise ValidationError("bottom boundary must point down")
    for upper, lower in zip(s.grid, s.grid[1:]):
        for a, c in zip(upper, lower):
            if config_edges(a)[2] == config_edges(c)[1]:
                raise ValidationError("vertical edge disagreement")


def ice_a_to_strict_gt(s: IceStateA) -> Pattern:
    check_ice_a(s)
    n = s.n
    rows = tuple(_up_columns_above(s.grid, s.columns, i) for i in range(n))
    if any(len(r) != n - i for i, r in enumerate(rows)):
        raise ValidationError("up-arrow counts do not form a triangle")
    return rows


def enumerate_ice_a(top_row: Sequence[int]) -> Iterator[IceStateA]:
    for p in enumerate_strict_gt(top_row):
        yield strict_gt_to_ice_a(p)


def enumerate_ice_a_direct(top_row: Sequence[int]) -> Iterator[IceStateA]:
    """Backtracking over vertex configurations; independent of patterns."""
    top = tuple(top_row)
    n = len(top)
    columns = tuple(range(top[0], -1, -1))
    width = len(columns)
    top_up = [c in top for c in columns]
    grid = [[None] * width for _ in range(n)]

    def rec(i: int, k: int):
        if i == n:
            yield IceStateA(top, columns, tuple(tuple(r) for r in grid))
            return
        ni, nk = (i, k + 1) if k + 1 < width else (i + 1, 0)
        west_in = True if k == 0 else not config_edges(grid[i][k - 1])[3]
        north_in = (not top_up[k]) if i == 0 else not config_edges(grid[i - 1][k])[2]
        for name in CONFIGS:
            w, nn, s, e = config_edges(name)
            if w != west_in or nn != north_in:
                continue
            if k == width - 1 and not e:
                continue
            if i == n - 1 and s:
                continue
            grid[i][k] = name
            yield from rec(ni, nk)
        grid[i][k] = None

    yield from rec(0, 0)


def state_weight_a(s: IceStateA, weights: Mapping[str, LaurentPoly] = ICE_A_WEIGHTS) -> LaurentPoly:
    n = s.n
    w = LaurentPoly.one(n)
    for i, row in enumerate(s.grid):
        var = i + 1
        for name in row:
            w = w * embed_template(weights[name], var, n)
    return w


def partition_function_a(lam: Sequence[int], n: int, weights: Mapping[str, LaurentPoly] = ICE_A_WEIGHTS) -> LaurentPoly:
    lam = normalize_partition(lam, n)
    top = tuple(a + b for a, b in zip(lam, staircase(n, 0)))
    total = LaurentPoly.zero(n)
    for s in enumerate_ice_a(top):
        total += state_weight_a(s, weights)
    return total

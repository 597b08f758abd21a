"""Bent ice for SO(2n+1): states, Boltzmann weights and the deformation identity.

Layout.  A state for ``lambda`` has ``2n + 1`` horizontal lines and columns
``M, ..., 1`` from left to right, where ``M = lambda_1 + n`` is the largest
entry of ``lambda + rho`` with ``rho = (n, ..., 1)``.  Ice row ``r`` (0-based
from the top) matches pattern row ``r + 1``: the edge above a vertex points
up iff its column is a nonzero entry of that pattern row.  Row 0 is the zero
row; below it the rows alternate ``nb, n, ..., 1b, 1``.  Each barred row and
the unbarred row beneath it are capped on the right by a bend:

* ``A``: the barred row's arrow leaves into the bend and the unbarred row's
  arrow comes back in (clockwise);
* ``B``: the reverse (counterclockwise).

Weights.  :data:`FIGURE_WEIGHTS` is the table exactly as drawn, with
unbarred rows of class Delta, barred rows of class Gamma and the pair of
letter ``k`` carrying ``z_k``.  With those weights the partition function is
not ``C* s^so`` (already at n = 1).  :data:`DEFAULT_WEIGHTS` is the
calibrated table for which the deformation identity holds: barred rows use
Delta, unbarred rows use Gamma, bends are ``A = z^-1`` and ``B = t z``, and
the pair of letter ``k`` carries ``z_{n+1-k}`` (the top pair carries z_1).
Under these weights the factor is :func:`c_star_deformed`, whose last
product is ``(1 + t z_i / z_j)``; the undeformed :func:`c_star` only agrees
for n = 1.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping, Sequence

from .algebra import LaurentPoly, Monomial, product
from .combinat import CONFIGS, Pattern, ValidationError, config_edges, ice_row, normalize_partition, staircase
from .reports import IdentityReport
from .sundaram import (
    enumerate_strict_patterns,
    enumerate_strict_patterns_top,
    row_length,
    row_letter,
    so_char_via_tableaux,
    sp_char_via_tableaux,
    validate_pattern,
)
from .typea import embed_template

__all__ = [
    "DEFAULT_WEIGHTS",
    "FIGURE_WEIGHTS",
    "IceStateB",
    "WeightTable",
    "c_star",
    "c_star_deformed",
    "check_bend_lemma",
    "check_no_ne_top_row",
    "check_second_row_grouping",
    "cor52_rhs",
    "enumerate_ice_b",
    "enumerate_ice_b_direct",
    "ice_b_to_strict_pattern",
    "partition_function_b",
    "pattern_to_ice_b_unchecked",
    "state_weight",
    "strict_pattern_to_ice_b",
    "verify_cor52",
    "verify_thm51",
]


# -- states -------------------------------------------------------------------------

@dataclass(frozen=True)
class IceStateB:
    """``grid`` rows run top to bottom; ``bends[j]`` caps the pair of letter ``j + 1``."""

    n: int
    top_row: tuple[int, ...]
    columns: tuple[int, ...]
    grid: tuple[tuple[str, ...], ...]
    bends: tuple[str, ...]

    def row_labels(self) -> tuple[str, ...]:
        return ("0",) + tuple(row_letter(r, self.n) for r in range(2, 2 * self.n + 2))

    def pair_rows(self, letter: int) -> tuple[int, int]:
        """0-based grid indices (barred, unbarred) of the pair for ``letter``."""
        k = self.n - letter + 1
        return 2 * k - 1, 2 * k

    def to_json_obj(self) -> dict:
        return {
            "family": "sundaram-ice",
            "n": self.n,
            "top_row": list(self.top_row),
            "columns": list(self.columns),
            "row_labels": list(self.row_labels()),
            "grid": [list(r) for r in self.grid],
            "bends": list(self.bends),
            "boundary": {
                "left": ["right"] * (2 * self.n + 1),
                "bottom": ["down"] * len(self.columns),
                "top": ["up" if c in self.top_row else "down" for c in self.columns],
                "zero_row_right": "out",
            },
        }


def _east_out(name: str) -> bool:
    return not config_edges(name)[3]


def pattern_to_ice_b_unchecked(p: Pattern, n: int) -> IceStateB | None:
    """Fill the lattice row by row from the pattern without checking strictness.

    Returns None if some vertex cannot be completed, or if the zero row or a
    bend has an inadmissible orientation on the right.
    """
    top = tuple(p[0][:n])
    columns = tuple(range(top[0], 0, -1))
    ups = [set(x for x in row if x > 0) for row in p] + [set()]
    grid, outs = [], []
    for r in range(2 * n + 1):
        res = ice_row(columns, ups[r], ups[r + 1])
        if res is None:
            return None
        grid.append(tuple(res[0]))
        outs.append(res[1])
    if not outs[0]:
        return None
    bends = []
    for letter in range(1, n + 1):
        k = n - letter + 1
        upper, lower = outs[2 * k - 1], outs[2 * k]
        if upper and not lower:
            bends.append("A")
        elif lower and not upper:
            bends.append("B")
        else:
            return None
    return IceStateB(n, top, columns, tuple(grid), tuple(bends))


def strict_pattern_to_ice_b(p: Pattern, n: int) -> IceStateB:
    validate_pattern(p, n, strict=True)
    s = pattern_to_ice_b_unchecked(p, n)
    if s is None:
        raise ValidationError(f"pattern {p} does not give an admissible state")
    return s


def check_ice_b(s: IceStateB) -> None:
    """Raise unless every local, boundary and bend rule holds."""
    n = s.n
    if len(s.grid) != 2 * n + 1 or s.columns != tuple(range(s.top_row[0], 0, -1)):
        raise ValidationError("state has the wrong dimensions")
    for row in s.grid:
        if len(row) != len(s.columns) or any(c not in CONFIGS for c in row):
            raise ValidationError("malformed row")
        if not config_edges(row[0])[0]:
            raise ValidationError("left boundary must point right")
        for a, b in zip(row, row[1:]):
            if config_edges(a)[3] == config_edges(b)[0]:
                raise ValidationError("horizontal edge disagreement")
    for c, name in zip(s.columns, s.grid[0]):
        if (not config_edges(name)[1]) != (c in s.top_row):
            raise ValidationError("top boundary mismatch")
    for upper, lower in zip(s.grid, s.grid[1:]):
        for a, b in zip(upper, lower):
            if config_edges(a)[2] == config_edges(b)[1]:
                raise ValidationError("vertical edge disagreement")
    if any(config_edges(name)[2] for name in s.grid[-1]):
        raise ValidationError("bottom boundary must point down")
    if not _east_out(s.grid[0][-1]):
        raise ValidationError("the zero row must point out on the right")
    for letter in range(1, n + 1):
        bar, unbar = s.pair_rows(letter)
        up, lo = _east_out(s.grid[bar][-1]), _east_out(s.grid[unbar][-1])
        expected = "A" if up and not lo else "B" if lo and not up else None
        if expected is None or s.bends[letter - 1] != expected:
            raise ValidationError(f"bend for letter {letter} is inconsistent")


def ice_b_to_strict_pattern(s: IceStateB) -> Pattern:
    check_ice_b(s)
    n = s.n
    rows = [tuple(s.top_row) + (0,)]
    for r in range(1, 2 * n + 1):
        ups = tuple(c for c, name in zip(s.columns, s.grid[r]) if not config_edges(name)[1])
        length = row_length(r + 1, n)
        if not length - 1 <= len(ups) <= length:
            raise ValidationError(f"row {r + 1} has {len(ups)} up arrows")
        rows.append(ups + (0,) * (length - len(ups)))
    p = tuple(rows)
    validate_pattern(p, n, strict=True)
    return p


def _top_row(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = normalize_partition(lam, n)
    return tuple(a + b for a, b in zip(lam, staircase(n, 1)))


def enumerate_ice_b(top_row: Sequence[int], n: int) -> Iterator[IceStateB]:
    """States with top boundary ``top_row`` (= lambda + rho), via strict patterns."""
    top = tuple(top_row)
    if len(top) != n or not top or top[-1] <= 0:
        raise ValidationError(f"top row {top} must have {n} positive entries")
    for p in enumerate_strict_patterns_top(top + (0,), n):
        yield strict_pattern_to_ice_b(p, n)


def enumerate_ice_b_direct(top_row: Sequence[int], n: int, forbid_top_ne: bool = True) -> Iterator[IceStateB]:
    """Backtracking over vertex configurations, independent of patterns.

    With ``forbid_top_ne`` the zero row may not contain NE, which is how the
    model excludes states whose top step removes two zeros from one row.
    """
    top = tuple(top_row)
    columns = tuple(range(top[0], 0, -1))
    width, height = len(columns), 2 * n + 1
    top_up = [c in top for c in columns]
    grid: list[list[str | None]] = [[None] * width for _ in range(height)]

    def bends_of() -> tuple[str, ...] | None:
        out = []
        for letter in range(1, n + 1):
            k = n - letter + 1
            up, lo = _east_out(grid[2 * k - 1][-1]), _east_out(grid[2 * k][-1])
            if up == lo:
                return None
            out.append("A" if up else "B")
        return tuple(out)

    def rec(i: int, k: int):
        if i == height:
            bends = bends_of()
            if bends is not None:
                yield IceStateB(n, top, columns, tuple(tuple(r) for r in grid), bends)  # type: ignore[arg-type]
            return
        ni, nk = (i, k + 1) if k + 1 < width else (i + 1, 0)
        west_in = True if k == 0 else not config_edges(grid[i][k - 1])[3]
        north_in = (not top_up[k]) if i == 0 else not config_edges(grid[i - 1][k])[2]
        for name in CONFIGS:
            w, nn, s_, e = config_edges(name)
            if w != west_in or nn != north_in:
                continue
            if i == height - 1 and s_:
                continue
            if i == 0 and k == width - 1 and e:
                continue
            if i == 0 and forbid_top_ne and name == "NE":
                continue
            if k == width - 1 and i >= 2 and i % 2 == 0:
                # unbarred row closes a bend with the barred row above
                if _east_out(grid[i - 1][-1]) == (not e):
                    continue
            grid[i][k] = name
            yield from rec(ni, nk)
        grid[i][k] = None

    yield from rec(0, 0)


# -- lemmas ---------------------------------------------------------------------------

def check_bend_lemma(s: IceStateB) -> bool:
    """Bend of letter m is B iff the unbarred row of m ends in 0; the zero row points out."""
    if not _east_out(s.grid[0][-1]):
        return False
    n = s.n
    for letter in range(1, n + 1):
        _, unbar = s.pair_rows(letter)
        ups = [c for c, name in zip(s.columns, s.grid[unbar]) if not config_edges(name)[1]]
        ends_in_zero = len(ups) < row_length(unbar + 1, n)
        if s.bends[letter - 1] != ("B" if ends_in_zero else "A"):
            return False
    return True


def check_no_ne_top_row(s: IceStateB) -> bool:
    return "NE" not in s.grid[0]


# -- weights ---------------------------------------------------------------------------

def _z(power: int = 1) -> LaurentPoly:
    return LaurentPoly.z(1, 1, power)


_T = LaurentPoly.t_var(1)
_ONE = LaurentPoly.one(1)

DELTA = {"NW": _ONE, "SE": _T * _z(), "SW": _ONE, "NE": _z(), "NS": _z() * (1 + _T), "EW": _ONE}
GAMMA = {"NW": _ONE, "SE": _z(-1), "SW": _T, "NE": _z(-1), "NS": _z(-1) * (1 + _T), "EW": _ONE}


@dataclass(frozen=True)
class WeightTable:
    """Vertex and bend weights as one-variable templates in z and t.

    ``barred`` names the class ("delta" or "gamma") used by barred rows; the
    unbarred rows use the other one.  ``variables`` is "bottom-up" when the
    pair of letter k carries z_k and "top-down" when it carries z_{n+1-k}.
    """

    delta: Mapping[str, LaurentPoly] = field(default_factory=lambda: dict(DELTA))
    gamma: Mapping[str, LaurentPoly] = field(default_factory=lambda: dict(GAMMA))
    bend_a: LaurentPoly = _z(-1)
    bend_b: LaurentPoly = _T
    top: Mapping[str, LaurentPoly] = field(default_factory=lambda: {c: _ONE for c in CONFIGS})
    barred: str = "gamma"
    variables: str = "bottom-up"

    def variable(self, letter: int, n: int) -> int:
        return letter if self.variables == "bottom-up" else n + 1 - letter

    def row_table(self, barred: bool) -> Mapping[str, LaurentPoly]:
        use_delta = (self.barred == "delta") == barred
        return self.delta if use_delta else self.gamma

    def swapped(self) -> "WeightTable":
        return replace(self, barred="delta" if self.barred == "gamma" else "gamma")

    def to_json_obj(self) -> dict:
        def table(d):
            return {k: d[k].to_json_obj() for k in CONFIGS}

        return {
            "delta": table(self.delta),
            "gamma": table(self.gamma),
            "bend_a": self.bend_a.to_json_obj(),
            "bend_b": self.bend_b.to_json_obj(),
            "barred": self.barred,
            "variables": self.variables,
        }


FIGURE_WEIGHTS = WeightTable()
DEFAULT_WEIGHTS = WeightTable(bend_b=_T * _z(), barred="delta", variables="top-down")


def state_weight(s: IceStateB, w: WeightTable = DEFAULT_WEIGHTS) -> LaurentPoly:
    n = s.n
    total = LaurentPoly.one(n)
    for name in s.grid[0]:
        total = total * embed_template(w.top[name], 0, n)
    for r in range(1, 2 * n + 1):
        R = r + 1
        letter = n - R // 2 + 1
        var = w.variable(letter, n)
        table = w.row_table(barred=R % 2 == 0)
        for name in s.grid[r]:
            total = total * embed_template(table[name], var, n)
    for letter, bend in enumerate(s.bends, start=1):
        template = w.bend_a if bend == "A" else w.bend_b
        total = total * embed_template(template, w.variable(letter, n), n)
    return total


def _group_sum(args) -> LaurentPoly:
    top, second, n, w = args
    from .sundaram import _descend  # local import keeps the worker payload small

    total = LaurentPoly.zero(n)
    for p in _descend([tuple(top) + (0,), second], n, strict=True):
        total += state_weight(strict_pattern_to_ice_b(p, n), w)
    return total


def _second_rows(top: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    from .sundaram import _second_rows as rows

    return list(rows(tuple(top) + (0,), strict=True))


def partition_function_b(lam: Sequence[int], n: int, w: WeightTable = DEFAULT_WEIGHTS, jobs: int = 1) -> LaurentPoly:
    """Sum of state weights over all states for ``lambda + rho``.

    With ``jobs > 1`` the states are split by their second pattern row and
    summed in worker processes; the result does not depend on ``jobs``.
    """
    top = _top_row(lam, n)
    tasks = [(top, mu, n, w) for mu in _second_rows(top, n)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_group_sum, tasks))
    else:
        parts = [_group_sum(t) for t in tasks]
    total = LaurentPoly.zero(n)
    for part in parts:
        total += part
    return total


# -- deformation factors -------------------------------------------------------------

def _rho_shift(n: int, sign: int) -> list[int]:
    return [sign * e for e in staircase(n, 1)]


def _c_factor(n: int, deformed: bool) -> LaurentPoly:
    t = LaurentPoly.t_var(n)
    z = lambda i, p=1: LaurentPoly.z(i, n, p)  # noqa: E731
    f = product((1 + t * z(i, 2) for i in range(1, n + 1)), n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ratio = z(i) * z(j, -1)
            f = f * (1 + t * z(i) * z(j)) * (1 + (t * ratio if deformed else ratio))
    return f.shift(_rho_shift(n, -1))


def c_star(n: int) -> LaurentPoly:
    """``z^-rho prod(1 + t z_i^2) prod_{i<j} (1 + t z_i z_j)(1 + z_i/z_j)``."""
    return _c_factor(n, deformed=False)


def c_star_deformed(n: int) -> LaurentPoly:
    """Same as :func:`c_star` but with ``(1 + t z_i/z_j)`` in the last product."""
    return _c_factor(n, deformed=True)


def cor52_rhs(lam: Sequence[int], n: int, deformed: bool = False) -> LaurentPoly:
    """``prod(1 + t z_i) prod_{i<j} (1 + t z_i z_j)(1 + [t] z_i/z_j) s^so``."""
    t = LaurentPoly.t_var(n)
    z = lambda i, p=1: LaurentPoly.z(i, n, p)  # noqa: E731
    f = product((1 + t * z(i) for i in range(1, n + 1)), n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ratio = z(i) * z(j, -1)
            f = f * (1 + t * z(i) * z(j)) * (1 + (t * ratio if deformed else ratio))
    return f * so_char_via_tableaux(lam, n)


def verify_thm51(
    lam: Sequence[int], n: int, w: WeightTable = DEFAULT_WEIGHTS, deformed: bool = False, jobs: int = 1
) -> IdentityReport:
    """Compare the partition function with ``C* s^so`` (``deformed`` selects the factor)."""
    lam = normalize_partition(lam, n)
    lhs = partition_function_b(lam, n, w, jobs=jobs)
    factor = c_star_deformed(n) if deformed else c_star(n)
    rhs = factor * so_char_via_tableaux(lam, n)
    return IdentityReport.compare(
        "thm51", {"lambda": list(lam), "n": n}, lhs, rhs, factor="deformed" if deformed else "as-stated"
    )


def verify_cor52(
    lam: Sequence[int], n: int, w: WeightTable = DEFAULT_WEIGHTS, deformed: bool = False, jobs: int = 1
) -> IdentityReport:
    """Bend-corrected partition function against the closed product, cross-multiplied.

    Each bend on the pair carrying ``z_v`` is multiplied by
    ``z_v^(n-v+1) (1 + t z_v) / (1 + t z_v^2)``.  Every state has one bend
    per pair, so clearing denominators gives
    ``Z * z^rho * prod(1 + t z_i) = RHS * prod(1 + t z_i^2)``.
    """
    lam = normalize_partition(lam, n)
    t = LaurentPoly.t_var(n)
    z = lambda i, p=1: LaurentPoly.z(i, n, p)  # noqa: E731
    numer = product((1 + t * z(i) for i in range(1, n + 1)), n).shift(_rho_shift(n, 1))
    denom = product((1 + t * z(i, 2) for i in range(1, n + 1)), n)
    lhs = partition_function_b(lam, n, w, jobs=jobs) * numer
    rhs = cor52_rhs(lam, n, deformed=deformed) * denom
    return IdentityReport.compare(
        "cor52", {"lambda": list(lam), "n": n}, lhs, rhs, factor="deformed" if deformed else "as-stated"
    )


def check_second_row_grouping(
    lam: Sequence[int], n: int, w: WeightTable = DEFAULT_WEIGHTS, deformed: bool = True
) -> list[IdentityReport]:
    """States sharing second pattern row ``mu + rho`` sum to ``C* sp_mu``."""
    lam = normalize_partition(lam, n)
    factor = c_star_deformed(n) if deformed else c_star(n)
    groups: dict[tuple[int, ...], LaurentPoly] = defaultdict(lambda: LaurentPoly.zero(n))
    rho = staircase(n, 1)
    for s in enumerate_ice_b(_top_row(lam, n), n):
        second = ice_b_to_strict_pattern(s)[1]
        groups[second] = groups[second] + state_weight(s, w)
    reports = []
    for second in sorted(groups, reverse=True):
        mu = tuple(a - b for a, b in zip(second, rho))
        reports.append(
            IdentityReport.compare(
                "second-row-group",
                {"lambda": list(lam), "n": n, "mu": list(mu)},
                groups[second],
                factor * sp_char_via_tableaux(mu, n),
            )
        )
    return reports

"""Weyl-formula characters and dimensions, used as independent oracles.

Type B characters carry half-integer exponents in ``z``; they are computed
in variables ``w`` with ``z_i = w_i^2`` so every exponent stays integral.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import prod
from typing import Callable, Sequence

from .algebra import LaurentPoly, product
from .combinat import normalize_partition
from .koiketerada import enumerate_kt_tableaux, kt_char
from .proctor import enumerate_proctor_tableaux
from .reports import IdentityReport
from .sundaram import enumerate_sundaram_tableaux, so_char_via_tableaux, sp_char_via_tableaux
from .typea import schur_via_tableaux

__all__ = [
    "char_cross_check",
    "determinant",
    "dim_check",
    "schur_bialternant",
    "so_char_weyl",
    "sp_char_weyl",
    "weyl_dim_b",
]


class ConsistencyError(ArithmeticError):
    """A quantity that must be exact by theory came out otherwise."""


def _sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(matrix: Sequence[Sequence[LaurentPoly]], n: int) -> LaurentPoly:
    """Leibniz expansion; fine for the small sizes used here."""
    size = len(matrix)
    total = LaurentPoly.zero(n)
    for perm in permutations(range(size)):
        term = product((matrix[i][perm[i]] for i in range(size)), n)
        total = total + term if _sign(perm) > 0 else total - term
    return total


def _ratio(entry: Callable[[int, int], LaurentPoly], denom_entry: Callable[[int, int], LaurentPoly], n: int) -> LaurentPoly:
    num = determinant([[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], n)
    den = determinant([[denom_entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], n)
    try:
        return num.divide_exact(den)
    except ArithmeticError as exc:
        raise ConsistencyError(f"Weyl ratio not exact: {exc}") from exc


def _antisym(j: int, e: int, n: int) -> LaurentPoly:
    return LaurentPoly.z(j, n, e) - LaurentPoly.z(j, n, -e)


def schur_bialternant(lam: Sequence[int], n: int) -> LaurentPoly:
    lam = normalize_partition(lam, n)
    return _ratio(
        lambda i, j: LaurentPoly.z(j, n, lam[i - 1] + n - i),
        lambda i, j: LaurentPoly.z(j, n, n - i),
        n,
    )


def sp_char_weyl(mu: Sequence[int], n: int) -> LaurentPoly:
    mu = normalize_partition(mu, n)
    return _ratio(
        lambda i, j: _antisym(j, mu[i - 1] + n - i + 1, n),
        lambda i, j: _antisym(j, n - i + 1, n),
        n,
    )


def so_char_weyl(lam: Sequence[int], n: int) -> LaurentPoly:
    """Odd orthogonal character in ``w`` variables (``z = w^2``)."""
    lam = normalize_partition(lam, n)
    return _ratio(
        lambda i, j: _antisym(j, 2 * lam[i - 1] + 2 * n - 2 * i + 1, n),
        lambda i, j: _antisym(j, 2 * n - 2 * i + 1, n),
        n,
    )


def weyl_dim_b(lam: Sequence[int], n: int) -> int:
    """Dimension of the SO(2n+1) irreducible with highest weight ``lam``."""
    lam = normalize_partition(lam, n)
    rho = [Fraction(2 * (n - i) - 1, 2) for i in range(n)]
    shifted = [l + r for l, r in zip(lam, rho)]
    ratios = []
    for i in range(n):
        ratios.append(shifted[i] / rho[i])
        for j in range(i + 1, n):
            ratios.append((shifted[i] - shifted[j]) / (rho[i] - rho[j]))
            ratios.append((shifted[i] + shifted[j]) / (rho[i] + rho[j]))
    value = prod(ratios, start=Fraction(1))
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"dimension {value} is not a positive integer")
    return int(value)


# -- cross checks -------------------------------------------------------------------

def char_cross_check(lam: Sequence[int], n: int) -> list:
    """Tableau characters against Weyl ratios for one ``(lam, n)``."""
    params = {"lambda": list(normalize_partition(lam, n)), "n": n}
    so_tab = so_char_via_tableaux(lam, n)
    return [
        IdentityReport.compare("schur-bialternant", params, schur_via_tableaux(lam, n), schur_bialternant(lam, n)),
        IdentityReport.compare("sp-weyl", params, sp_char_via_tableaux(lam, n), sp_char_weyl(lam, n)),
        IdentityReport.compare("so-weyl", params, so_tab.substitute_square(), so_char_weyl(lam, n)),
        IdentityReport.compare("kt-so", params, kt_char(lam, n), so_tab),
    ]


def dim_check(lam: Sequence[int], n: int) -> list:
    """Tableau counts and characters at ``z = 1`` against the root product."""
    params = {"lambda": list(normalize_partition(lam, n)), "n": n}
    dim = weyl_dim_b(lam, n)
    ones = [1] * n
    values = {
        "sundaram-count": sum(1 for _ in enumerate_sundaram_tableaux(lam, n)),
        "sundaram-char-at-1": int(so_char_via_tableaux(lam, n).specialize(ones)),
        "kt-count": sum(1 for _ in enumerate_kt_tableaux(lam, n)),
        "proctor-count": sum(1 for _ in enumerate_proctor_tableaux(lam, n)),
    }
    return [
        IdentityReport(f"dim-{name}", params, passed=value == dim, details={"count": value, "weyl_dim_b": dim})
        for name, value in values.items()
    ]

"""Exact sparse Laurent polynomials in z_1..z_n and a deformation parameter t.

Every weight, partition function and character in the package is a
:class:`LaurentPoly`.  The z-variables may carry negative exponents; ``t`` is
never inverted.  Coefficients are Python ints, so arithmetic is exact.

Terms are kept in canonical form (no zero coefficients) and are listed in a
fixed graded-lexicographic order on ``(t, z_1, ..., z_n)``, which makes
printing and JSON output byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "DimensionError",
    "EvaluationError",
    "DivisionError",
    "Monomial",
    "LaurentPoly",
    "poly_add",
    "poly_mul",
    "poly_substitute_square",
    "poly_specialize",
]


class DimensionError(ValueError):
    """Operands live in rings with a different number of z-variables."""


class EvaluationError(ZeroDivisionError):
    """A z-variable with a negative exponent was specialized to zero."""


class DivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


class Monomial(NamedTuple):
    z: tuple[int, ...]
    t: int = 0

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(tuple(a + b for a, b in zip(self.z, other.z)), self.t + other.t)

    def sort_key(self) -> tuple:
        return (self.t + sum(self.z), self.t) + self.z


def _order(terms: Mapping[Monomial, int]) -> list[tuple[Monomial, int]]:
    return sorted(terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_n", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (), n: int = 1):
        if n < 0:
            raise ValueError("ambient variable count must be nonnegative")
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = Monomial(tuple(int(e) for e in mono[0]), int(mono[1]))
            if len(mono.z) != n:
                raise DimensionError(f"monomial {mono} does not have {n} z-exponents")
            if mono.t < 0:
                raise ValueError("t may not carry a negative exponent")
            acc[mono] = acc.get(mono, 0) + int(coeff)
        self._terms = {m: c for m, c in acc.items() if c}
        self._n = n
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls({}, n)

    @classmethod
    def constant(cls, c: int, n: int) -> "LaurentPoly":
        return cls({Monomial((0,) * n, 0): c}, n)

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls.constant(1, n)

    @classmethod
    def monomial(cls, z: Sequence[int], t: int = 0, c: int = 1) -> "LaurentPoly":
        return cls({Monomial(tuple(z), t): c}, len(z))

    @classmethod
    def z(cls, i: int, n: int, power: int = 1) -> "LaurentPoly":
        """The variable ``z_i`` (1-based) raised to ``power``."""
        if not 1 <= i <= n:
            raise IndexError(f"z_{i} is not a variable of a ring in {n} variables")
        exps = [0] * n
        exps[i - 1] = power
        return cls.monomial(exps)

    @classmethod
    def t_var(cls, n: int, power: int = 1) -> "LaurentPoly":
        return cls.monomial((0,) * n, power)

    # -- basic protocol -----------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical (descending graded-lex) order."""
        return _order(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._n != self._n:
                raise DimensionError(f"cannot combine polynomials in {self._n} and {other._n} variables")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._n)
        raise TypeError(f"unsupported operand {other!r}")

    # -- ring operations ----------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly(acc, self._n)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()}, self._n)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return LaurentPoly(acc, self._n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("only nonnegative powers are supported")
        result = LaurentPoly.one(self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, z: Sequence[int], t: int = 0) -> "LaurentPoly":
        """Multiply by the monomial ``z^z t^t``."""
        m = Monomial(tuple(z), t)
        if len(m.z) != self._n:
            raise DimensionError("shift vector has the wrong length")
        return LaurentPoly({k * m: c for k, c in self._terms.items()}, self._n)

    # -- substitutions -------------------------------------------------
    def substitute_square(self) -> "LaurentPoly":
        """Replace every z_i by w_i**2 (t untouched); the result is read in w."""
        return LaurentPoly({Monomial(tuple(2 * e for e in m.z), m.t): c for m, c in self._terms.items()}, self._n)

    def substitute_inverse(self, i: int) -> "LaurentPoly":
        """Replace z_i by 1/z_i."""
        def flip(m: Monomial) -> Monomial:
            z = list(m.z)
            z[i - 1] = -z[i - 1]
            return Monomial(tuple(z), m.t)

        return LaurentPoly({flip(m): c for m, c in self._terms.items()}, self._n)

    def specialize(self, z_values: Sequence, t_value=0) -> Fraction:
        """Exact evaluation at rational points."""
        if len(z_values) != self._n:
            raise DimensionError("wrong number of z-values")
        zs = [Fraction(v) for v in z_values]
        tv = Fraction(t_value)
        total = Fraction(0)
        for m, c in self._terms.items():
            term = Fraction(c)
            for v, e in zip(zs, m.z):
                if e < 0 and v == 0:
                    raise EvaluationError("negative power of a variable specialized to zero")
                term *= v**e
            total += term * tv**m.t
        return total

    def at_t(self, t_value: int) -> "LaurentPoly":
        """Specialize t to an integer, keeping the z-variables."""
        acc: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            key = Monomial(m.z, 0)
            acc[key] = acc.get(key, 0) + c * t_value**m.t
        return LaurentPoly(acc, self._n)

    # -- division ------------------------------------------------------
    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            return (0,) * self._n
        return tuple(min(m.z[i] for m in self._terms) for i in range(self._n))

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / divisor``; raises :class:`DivisionError` otherwise.

        Both operands are shifted to honest polynomials, then divided by
        leading-term elimination under the canonical order.  With a single
        divisor the remainder is zero iff the division is exact.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self._n)
        sp, sd = self.min_exponents(), divisor.min_exponents()
        num = self.shift([-e for e in sp])
        den = divisor.shift([-e for e in sd])
        lead_m, lead_c = den.items()[0]
        rem = dict(num._terms)
        quot: dict[Monomial, int] = {}
        while rem:
            m, c = max(rem.items(), key=lambda kv: kv[0].sort_key())
            qz = tuple(a - b for a, b in zip(m.z, lead_m.z))
            qt = m.t - lead_m.t
            if qt < 0 or min(qz, default=0) < 0 or c % lead_c:
                raise DivisionError("polynomial division is not exact")
            q = Monomial(qz, qt)
            qc = c // lead_c
            quot[q] = qc
            for dm, dc in den._terms.items():
                k = dm * q
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot, self._n).shift([a - b for a, b in zip(sp, sd)])

    # -- serialization ------------------------------------------------
    def to_json_obj(self) -> list[dict]:
        return [{"z": list(m.z), "t": m.t, "c": str(c)} for m, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list[dict], n: int | None = None) -> "LaurentPoly":
        if n is None:
            if not obj:
                raise ValueError("cannot infer the variable count of an empty polynomial")
            n = len(obj[0]["z"])
        return cls(((Monomial(tuple(d["z"]), int(d["t"])), int(d["c"])) for d in obj), n)

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text), n)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self.items():
            factors = []
            if m.t:
                factors.append("t" if m.t == 1 else f"t^{m.t}")
            for i, e in enumerate(m.z, start=1):
                if e == 1:
                    factors.append(f"z{i}")
                elif e:
                    factors.append(f"z{i}^{e}")
            body = "*".join(factors)
            if not body:
                term = str(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            out.append((sign, term))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, term in out[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self}, n={self._n})"


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_substitute_square(a: LaurentPoly) -> LaurentPoly:
    return a.substitute_square()


def poly_specialize(a: LaurentPoly, z_values: Sequence, t_value=0) -> Fraction:
    return a.specialize(z_values, t_value)


def product(factors: Iterable[LaurentPoly], n: int) -> LaurentPoly:
    result = LaurentPoly.one(n)
    for f in factors:
        result = result * f
    return result

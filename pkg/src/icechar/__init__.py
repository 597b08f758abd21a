"""Exact combinatorics of ice models with U-turn boundaries and the
characters of classical groups they compute.

Modules: ``algebra`` (Laurent polynomials in ``z_1..z_n`` and ``t``),
``combinat`` (shared pattern and ice helpers), ``typea``, ``sundaram``,
``iceb``, ``koiketerada``, ``proctor``, ``characters`` and ``cli``.
"""

from .algebra import LaurentPoly, Monomial
from .combinat import Partition, ValidationError
from .reports import IdentityReport

__all__ = ["IdentityReport", "LaurentPoly", "Monomial", "Partition", "ValidationError"]
__version__ = "0.1.0"

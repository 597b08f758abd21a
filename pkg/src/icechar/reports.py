"""Pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .algebra import LaurentPoly


@dataclass
class IdentityReport:
    identity: str
    params: dict[str, Any]
    lhs: LaurentPoly | None = None
    rhs: LaurentPoly | None = None
    passed: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def compare(cls, identity: str, params: dict, lhs: LaurentPoly, rhs: LaurentPoly, **details) -> "IdentityReport":
        return cls(identity, params, lhs, rhs, lhs == rhs, details)

    @property
    def difference(self) -> LaurentPoly | None:
        if self.lhs is None or self.rhs is None:
            return None
        return self.lhs - self.rhs

    def __bool__(self) -> bool:
        return self.passed

    def to_json_obj(self) -> dict:
        out: dict[str, Any] = {"identity": self.identity, "params": self.params, "passed": self.passed}
        if self.lhs is not None:
            out["lhs"] = self.lhs.to_json_obj()
        if self.rhs is not None:
            out["rhs"] = self.rhs.to_json_obj()
        if not self.passed and self.difference is not None:
            out["difference"] = self.difference.to_json_obj()
        if self.details:
            out["details"] = self.details
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"[{status}] {self.identity}({args})"

"""Audit reports: a named list of checks with residuals and tolerances."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

PASS, FAIL, MARGINAL = "pass", "fail", "marginal"


@dataclass
class Check:
    name: str
    status: str
    residual: float | None = None
    tolerance: float | None = None
    witnesses: list = field(default_factory=list)
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "residual": _finite_or_str(self.residual),
            "tolerance": self.tolerance,
            "witnesses": self.witnesses,
            "detail": self.detail,
        }


def check_residual(name: str, residual: float, tolerance: float, **kw) -> Check:
    return Check(name, PASS if residual <= tolerance else FAIL, float(residual), tolerance, **kw)


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if FAIL in states:
            return FAIL
        if MARGINAL in states:
            return MARGINAL
        return PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "report": self.name,
            "status": self.status,
            "checks": [c.to_json() for c in self.checks],
            "info": self.info,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"{self.name}: {self.status}"]
        for c in self.checks:
            res = "" if c.residual is None else f" residual={c.residual:.3e}"
            tol = "" if c.tolerance is None else f" tol={c.tolerance:.1e}"
            lines.append(f"  [{c.status}] {c.name}{res}{tol} {c.detail}".rstrip())
        return "\n".join(lines)


def _finite_or_str(x):
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return str(x)

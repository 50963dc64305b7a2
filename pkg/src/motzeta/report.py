"""Structured verification results."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "witness": self.witness}


@dataclass
class Report:
    identity: str
    checks: list = field(default_factory=list)
    degree: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail="", witness=None) -> Check:
        c = Check(name, bool(passed), detail, witness)
        self.checks.append(c)
        return c

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witness))

    def render(self) -> str:
        head = f"{self.identity}: {'PASS' if self.passed else 'FAIL'}"
        if self.degree is not None:
            head += f" (degree {self.degree})"
        lines = [head]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "passed": self.passed,
            "degree": self.degree,
            "checks": [c.to_json() for c in self.checks],
        }

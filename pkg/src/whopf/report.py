"""Labelled pass/fail records for identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .linmap import LinMap, ShapeMismatch


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"label": self.label, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def equal(self, label: str, lhs: LinMap, rhs: LinMap) -> bool:
        """Record whether two maps agree, with the first bad column as witness."""
        try:
            ok = lhs == rhs
            if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
                self.checks.append(Check(label, False, f"shapes differ: {lhs.dom}->{lhs.cod} vs {rhs.dom}->{rhs.cod}"))
                return False
        except ShapeMismatch as e:
            self.checks.append(Check(label, False, str(e)))
            return False
        detail = ""
        if not ok:
            col = lhs.differing_column(rhs)
            detail = f"differs on {col}: {_fmt(lhs, col)} vs {_fmt(rhs, col)}"
        self.checks.append(Check(label, ok, detail))
        return ok

    def truth(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.label, c.passed, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Optional[Check]:
        f = self.failures()
        return f[0] if f else None

    def get(self, label: str) -> Check:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self) -> list:
        return [c.label for c in self.checks]

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def __str__(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.label}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines)


def _fmt(f: LinMap, col) -> str:
    if col is None:
        return "?"
    img = f.image_of(col)
    return " + ".join(f"{f.field.format(c)}·{k}" for k, c in img.items()) or "0"

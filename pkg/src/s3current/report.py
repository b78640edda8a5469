"""Verification report structures shared by the CLI suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional

__all__ = ["Case", "Report"]

PASS = "pass"
FAIL = "fail"
MISMATCH = "mismatch-vs-paper"


@dataclass
class Case:
    name: str
    status: str
    computed: Optional[str] = None
    claimed: Optional[str] = None

    def to_json(self):
        out = {"name": self.name, "status": self.status}
        if self.computed is not None:
            out["computed"] = self.computed
        if self.claimed is not None:
            out["claimed"] = self.claimed
        return out


@dataclass
class Report:
    suite: str
    cases: List[Case] = field(default_factory=list)

    def check(self, name: str, ok: bool, computed=None, claimed=None):
        self.cases.append(
            Case(name, PASS if ok else FAIL, _s(computed), _s(claimed))
        )
        return ok

    def compare(self, name: str, computed, claimed, match: bool):
        """Record a value next to a published claim; disagreement is a
        mismatch entry, not a failure."""
        self.cases.append(
            Case(name, PASS if match else MISMATCH, _s(computed), _s(claimed))
        )
        return match

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.status == PASS)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.status == FAIL)

    @property
    def mismatched(self) -> int:
        return sum(1 for c in self.cases if c.status == MISMATCH)

    def ok(self) -> bool:
        return self.failed == 0

    def extend(self, other: "Report"):
        self.cases.extend(other.cases)

    def to_json(self):
        return {
            "suite": self.suite,
            "cases": [c.to_json() for c in self.cases],
            "passed": self.passed,
            "failed": self.failed,
        }

    def render_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.cases:
            line = f"  [{c.status}] {c.name}"
            if c.status != PASS and c.computed is not None:
                line += f"\n      computed: {c.computed}"
                if c.claimed is not None:
                    line += f"\n      claimed:  {c.claimed}"
            lines.append(line)
        lines.append(
            f"  {self.passed} passed, {self.failed} failed, {self.mismatched} mismatch-vs-paper"
        )
        return "\n".join(lines)


def _s(value):
    if value is None:
        return None
    if isinstance(value, str):
        return value
    try:
        return json.dumps(value)
    except TypeError:
        return str(value)

"""Pass/fail records shared by the verification suites and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, List, Optional


@dataclass
class Check:
    name: str
    passed: bool
    trials: int = 1
    witness: Optional[Any] = None
    info: Optional[dict] = None

    def to_json(self):
        out = {"name": self.name, "status": "pass" if self.passed else "fail", "trials": self.trials}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class Report:
    suite: str
    checks: List[Check] = field(default_factory=list)
    seed: Optional[int] = None
    elapsed_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check):
        self.checks.append(check)

    def extend(self, checks):
        self.checks.extend(checks)

    def to_json(self, timing: bool = False):
        out = {"suite": self.suite}
        if self.seed is not None:
            out["seed"] = self.seed
        out["checks"] = [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)]
        out["status"] = "pass" if self.passed else "fail"
        if timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=False)

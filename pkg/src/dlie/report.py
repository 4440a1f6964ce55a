"""Structured pass/fail reports with deterministic JSON serialization."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: object = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclass
class VerificationReport:
    configuration: dict
    checks: list = field(default_factory=list)
    elapsed_seconds: float = 0.0

    def add(self, name: str, passed: bool, details=None) -> bool:
        self.checks.append(CheckResult(name, bool(passed), details))
        return bool(passed)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "configuration": self.configuration,
            "checks": [c.to_dict() for c in self.checks],
            "overall": self.overall,
            "elapsed_seconds": self.elapsed_seconds,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @staticmethod
    def from_dict(data: dict) -> "VerificationReport":
        rep = VerificationReport(configuration=dict(data["configuration"]))
        for c in data["checks"]:
            rep.add(c["name"], c["passed"], c.get("details"))
        rep.elapsed_seconds = data.get("elapsed_seconds", 0.0)
        return rep

    @staticmethod
    def from_json(text: str) -> "VerificationReport":
        return VerificationReport.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = []
        cfg = ", ".join(f"{k}={v}" for k, v in self.configuration.items() if v is not None)
        lines.append(f"configuration: {cfg}")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = "" if c.details is None else f"  [{c.details}]"
            lines.append(f"  {mark}  {c.name}{extra}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}"
                     f"  ({self.elapsed_seconds:.2f}s)")
        return "\n".join(lines)


class timed_report:
    """Context manager filling elapsed_seconds."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self._start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_seconds = time.perf_counter() - self._start
        return False

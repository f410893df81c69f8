"""Shared verification-report records and JSON emission."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check: str
    params: dict
    status: str  # "pass" | "fail"
    witness: str | None = None

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass
class Report:
    entries: list[CheckResult] = field(default_factory=list)

    def add(self, check: str, params: dict, ok: bool, witness: str | None = None):
        self.entries.append(
            CheckResult(check, params, "pass" if ok else "fail", None if ok else witness)
        )

    def extend(self, other: "Report"):
        self.entries.extend(other.entries)

    def all_pass(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if e.status != "pass"]

    def to_json(self) -> str:
        return json.dumps([e.as_dict() for e in self.entries], sort_keys=True, indent=2)

    def summary_lines(self) -> list[str]:
        lines = [f"[{e.status}] {e.check} {e.params}" for e in self.entries]
        n_bad = len(self.failures())
        lines.append(f"{len(self.entries) - n_bad}/{len(self.entries)} checks passed")
        return lines

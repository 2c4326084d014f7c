"""Shared shape for verification results: a named check with both values."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TheoremCheck:
    """One verified identity: pass/fail plus the two compared values."""

    name: str
    passed: bool
    lhs: object
    rhs: object

    def describe(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: {self.lhs} vs {self.rhs}"

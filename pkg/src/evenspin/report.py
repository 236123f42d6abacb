"""Structured residual reports shared by every verify_* operation."""
from __future__ import annotations

from dataclasses import dataclass

from .numkernel import InvariantViolation


@dataclass(frozen=True)
class CheckRecord:
    """One verified identity: residual against its tolerance."""

    id: str
    equation: str
    quote_tag: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def to_row(self) -> dict:
        return {
            "id": self.id,
            "equation": self.equation,
            "quote_tag": self.quote_tag,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


class CheckReport:
    """Ordered collection of CheckRecords with aggregate pass/fail."""

    def __init__(self, records: list[CheckRecord] | None = None):
        self.records: list[CheckRecord] = list(records) if records else []

    def add(self, id: str, equation: str, quote_tag: str,
            residual: float, tolerance: float) -> CheckRecord:
        rec = CheckRecord(id, equation, quote_tag, float(residual), float(tolerance))
        self.records.append(rec)
        return rec

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.records.extend(other.records)
        return self

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.records), default=0.0)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def require(self) -> "CheckReport":
        """Raise InvariantViolation naming every failed record."""
        bad = self.failures
        if bad:
            lines = ", ".join(
                f"{r.id} ({r.equation}): residual {r.residual:.3e} > {r.tolerance:.1e}"
                for r in bad
            )
            raise InvariantViolation(f"invariant check failed: {lines}")
        return self

    def to_rows(self) -> list[dict]:
        return [r.to_row() for r in self.records]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

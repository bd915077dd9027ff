"""Shared verification-report structures (schema-versioned JSON)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

REPORT_SCHEMA = "minorsmith.report/1"
WITNESS_SCHEMA = "minorsmith.witness/1"


@dataclass
class CaseOutcome:
    case_id: str
    ok: bool
    detail: str = ""
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {"case_id": self.case_id, "ok": self.ok}
        if self.detail:
            d["detail"] = self.detail
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class VerificationReport:
    statement_id: str
    status: str  # pass | fail | data-missing
    cases_total: int
    cases_up_to_symmetry: Optional[int] = None
    outcomes: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def failures(self) -> list[CaseOutcome]:
        return [o for o in self.outcomes if not o.ok]

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "statement_id": self.statement_id,
            "status": self.status,
            "cases_total": self.cases_total,
            "cases_up_to_symmetry": self.cases_up_to_symmetry,
            "notes": list(self.notes),
            "elapsed_s": round(self.elapsed_s, 4),
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


def mk_report(statement_id, outcomes, cases_total, cases_up_to_symmetry=None,
              notes=(), elapsed_s=0.0, data_missing=False) -> VerificationReport:
    if data_missing:
        status = "data-missing"
    else:
        status = "pass" if all(o.ok for o in outcomes) else "fail"
    return VerificationReport(
        statement_id=statement_id,
        status=status,
        cases_total=cases_total,
        cases_up_to_symmetry=cases_up_to_symmetry,
        outcomes=list(outcomes),
        notes=list(notes),
        elapsed_s=elapsed_s,
    )

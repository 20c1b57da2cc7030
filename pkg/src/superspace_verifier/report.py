"""Verdicts, check records and suite reports."""

import json
import logging
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field


logger = logging.getLogger(__name__)


class Verdict(BaseModel):
    """Outcome of one mathematical check."""
    passed: bool
    witness: Optional[str] = None
    notes: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def ok(cls, *notes: str, **details) -> "Verdict":
        return cls(passed=True, notes=list(notes), details=details)

    @classmethod
    def fail(cls, witness: str, *notes: str, **details) -> "Verdict":
        return cls(passed=False, witness=witness, notes=list(notes), details=details)

    @classmethod
    def combine(cls, parts: Dict[str, "Verdict"], *notes: str) -> "Verdict":
        """Conjunction of named sub-verdicts; the witness comes from the first failure."""
        failed = [(name, v) for name, v in parts.items() if not v.passed]
        witness = f"{failed[0][0]}: {failed[0][1].witness}" if failed else None
        merged = list(notes)
        for name, v in parts.items():
            merged += [f"{name}: {n}" for n in v.notes]
        return cls(
            passed=not failed,
            witness=witness,
            notes=merged,
            details={name: v.passed for name, v in parts.items()},
        )


CheckKind = Literal["asserted", "adjudication"]
Outcome = Literal["pass", "fail", "indeterminate"]


class CheckRecord(BaseModel):
    check_id: str
    claim: str
    kind: CheckKind = "asserted"
    verdict: Outcome
    witness: Optional[str] = None
    notes: List[str] = Field(default_factory=list)
    wall_time: Optional[float] = None

    @classmethod
    def from_verdict(cls, check_id: str, claim: str, kind: CheckKind, verdict: Verdict,
                     wall_time: Optional[float] = None) -> "CheckRecord":
        return cls(
            check_id=check_id,
            claim=claim,
            kind=kind,
            verdict="pass" if verdict.passed else "fail",
            witness=verdict.witness,
            notes=verdict.notes,
            wall_time=wall_time,
        )


class VerificationReport(BaseModel):
    """Ordered check records of one suite run."""
    suite: str
    engine_version: str
    fixture_hashes: Dict[str, str] = Field(default_factory=dict)
    records: List[CheckRecord] = Field(default_factory=list)

    def failures(self, strict: bool = False) -> List[CheckRecord]:
        return [
            r for r in self.records
            if r.verdict != "pass" and (strict or r.kind == "asserted")
        ]

    def exit_code(self, strict: bool = False) -> int:
        """0 when every gating check passed, 1 otherwise."""
        return 1 if self.failures(strict) else 0

    def to_json(self, include_timing: bool = False) -> str:
        """Canonical JSON; timing fields are dropped unless requested."""
        exclude = None if include_timing else {"records": {"__all__": {"wall_time"}}}
        return json.dumps(self.model_dump(exclude=exclude), indent=2, sort_keys=True)

    def summary_text(self) -> str:
        lines = [f"Suite: {self.suite} (engine {self.engine_version})"]
        for r in self.records:
            tag = r.verdict.upper()
            kind = "" if r.kind == "asserted" else " [adjudication]"
            lines.append(f"  {tag:<13} {r.check_id}{kind}: {r.claim}")
            if r.witness:
                lines.append(f"      witness: {r.witness}")
            for note in r.notes:
                lines.append(f"      note: {note}")
        counts = {o: sum(1 for r in self.records if r.verdict == o)
                  for o in ("pass", "fail", "indeterminate")}
        lines.append(
            f"{counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['indeterminate']} indeterminate"
        )
        return "\n".join(lines)

"""Verdicts, witnesses and reports shared by every exhaustive checker.

A report claims "pass" for an axiom only if every instance that fits the
carrier cap was evaluated equal; instances whose source carrier would be
astronomically large (iterated powersets grow as towers of exponentials)
are counted in ``skipped`` rather than silently ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Witness:
    """Smallest failing object and first failing element, with both values."""

    at: str
    element: str
    lhs: str
    rhs: str

    def as_dict(self) -> dict:
        return {"at": self.at, "element": self.element, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class AxiomVerdict:
    axiom: str
    passed: bool
    checked: int
    skipped: int = 0
    witness: Optional[Witness] = None

    def as_dict(self) -> dict:
        out = {
            "axiom": self.axiom,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
        }
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


@dataclass
class LawReport:
    law: str
    universe: str
    verdicts: list[AxiomVerdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Every axiom passed with at least one evaluated instance."""
        return all(v.passed for v in self.verdicts)

    @property
    def no_counterexample(self) -> bool:
        """No witness found; axioms with only oversize instances do not
        veto.  This is the filter predicate for candidate search."""
        return all(v.witness is None for v in self.verdicts)

    def verdict(self, axiom: str) -> AxiomVerdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    def summary(self) -> str:
        lines = [f"{self.law} on {self.universe}"]
        for v in self.verdicts:
            mark = "pass" if v.passed else "FAIL"
            extra = f" (checked={v.checked}, skipped={v.skipped})"
            if v.witness is not None:
                extra += f" witness at {v.witness.at}: {v.witness.element}: {v.witness.lhs} != {v.witness.rhs}"
            lines.append(f"  [{mark}] {v.axiom}{extra}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "law": self.law,
            "universe": self.universe,
            "ok": self.ok,
            "verdicts": [v.as_dict() for v in self.verdicts],
        }

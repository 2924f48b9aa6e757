"""Verdicts and evidence trails returned by the certifiers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .linalg import ScalarMode


class Verdict(str, enum.Enum):
    IDENTIFIABLE = "Identifiable"
    NOT_IDENTIFIABLE = "NotIdentifiable"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Evidence:
    """One test that contributed to a certificate.

    ``sufficient`` marks tests whose success alone proves identifiability.
    """

    test: str
    parameters: dict[str, Any]
    ranks: dict[str, Any]
    threshold: str
    passed: bool
    sufficient: bool = True

    def to_dict(self) -> dict:
        return {
            "test": self.test,
            "parameters": self.parameters,
            "ranks": self.ranks,
            "threshold": self.threshold,
            "passed": self.passed,
            "sufficient": self.sufficient,
        }


@dataclass
class Certificate:
    verdict: Verdict
    rank_r: int
    mode: ScalarMode
    evidence: list[Evidence] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict is Verdict.IDENTIFIABLE and not any(
            e.passed and e.sufficient for e in self.evidence
        ):
            raise ValueError("an Identifiable verdict needs a passing sufficient test")

    @property
    def identifiable(self) -> bool:
        return self.verdict is Verdict.IDENTIFIABLE

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "rank_r": self.rank_r,
            "mode": self.mode.to_dict(),
            "evidence": [e.to_dict() for e in self.evidence],
        }


def combine(certificates: list[Certificate]) -> Certificate:
    """Merge certificates for the same decomposition.

    Any Identifiable or NotIdentifiable outcome outranks Inconclusive; the
    evidence of all inputs is kept in order.
    """
    if not certificates:
        raise ValueError("nothing to combine")
    first = certificates[0]
    evidence = [e for c in certificates for e in c.evidence]
    verdicts = {c.verdict for c in certificates}
    if Verdict.IDENTIFIABLE in verdicts:
        verdict = Verdict.IDENTIFIABLE
    elif Verdict.NOT_IDENTIFIABLE in verdicts:
        verdict = Verdict.NOT_IDENTIFIABLE
    else:
        verdict = Verdict.INCONCLUSIVE
    return Certificate(verdict, first.rank_r, first.mode, evidence)

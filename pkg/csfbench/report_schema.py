from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .compositions import Partition
from .symfunc import SymFuncE


def residual_terms(lhs: SymFuncE, rhs: SymFuncE) -> list[dict[str, Any]]:
    """Nonzero terms of lhs - rhs in the e-basis."""

    diff = lhs - rhs
    return [{"partition": list(p.parts), "coeff": str(c)} for p, c in diff.terms()]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check on one instance."""

    check: str
    passed: bool
    graph: dict[str, Any] | None = None
    params: dict[str, Any] = field(default_factory=dict)
    residual_terms: list[dict[str, Any]] = field(default_factory=list)
    note: str | None = None

    def to_json(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "check": self.check,
            "graph": self.graph,
            "pass": self.passed,
            "residual_terms": self.residual_terms,
        }
        if self.params:
            payload["params"] = self.params
        if self.note:
            payload["note"] = self.note
        return payload


@dataclass(frozen=True)
class VerifyRow:
    """Formula against oracle for one family parameter tuple."""

    family: str
    spec: str
    order: int
    edges: int
    passed: bool
    residual_terms: list[dict[str, Any]] = field(default_factory=list)
    negative_stored: int = 0
    error: str | None = None

    def to_json(self) -> dict[str, Any]:
        record = {
            "kind": "verify",
            "family": self.family,
            "spec": self.spec,
            "order": self.order,
            "edges": self.edges,
            "pass": self.passed,
            "negative_stored": self.negative_stored,
            "residual_terms": self.residual_terms,
        }
        if self.error is not None:
            record["error"] = self.error
        return record


@dataclass(frozen=True)
class PositivityRow:
    """e-positivity of one scanned graph."""

    family: str
    spec: str
    order: int
    positive: bool
    witness: tuple[Partition, Fraction] | None = None
    min_normalised: Fraction = Fraction(0)

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "positivity",
            "family": self.family,
            "spec": self.spec,
            "order": self.order,
            "positive": self.positive,
            "witness": None
            if self.witness is None
            else {"partition": list(self.witness[0].parts), "coeff": str(self.witness[1])},
            "min_normalised": str(self.min_normalised),
        }


@dataclass(frozen=True)
class Summary:
    kind: str
    total: int
    failures: int
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict[str, Any]:
        return {"kind": "summary", "report": self.kind, "total": self.total, "failures": self.failures, **self.extra}

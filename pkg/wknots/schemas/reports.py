# wknots/schemas/reports.py
from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from wknots.arrows import SpaceKind, UnsupportedSpaceError
from wknots.expansions import AlexanderCheckReport, RelationReport
from wknots.kv import KVReport


class DimensionRowModel(BaseModel):
    """One row of the dimension table: dim G_m for m = 0..max_degree."""

    model_config = ConfigDict(extra="forbid")

    space: str = Field(..., description="v, sv, rv, w, sw or rw.")
    skeleton: str
    dims: List[int] = Field(default_factory=list, description="dims[m] for m = 0, 1, ...")
    primitives: Optional[List[int]] = Field(default=None, description="Primitive dimensions for m = 1, 2, ...")
    capped_at: Optional[int] = Field(
        default=None,
        description="First degree left out because it exceeds the enumeration cap.",
    )

    @field_validator("space")
    @classmethod
    def validate_space(cls, v: str) -> str:
        try:
            return SpaceKind.parse(v).value
        except UnsupportedSpaceError as exc:
            raise ValueError(str(exc)) from exc

    def text(self) -> str:
        row = " ".join(str(d) for d in self.dims)
        if self.capped_at is not None:
            row += f" [cap reached at degree {self.capped_at}]"
        if self.primitives is not None:
            row += "\nprimitives: " + " ".join(str(p) for p in self.primitives)
        return row


# -------------------------------
# Alexander check
# -------------------------------


class AlexanderPartModel(BaseModel):
    name: str
    passed: bool
    first_failing_degree: Optional[int] = None
    expected: Dict[str, str] = Field(default_factory=dict)
    actual: Dict[str, str] = Field(default_factory=dict)


class AlexanderCheckModel(BaseModel):
    degree: int
    polynomial: str
    self_linking: int
    passed: bool
    parts: List[AlexanderPartModel]

    @classmethod
    def from_report(cls, r: AlexanderCheckReport) -> "AlexanderCheckModel":
        return cls(
            degree=r.degree,
            polynomial=r.polynomial,
            self_linking=r.self_linking,
            passed=r.passed,
            parts=[AlexanderPartModel(**vars(p)) for p in r.parts],
        )


# -------------------------------
# KV report
# -------------------------------


class KVCheckModel(BaseModel):
    equation: str
    degree: int
    passed: bool
    residual: Dict[str, str] = Field(default_factory=dict, description="Nonzero coefficients of the residual.")


class KVReportModel(BaseModel):
    degree: int
    passed: bool
    checks: List[KVCheckModel]

    @classmethod
    def from_report(cls, r: KVReport) -> "KVReportModel":
        checks = [
            KVCheckModel(equation=c.equation, degree=c.degree, passed=c.passed, residual=_flatten(c.residual))
            for c in r.checks
        ]
        return cls(degree=r.degree, passed=r.passed, checks=checks)


def _flatten(residual: Dict[str, object]) -> Dict[str, str]:
    """tder residuals are nested per component; join the keys."""
    out: Dict[str, str] = {}
    for k, v in residual.items():
        if isinstance(v, dict):
            for k2, v2 in v.items():
                out[f"{k}: {k2}"] = str(v2)
        else:
            out[k] = str(v)
    return out


# -------------------------------
# Braid relations
# -------------------------------


class RelationCheckModel(BaseModel):
    name: str
    is_relation: bool
    holds: bool
    as_expected: bool
    witness: Optional[str] = None


class BraidRelationReportModel(BaseModel):
    kind: str = Field(..., description="'z-log' or 'action'.")
    n_strands: int = Field(..., ge=2)
    degree: Optional[int] = None
    passed: bool
    checks: List[RelationCheckModel]

    @classmethod
    def from_report(cls, r: RelationReport) -> "BraidRelationReportModel":
        checks = [
            RelationCheckModel(
                name=c.name, is_relation=c.is_relation, holds=c.holds, as_expected=c.as_expected, witness=c.witness
            )
            for c in r.checks
        ]
        return cls(kind=r.kind, n_strands=r.n_strands, degree=r.degree, passed=r.passed, checks=checks)

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from lipaths._shared.models import get_orientations


class CustomBaseModel(BaseModel):
    model_config: Dict[str, Any] = {
        "arbitrary_types_allowed": True,
        "from_attributes": True,
    }


class StarSchema(CustomBaseModel):
    center: int = Field(..., ge=1)
    leaves: List[int] = Field(..., min_length=1)
    orientation: str

    @field_validator("orientation")
    @classmethod
    def validate_orientation(cls, v: str) -> str:
        if v not in get_orientations():
            raise ValueError(f"orientation '{v}' is not valid. Valid orientations: {', '.join(get_orientations())}")
        return v


class WitnessSchema(CustomBaseModel):
    stars: List[StarSchema]
    order: List[int]

    @model_validator(mode="after")
    def validate_order(self):
        if sorted(self.order) != list(range(len(self.stars))):
            raise ValueError(f"order must be a permutation of 0..{len(self.stars) - 1}")
        return self


class CertificateSchema(CustomBaseModel):
    kind: Literal["P1", "P2", "P3"]
    vertices: Optional[List[int]] = None
    positions: Optional[List[int]] = None
    anchored: Optional[str] = None
    gap: Optional[int] = None
    valid: bool

    @model_validator(mode="after")
    def validate_payload(self):
        if self.kind == "P3" and self.positions is None:
            raise ValueError("P3 certificates carry positions")
        if self.kind in ("P1", "P2") and self.vertices is None:
            raise ValueError(f"{self.kind} certificates carry vertices")
        return self


class BoundsRow(CustomBaseModel):
    r: int
    t: int
    p: str
    ell_factor: int
    log2_ell: str
    inequality: str
    verdict: Literal["pass", "fail", "inconclusive", "rejected"]
    margin: str
    precision: int

    def to_tsv(self) -> str:
        return "\t".join(
            str(x) for x in (
                self.r, self.t, self.p, self.ell_factor, self.log2_ell,
                self.inequality, self.verdict, self.margin, self.precision,
            )
        )

    @staticmethod
    def header() -> str:
        return "r\tt\tp\tell_factor\tlog2_ell\tinequality\tverdict\tmargin\tprecision"


class CheckResult(CustomBaseModel):
    name: str
    passed: bool
    detail: str = ""

    def to_line(self) -> str:
        return f"{self.name}\t{'ok' if self.passed else 'FAIL'}\t{self.detail}"


class LowerboundReport(CustomBaseModel):
    ell: int
    vertices: int
    edges: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class OracleResult(CustomBaseModel):
    length: int
    capped: bool
    witness: List[int]

    def to_text(self) -> str:
        length = f">={self.length}" if self.capped else str(self.length)
        return f"{length}\n{' '.join(str(v) for v in self.witness)}"

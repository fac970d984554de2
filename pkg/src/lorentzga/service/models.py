"""Request and response schemas shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .. import documents
from ..aps import ROTOR_TOL
from ..bridge import EVEN_TOL


class MvDoc(BaseModel):
    """A multivector as a blade-name coefficient map; omitted blades are zero."""

    model_config = ConfigDict(extra="forbid")

    algebra: Literal["aps", "sta"]
    coeffs: dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _known_blades(self) -> "MvDoc":
        documents.validate_coeffs(self.algebra, self.coeffs)
        return self

    def to_mv(self):
        return documents.decode(self.algebra, self.coeffs)

    @classmethod
    def from_mv(cls, mv) -> "MvDoc":
        return cls(algebra=documents.algebra_of(mv), coeffs=documents.encode(mv))


class ProductRequest(BaseModel):
    lhs: MvDoc
    rhs: MvDoc


class ProductResponse(BaseModel):
    result: MvDoc


class ConjRequest(BaseModel):
    subject: MvDoc
    kind: Literal["dagger", "bar", "reverse"]
    observer: MvDoc | None = None
    tol: float = ROTOR_TOL


class ConjResponse(BaseModel):
    result: MvDoc
    observer_defect: float | None = None


class SplitRequest(BaseModel):
    subject: MvDoc
    kind: Literal["hermitian", "bar", "spacetime"]
    observer: MvDoc | None = None
    tol: float = ROTOR_TOL


class SplitResponse(BaseModel):
    kind: str
    parts: dict[str, MvDoc]
    time: float | None = None
    observer_defect: float | None = None


class BoostRequest(BaseModel):
    velocity: tuple[float, float, float] | None = None
    rapidity: float | None = None
    direction: tuple[float, float, float] | None = None

    @model_validator(mode="after")
    def _one_spec(self) -> "BoostRequest":
        if self.velocity is not None:
            if self.rapidity is not None or self.direction is not None:
                raise ValueError("give either velocity or rapidity+direction, not both")
        elif self.rapidity is None or self.direction is None:
            raise ValueError("need velocity, or rapidity together with direction")
        return self


class BoostResponse(BaseModel):
    rotor: MvDoc
    gamma: float
    speed: float
    rapidity: float


class RotorExpRequest(BaseModel):
    generator: MvDoc
    tol: float = ROTOR_TOL


class RotorExpResponse(BaseModel):
    rotor: MvDoc
    unimodularity_defect: float


class FactorRequest(BaseModel):
    rotor: MvDoc
    tol: float = ROTOR_TOL


class FactorResponse(BaseModel):
    boost: MvDoc
    rotation: MvDoc
    unimodularity_defect: float


class TransformRequest(BaseModel):
    subject: MvDoc
    rotor: MvDoc
    mode: Literal["passive", "active", "both"]
    kind: Literal["paravector", "biparavector"]
    tol: float = ROTOR_TOL


class TransformResponse(BaseModel):
    result: MvDoc
    mode: str
    unimodularity_defect: float


class MapRequest(BaseModel):
    subject: MvDoc
    direction: Literal["aps-to-sta", "sta-to-aps"]
    observer: MvDoc | None = None
    tol: float = EVEN_TOL


class MapResponse(BaseModel):
    result: MvDoc
    direction: str
    observer_defect: float | None = None


class FieldSplitRequest(BaseModel):
    subject: MvDoc


class FieldSplitResponse(BaseModel):
    electric: tuple[float, float, float]
    magnetic: tuple[float, float, float]


class HealthResponse(BaseModel):
    status: str
    service: str
    version: str


class ErrorResponse(BaseModel):
    error: str
    kind: Literal["domain", "malformed"]

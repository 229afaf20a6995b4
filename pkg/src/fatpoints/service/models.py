"""Request and response schemas for the service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class FieldSpec(BaseModel):
    kind: Literal["Q", "Fp", "Fq"]
    p: Optional[int] = None
    k: Optional[int] = None

    @model_validator(mode="after")
    def _check(self):
        if self.kind in ("Fp", "Fq") and not self.p:
            raise ValueError("finite fields need the characteristic p")
        if self.kind == "Fq" and (self.k or 0) < 2:
            raise ValueError("Fq needs an extension degree k >= 2")
        return self


class PointsPayload(BaseModel):
    field: FieldSpec
    points: list[list[str]]


class TypeSpec(BaseModel):
    """A scheme's configuration type, given exactly one way."""

    r: int
    mode: Literal["eight_points", "conic"] = "eight_points"
    index: Optional[int] = None
    notation: Optional[str] = None
    classes: Optional[list[list[int]]] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        given = [x is not None for x in (self.index, self.notation, self.classes)]
        if sum(given) != 1:
            raise ValueError("give exactly one of index, notation, classes")
        return self


class TypeRecord(BaseModel):
    r: int
    mode: str
    index: Optional[int] = None
    notation: Optional[str] = None
    classes: list[list[int]]
    canonical_key: str


class TypeListResponse(BaseModel):
    r: int
    count: int
    types: list[TypeRecord]


class CanonRequest(BaseModel):
    type: TypeSpec


class CanonResponse(BaseModel):
    canonical_key: str
    matched_index: Optional[int] = None
    notation: Optional[str] = None


class HilbertRequest(BaseModel):
    type: TypeSpec
    mults: list[int]
    betti: bool = False


class HilbertResponse(BaseModel):
    r: int
    index: Optional[int] = None
    mults: list[int]
    degree: int
    saturation: int
    values: list[int]
    delta: list[int]
    betti_f0: Optional[dict[int, int]] = None
    betti_f1: Optional[dict[int, int]] = None


class ZariskiRequest(BaseModel):
    type: TypeSpec
    class_vector: list[int] = Field(..., description="[d, m1, ..., mr]")


class ZariskiResponse(BaseModel):
    input: list[int]
    effective: bool
    h0: int
    nef_part: Optional[list[int]] = None
    fixed_part: list[tuple[list[int], int]] = []
    negative_classes: int


class ConicRequest(BaseModel):
    case: Literal["I", "II", "III", "IV"]
    r: int
    a: int = 0
    b: int = 0
    eps: int = 0
    m: int = 1
    compare_closed_form: bool = False


class ConicResponse(BaseModel):
    case: dict
    classes: list[list[int]]
    values: list[int]
    delta: list[int]
    degree: int
    closed_form: Optional[list[int]] = None
    agrees: Optional[bool] = None


class ConicTypesResponse(BaseModel):
    r: int
    cases: list[dict]


class IdentifyResponse(BaseModel):
    r: int
    index: int
    notation: str
    permutation: list[int]
    classes: list[list[int]]


class OracleRequest(BaseModel):
    points: PointsPayload
    mults: list[int]
    degree: Optional[int] = None


class OracleResponse(BaseModel):
    dimension: Optional[int] = None
    degree: Optional[int] = None
    values: Optional[list[int]] = None
    scheme_degree: Optional[int] = None


class RepresentResponse(BaseModel):
    r: int
    index: int
    verdict: str
    p: Optional[int] = None
    source: str
    invariant_factors: Optional[list[int]] = None
    free_rank: Optional[int] = None
    torsion_error: Optional[str] = None


class ExtremalRequest(BaseModel):
    r: int
    hz: list[int]
    m: int
    mode: Literal["eight_points", "conic"] = "eight_points"


class ExtremalResponse(BaseModel):
    target: list[int]
    m: int
    matching_types: list[int]
    h_max: Optional[list[int]] = None
    max_types: list[int] = []
    h_min: Optional[list[int]] = None
    min_types: list[int] = []
    labels: Optional[dict[int, str]] = None


class UniformRequest(BaseModel):
    r: int
    max_mult: int


class UniformResponse(BaseModel):
    r: int
    max_mult: int
    groups: list[list[int]]
    separating_bound: int


class TableResponse(BaseModel):
    table: int
    text: str
    matches_golden: bool


class CatalogResponse(BaseModel):
    r: int
    mode: str
    count: int
    classes: list[list[int]]

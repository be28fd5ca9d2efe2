"""Pydantic request/response models for the HTTP service.

These are the wire schema: the CLI builds the same request models and the
response field order fixes the JSON key order, so output bytes do not depend
on which transport carried the request.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..serialize import SCHEMA_VERSION

Matrix = list[list[float]]


# numeric domain constraints (mode count, overflow guard, step counts) are
# owned by the core package so every transport reports the same diagnostics


class SqueezeRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(description="mode count")
    lam: float = Field(alias="lambda", description="squeezing parameter")


class WignerRequest(SqueezeRequest):
    axis_a: str = "q1"
    axis_b: str = "q2"
    min_a: float = -3.0
    max_a: float = 3.0
    steps_a: int = 41
    min_b: float = -3.0
    max_b: float = 3.0
    steps_b: int = 41
    fixed: dict[str, float] = Field(default_factory=dict)
    format: Literal["json", "csv"] = "json"


class IdentitiesRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int
    l_max: int = 12
    lam: Optional[float] = Field(default=None, alias="lambda")


class VerifyRequest(SqueezeRequest):
    oracle: bool = False
    cutoff: Optional[int] = None
    tol: Optional[float] = None


class MatricesResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = SCHEMA_VERSION
    n: int
    lam: float = Field(alias="lambda")
    position_transform: Matrix
    momentum_transform: Matrix
    gram: Matrix
    gram_inverse: Matrix
    denominator: Matrix
    denominator_inverse: Matrix
    denominator_det: float
    prefactor: float
    creation: Matrix
    cross: Matrix
    annihilation: Matrix


class VariancesResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = SCHEMA_VERSION
    n: int
    lam: float = Field(alias="lambda")
    var_x1: float
    var_x2: float
    product: float
    reference_var_x1: float
    reference_var_x2: float


class StateResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = SCHEMA_VERSION
    n: int
    lam: float = Field(alias="lambda")
    prefactor: float
    pair_coefficient: Matrix


class WignerResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = SCHEMA_VERSION
    n: int
    lam: float = Field(alias="lambda")
    axis_a: str
    axis_b: str
    min_a: float
    max_a: float
    steps_a: int
    min_b: float
    max_b: float
    steps_b: int
    fixed: dict[str, float]
    origin_value: float
    rows: list[tuple[float, float, float]]


class IdentityRow(BaseModel):
    power: int
    entry_sum: int
    reference: int
    exact: bool


class GramSums(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(alias="lambda")
    entry_sum: float
    entry_sum_reference: float
    inverse_entry_sum: float
    inverse_entry_sum_reference: float


class IdentitiesResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    rows: list[IdentityRow]
    gram_sums: Optional[GramSums] = None


class CheckReport(BaseModel):
    name: str
    residual: float
    tolerance: float
    passed: bool


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = SCHEMA_VERSION
    n: int
    lam: float = Field(alias="lambda")
    oracle: bool
    cutoff: Optional[int]
    checks: list[CheckReport]
    passed: bool


class HealthResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    status: str = "ok"

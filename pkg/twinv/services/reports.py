# -*- coding: utf-8 -*-
"""
Pydantic models for every JSON document the CLI prints and the HTTP API
returns. ``Model.model_json_schema()`` is the published schema.
"""
from typing import Optional

from pydantic import BaseModel, Field


class InvolutionEntry(BaseModel):
    involution: str = Field(..., description="One-line notation, comma separated")
    rho: int = Field(..., description="Length of every reduced I*-expression")
    length: int = Field(..., description="Coxeter length (number of inversions)")
    canonical: str = Field(..., description="Lexicographically smallest reduced I*-expression")


class InvolutionList(BaseModel):
    n: int
    count: int
    involutions: list[InvolutionEntry]


class RhoReport(BaseModel):
    n: int
    involution: str
    rho: int
    canonical: str


class ExpressionsReport(BaseModel):
    n: int
    involution: str
    rho: int
    count: int
    expressions: list[str] = Field(..., description="Every reduced I*-expression, lexicographic order")


class BraidEdge(BaseModel):
    source: str
    target: str
    kind: str = Field(..., description="commutation, long-braid or tail-swap")


class BraidReport(BaseModel):
    n: int
    involution: str
    vertices: list[str]
    edges: list[BraidEdge]
    vertex_count: int
    edge_count: int
    connected: bool
    diameter: int


class TrichotomyCount(BaseModel):
    pattern: str = Field(..., description="adjacent-triple or commuting-pair")
    case: str
    count: int


class BraidSweepReport(BaseModel):
    n: int
    involution_count: int
    all_connected: bool
    disconnected: list[str] = Field(default_factory=list, description="Involutions whose braid graph is not connected")
    max_vertices: int
    max_diameter: int
    total_edges: int
    trichotomy: list[TrichotomyCount] = Field(default_factory=list)


class PsigmaRow(BaseModel):
    y: str
    w: str
    poly_in_u: str


class PsigmaTable(BaseModel):
    n: int
    rows: list[PsigmaRow]


class ThetaStepReport(BaseModel):
    position: int = Field(..., description="1-based position in the word")
    letter: int
    kind: str


class ThetaReport(BaseModel):
    n: int
    word: str
    involution: str
    steps: list[ThetaStepReport]
    denominator_power: int = Field(..., description="d in numerator / (u+1)^d, in lowest terms")
    numerator: dict = Field(..., description="Hecke element {n, terms: [{perm, coeff}]}, coefficients in v")
    text: str


class VerifyReport(BaseModel):
    n: int
    theta_well_defined: bool
    homomorphism_ok: bool
    case3_ok: bool
    dim_image: int
    involution_count: int
    eta_rank: int = Field(..., description="Specialized rank of the eta images in the T-basis")
    injective: bool
    conjecture_certified: bool
    prime: int
    point: int
    exact_dim_image: Optional[int] = Field(default=None, description="Fraction-free rank, only with --exact")
    counterexample: Optional[str] = None
    elapsed_ms: int


class TableauPair(BaseModel):
    permutation: str
    shape: list[int]
    p: list[list[int]]
    q: list[list[int]]


class CountIdentity(BaseModel):
    lhs: int = Field(..., description="Sum over partitions of the number of standard tableaux")
    rhs: int = Field(..., description="Number of involutions")
    equal: bool


class RskReport(BaseModel):
    n: int
    identity: CountIdentity
    shapes: dict[str, int] = Field(..., description="Standard tableau count per partition")
    pairs: list[TableauPair] = Field(default_factory=list)


class LimitsReport(BaseModel):
    environment: str
    rank_caps: dict[str, int]
    prime: int
    seed: int

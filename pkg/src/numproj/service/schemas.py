"""Request and response models for the HTTP API."""
from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class CoefficientResponse(BaseModel):
    n: int
    k: int
    m: int
    value: int


class IdentityCheckModel(BaseModel):
    name: str
    passed: bool
    counterexample: dict[str, int] | None = None


class IdentityReportResponse(BaseModel):
    n: int
    passed: bool
    text: str
    checks: list[IdentityCheckModel]


class ProjectRequest(BaseModel):
    hamiltonian: str = Field(description="operator document (text, JSON, or CSV)")
    particles: int
    tolerance: float = 1e-12
    fmt: str = "text"
    threads: int | None = Field(default=None, ge=1)


class ProjectResponse(BaseModel):
    qubits: int
    particles: int
    term_count: int
    document: str


class PartitionRequest(BaseModel):
    hamiltonian: str = Field(description="operator document (text, JSON, or CSV)")
    relation: str = "general"
    order: str = "magnitude"


class PartitionResponse(BaseModel):
    relation: str
    policy: str
    qubits: int
    term_count: int
    clique_count: int
    cliques: list[list[str]]
    rendered: str


class SuiteModel(BaseModel):
    name: str
    cases: int
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    max_n: int
    passed: bool
    text: str
    suites: list[SuiteModel]

"""FastAPI application wrapping the core library.

Documents (tables, projectors, projected operators) are rendered
server-side so every client, including the bundled CLI, emits identical
bytes.  Domain and parse failures map to 400, resource-guard refusals
to 413.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .. import __version__
from ..cliques import partition as partition_terms
from ..errors import DomainError, ResourceLimitError
from ..hamio import emit, parse, to_pauli_sum
from ..kravchuk import (
    coefficient,
    format_identity_report,
    format_table,
    table,
    verify_identities,
)
from ..oracle import format_report, run_verification
from ..pauli import format_key
from ..projector import ProjectorSpec, build_projector, project_operator
from .schemas import (
    CoefficientResponse,
    HealthResponse,
    IdentityCheckModel,
    IdentityReportResponse,
    PartitionRequest,
    PartitionResponse,
    ProjectRequest,
    ProjectResponse,
    SuiteModel,
    VerifyResponse,
)

_MEDIA_TYPES = {
    "text": "text/plain; charset=utf-8",
    "csv": "text/csv; charset=utf-8",
    "json": "application/json",
}


def _document_response(rendered: str, fmt: str) -> Response:
    return Response(content=rendered, media_type=_MEDIA_TYPES.get(fmt, "text/plain"))


def create_app() -> FastAPI:
    app = FastAPI(title="numproj", version=__version__)

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(ResourceLimitError)
    async def _resource_error(
        request: Request, exc: ResourceLimitError
    ) -> JSONResponse:
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.get("/coefficient", response_model=CoefficientResponse)
    async def get_coefficient(n: int, k: int, m: int) -> CoefficientResponse:
        return CoefficientResponse(n=n, k=k, m=m, value=coefficient(n, k, m))

    @app.get("/table/{n}")
    async def get_table(n: int, fmt: str = "text") -> Response:
        return _document_response(format_table(table(n), fmt), fmt)

    @app.get("/identities/{n}", response_model=IdentityReportResponse)
    async def get_identities(n: int) -> IdentityReportResponse:
        report = verify_identities(n)
        return IdentityReportResponse(
            n=report.n,
            passed=report.passed,
            text=format_identity_report(report),
            checks=[
                IdentityCheckModel(
                    name=c.name, passed=c.passed, counterexample=c.counterexample
                )
                for c in report.checks
            ],
        )

    @app.get("/projector")
    async def get_projector(n: int, k: int, fmt: str = "text") -> Response:
        operator = build_projector(ProjectorSpec(n, k))
        return _document_response(emit(operator, fmt), fmt)

    @app.post("/project", response_model=ProjectResponse)
    async def post_project(req: ProjectRequest) -> ProjectResponse:
        doc = parse(req.hamiltonian)
        operator = to_pauli_sum(doc)
        spec = ProjectorSpec(doc.n, req.particles)
        projected = project_operator(
            spec, operator, tol=req.tolerance, max_workers=req.threads
        )
        return ProjectResponse(
            qubits=doc.n,
            particles=req.particles,
            term_count=len(projected),
            document=emit(projected, req.fmt),
        )

    @app.post("/partition", response_model=PartitionResponse)
    async def post_partition(req: PartitionRequest) -> PartitionResponse:
        doc = parse(req.hamiltonian)
        operator = to_pauli_sum(doc)
        result = partition_terms(operator, relation=req.relation, policy=req.order)
        cliques = [
            [format_key(operator.n, key) for key in clique]
            for clique in result.cliques
        ]
        payload = {
            "relation": result.relation,
            "policy": result.policy,
            "qubits": operator.n,
            "term_count": result.source_term_count,
            "clique_count": result.clique_count,
            "cliques": cliques,
        }
        return PartitionResponse(
            **payload, rendered=json.dumps(payload, indent=2) + "\n"
        )

    @app.get("/verify", response_model=VerifyResponse)
    async def get_verify(max_n: int = 4) -> VerifyResponse:
        report = run_verification(max_n)
        return VerifyResponse(
            max_n=report.max_n,
            passed=report.passed,
            text=format_report(report),
            suites=[
                SuiteModel(
                    name=s.name, cases=s.cases, passed=s.passed, detail=s.detail
                )
                for s in report.suites
            ],
        )

    return app


app = create_app()

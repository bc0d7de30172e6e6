"""Particle-number projectors in the Pauli basis.

Exact Kravchuk coefficient tables, symplectic Pauli algebra, fixed-weight
subspace projection with factorized term rules, commuting-clique
partitioning, and a plain-text operator interchange format.  A FastAPI
service and a thin CLI sit on top; see ``numproj.service`` and
``numproj.cli``.
"""
from .cliques import CliquePartition, CliqueValidation, partition, validate
from .errors import (
    DimensionMismatchError,
    DomainError,
    HamiltonianParseError,
    PauliParseError,
    ResourceLimitError,
)
from .hamio import HamiltonianDocument, emit, from_pauli_sum, to_pauli_sum
from .hamio import parse as parse_document
from .kravchuk import (
    IdentityCheck,
    IdentityReport,
    KravchukTable,
    coefficient,
    format_identity_report,
    format_table,
    generating_row,
    table,
    verify_identities,
)
from .oracle import (
    SuiteResult,
    VerificationReport,
    format_report,
    run_verification,
)
from .pauli import (
    PauliString,
    PauliSum,
    commutes,
    format_key,
    format_string,
    multiply,
    parse_string,
    qubitwise_commutes,
    to_dense,
)
from .projector import (
    ProjectorSpec,
    build_number_operator,
    build_projector,
    project_operator,
    project_string,
)

__version__ = "0.1.0"

__all__ = [
    "CliquePartition",
    "CliqueValidation",
    "DimensionMismatchError",
    "DomainError",
    "HamiltonianDocument",
    "HamiltonianParseError",
    "IdentityCheck",
    "IdentityReport",
    "KravchukTable",
    "PauliParseError",
    "PauliString",
    "PauliSum",
    "ProjectorSpec",
    "ResourceLimitError",
    "SuiteResult",
    "VerificationReport",
    "build_number_operator",
    "build_projector",
    "coefficient",
    "commutes",
    "emit",
    "format_identity_report",
    "format_key",
    "format_report",
    "format_string",
    "format_table",
    "from_pauli_sum",
    "generating_row",
    "multiply",
    "parse_document",
    "parse_string",
    "partition",
    "project_operator",
    "project_string",
    "qubitwise_commutes",
    "run_verification",
    "table",
    "to_dense",
    "to_pauli_sum",
    "validate",
    "verify_identities",
]

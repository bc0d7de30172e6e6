"""Dense-matrix verification suites.

Every fast path in this package has a deliberately dumb counterpart built
from Kronecker products and basis enumeration.  The suites here run both
and compare: string products against matrix products, commutation flags
against commutators, factorized projection against explicit conjugation,
and so on.  All randomness is seeded, so a given ``max_n`` always checks
the same cases.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .kravchuk import coefficient, generating_row, table
from .pauli import (
    PauliString,
    commutes,
    multiply,
    qubitwise_commutes,
    to_dense,
)
from .projector import (
    ProjectorSpec,
    build_number_operator,
    build_projector,
    project_string,
)

MAX_VERIFY_QUBITS = 8
DENSE_TOL = 1e-13


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    max_n: int
    suites: tuple[SuiteResult, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


def _rng(suite: str, max_n: int) -> random.Random:
    return random.Random(f"{suite}:{max_n}")


def _random_string(rng: random.Random, n: int) -> PauliString:
    return PauliString(
        n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4)
    )


def _all_strings(n: int):
    for x in range(1 << n):
        for z in range(1 << n):
            yield PauliString(n, x, z)


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def _suite_coefficients(max_n: int) -> SuiteResult:
    # three-way cross-check: recursion table vs closed form vs generating fn
    cases = 0
    for n in range(1, max_n + 1):
        t = table(n)
        rows = {m: generating_row(n, m) for m in range(n + 1)}
        for k in range(n + 1):
            for m in range(n + 1):
                cases += 1
                closed = coefficient(n, k, m)
                if t.entry(k, m) != closed or rows[m][k] != closed:
                    return SuiteResult(
                        "coefficients",
                        cases,
                        False,
                        f"disagreement at C({n},{k},{m})",
                    )
    return SuiteResult("coefficients", cases, True)


def _suite_string_products(max_n: int) -> SuiteResult:
    rng = _rng("string_products", max_n)
    cases = 0
    for n in range(1, max_n + 1):
        if n <= 2:
            pairs = [(a, b) for a in _all_strings(n) for b in _all_strings(n)]
        else:
            pairs = [
                (_random_string(rng, n), _random_string(rng, n))
                for _ in range(100)
            ]
        for a, b in pairs:
            cases += 1
            fast = to_dense(multiply(a, b))
            slow = to_dense(a) @ to_dense(b)
            # entries are exact complex units, so compare exactly
            if not np.array_equal(fast, slow):
                return SuiteResult(
                    "string_products", cases, False, f"product {a} * {b}"
                )
    return SuiteResult("string_products", cases, True)


def _suite_commutation(max_n: int) -> SuiteResult:
    rng = _rng("commutation", max_n)
    cases = 0
    for n in range(1, max_n + 1):
        if n <= 2:
            pairs = [(a, b) for a in _all_strings(n) for b in _all_strings(n)]
        else:
            pairs = [
                (_random_string(rng, n), _random_string(rng, n))
                for _ in range(100)
            ]
        for a, b in pairs:
            cases += 1
            da, db = to_dense(a), to_dense(b)
            dense_commutes = np.array_equal(da @ db, db @ da)
            if commutes(a, b) != dense_commutes:
                return SuiteResult(
                    "commutation", cases, False, f"pair {a}, {b}"
                )
            if qubitwise_commutes(a, b) and not dense_commutes:
                return SuiteResult(
                    "commutation",
                    cases,
                    False,
                    f"qubitwise pair {a}, {b} fails to commute",
                )
    return SuiteResult("commutation", cases, True)


def _popcount_diagonal(n: int, k: int) -> np.ndarray:
    diag = np.array(
        [1.0 if b.bit_count() == k else 0.0 for b in range(1 << n)],
        dtype=complex,
    )
    return np.diag(diag)


def _suite_projector_diagonal(max_n: int) -> SuiteResult:
    cases = 0
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            cases += 1
            dense = to_dense(build_projector(ProjectorSpec(n, k)))
            # dyadic coefficients with a common 2^-n denominator sum exactly
            if not np.array_equal(dense, _popcount_diagonal(n, k)):
                return SuiteResult(
                    "projector_diagonal", cases, False, f"P({n},{k})"
                )
    return SuiteResult("projector_diagonal", cases, True)


def _suite_projector_laws(max_n: int) -> SuiteResult:
    cases = 0
    for n in range(1, max_n + 1):
        dense = [
            to_dense(build_projector(ProjectorSpec(n, k)))
            for k in range(n + 1)
        ]
        for k, p in enumerate(dense):
            cases += 1
            if _max_abs(p @ p - p) > DENSE_TOL:
                return SuiteResult(
                    "projector_laws", cases, False, f"P({n},{k}) not idempotent"
                )
        for k in range(n + 1):
            for j in range(k + 1, n + 1):
                cases += 1
                if _max_abs(dense[k] @ dense[j]) > DENSE_TOL:
                    return SuiteResult(
                        "projector_laws",
                        cases,
                        False,
                        f"P({n},{k})·P({n},{j}) not zero",
                    )
        cases += 1
        if _max_abs(sum(dense) - np.eye(1 << n)) > DENSE_TOL:
            return SuiteResult(
                "projector_laws", cases, False, f"sum over k at n={n} not identity"
            )
    return SuiteResult("projector_laws", cases, True)


def _suite_projection_rule(max_n: int) -> SuiteResult:
    rng = _rng("projection_rule", max_n)
    cases = 0
    for n in range(1, max_n + 1):
        dense_p = {
            k: to_dense(build_projector(ProjectorSpec(n, k)))
            for k in range(n + 1)
        }
        if n <= 3:
            work = [(s, k) for s in _all_strings(n) for k in range(n + 1)]
        else:
            work = [
                (_random_string(rng, n), rng.randrange(n + 1))
                for _ in range(50)
            ]
        for s, k in work:
            cases += 1
            fast = to_dense(project_string(ProjectorSpec(n, k), s))
            slow = dense_p[k] @ to_dense(s) @ dense_p[k]
            if _max_abs(fast - slow) > DENSE_TOL:
                return SuiteResult(
                    "projection_rule",
                    cases,
                    False,
                    f"conjugation of {s} by P({n},{k})",
                )
            if s.x_weight % 2 == 1 and len(project_string(ProjectorSpec(n, k), s)):
                return SuiteResult(
                    "projection_rule",
                    cases,
                    False,
                    f"odd-X string {s} survived P({n},{k})",
                )
    return SuiteResult("projection_rule", cases, True)


def _suite_number_operator(max_n: int) -> SuiteResult:
    cases = 0
    for n in range(1, max_n + 1):
        cases += 1
        dense = to_dense(build_number_operator(n))
        expected = np.diag(
            np.array([float(b.bit_count()) for b in range(1 << n)], dtype=complex)
        )
        if not np.array_equal(dense, expected):
            return SuiteResult(
                "number_operator", cases, False, f"diagonal wrong at n={n}"
            )
        cases += 1
        summed = sum(
            k * to_dense(build_projector(ProjectorSpec(n, k)))
            for k in range(1, n + 1)
        )
        if _max_abs(dense - summed) > DENSE_TOL:
            return SuiteResult(
                "number_operator",
                cases,
                False,
                f"sum of k-weighted projectors wrong at n={n}",
            )
    return SuiteResult("number_operator", cases, True)


_SUITES = (
    _suite_coefficients,
    _suite_string_products,
    _suite_commutation,
    _suite_projector_diagonal,
    _suite_projector_laws,
    _suite_projection_rule,
    _suite_number_operator,
)


def run_verification(max_n: int = 4) -> VerificationReport:
    """Run every suite up to ``max_n`` qubits and collect the results.

    Dense conjugation scales as 8^n, so the ceiling is deliberately low.
    """
    if not isinstance(max_n, int) or isinstance(max_n, bool):
        raise DomainError("max_n must be an integer")
    if not 1 <= max_n <= MAX_VERIFY_QUBITS:
        raise DomainError(
            f"max_n must be between 1 and {MAX_VERIFY_QUBITS}, got {max_n}"
        )
    return VerificationReport(
        max_n=max_n, suites=tuple(suite(max_n) for suite in _SUITES)
    )


def format_report(report: VerificationReport) -> str:
    lines = [f"dense-oracle verification up to {report.max_n} qubits"]
    width = max(len(s.name) for s in report.suites)
    for s in report.suites:
        status = "PASS" if s.passed else "FAIL"
        line = f"  [{status}] {s.name:<{width}} {s.cases:>6} cases"
        if s.detail:
            line += f"  ({s.detail})"
        lines.append(line)
    total = sum(s.cases for s in report.suites)
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(
        f"overall: {verdict} ({len(report.suites)} suites, {total} cases)"
    )
    return "\n".join(lines) + "\n"

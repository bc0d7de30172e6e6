"""Exact integer Kravchuk (generalised binomial) coefficients.

The coefficient ``C(n, k, m)`` is the value of the k-th Kravchuk polynomial
with parameter ``n`` at the integer point ``m``; equivalently, position ``k``
in the expansion of ``(1 - x)^m (1 + x)^(n - m)``.  Arranged as an
(n+1) x (n+1) table (rows ``k``, columns ``m``) the ``m = 0`` column is a row
of Pascal's triangle, and the whole family stacks into Pascal's pyramid.

These integers are exactly the unnormalised weights of the Pauli-Z expansion
of the particle-number projector: every Z-string of weight ``m`` appears in
the projector onto the k-particle subspace with coefficient
``C(n, k, m) / 2^n``.  All arithmetic here is exact integer arithmetic.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

MAX_QUBITS = 64

TABLE_FORMATS = ("text", "csv", "json")


def _binom(a: int, b: int) -> int:
    """Binomial coefficient with the convention C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check_args(n: int, k: int | None = None, m: int | None = None) -> None:
    if not 1 <= n <= MAX_QUBITS:
        raise DomainError(f"n must be in [1, {MAX_QUBITS}], got n={n}")
    if k is not None and not 0 <= k <= n:
        raise DomainError(f"k must be in [0, n={n}], got k={k}")
    if m is not None and not 0 <= m <= n:
        raise DomainError(f"m must be in [0, n={n}], got m={m}")


def coefficient(n: int, k: int, m: int) -> int:
    """Closed-form C(n, k, m) = sum_l (-1)^l binom(n-m, k-l) binom(m, l)."""
    _check_args(n, k, m)
    return sum((-1) ** l * _binom(n - m, k - l) * _binom(m, l) for l in range(m + 1))


@dataclass(frozen=True)
class KravchukTable:
    """Full (n+1) x (n+1) coefficient table; ``entries[k][m] == C(n, k, m)``."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, k: int, m: int) -> int:
        _check_args(self.n, k, m)
        return self.entries[k][m]

    def row(self, k: int) -> tuple[int, ...]:
        """Coefficients of the k-particle projector, indexed by Z-weight m."""
        _check_args(self.n, k)
        return self.entries[k]

    def column(self, m: int) -> tuple[int, ...]:
        """Values C(n, k, m) for fixed m, read down k."""
        _check_args(self.n, m=m)
        return tuple(row[m] for row in self.entries)


@lru_cache(maxsize=None)
def _table_entries(n: int) -> tuple[tuple[int, ...], ...]:
    # Built level by level from the n=1 base table ((1, 1), (1, -1)) with the
    # addition recursion C(n,k,m) = C(n-1,k,m) + C(n-1,k-1,m) for m < n and
    # the subtraction recursion C(n,k,m) = C(n-1,k,m-1) - C(n-1,k-1,m-1) for
    # the new m = n column; out-of-range lookups contribute 0.
    if n == 1:
        return ((1, 1), (1, -1))
    prev = _table_entries(n - 1)

    def at(k: int, m: int) -> int:
        if 0 <= k <= n - 1:
            return prev[k][m]
        return 0

    rows = []
    for k in range(n + 1):
        row = [at(k, m) + at(k - 1, m) for m in range(n)]
        row.append(at(k, n - 1) - at(k - 1, n - 1))
        rows.append(tuple(row))
    return tuple(rows)


def table(n: int) -> KravchukTable:
    """Build the full coefficient table for ``n`` qubits by recursion."""
    _check_args(n)
    return KravchukTable(n=n, entries=_table_entries(n))


def generating_row(n: int, m: int) -> tuple[int, ...]:
    """Coefficients of (1 - x)^m (1 + x)^(n - m) in ascending powers of x.

    Position k equals C(n, k, m); computed by exact integer polynomial
    multiplication, independently of both the closed form and the recursion.
    """
    _check_args(n, m=m)
    poly = [1]
    for _ in range(m):
        poly = _polymul(poly, [1, -1])
    for _ in range(n - m):
        poly = _polymul(poly, [1, 1])
    return tuple(poly)


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one identity family; ``counterexample`` holds the first failure."""

    name: str
    passed: bool
    counterexample: dict | None = None


@dataclass(frozen=True)
class IdentityReport:
    n: int
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_identities(n: int) -> IdentityReport:
    """Check the four exact identity families satisfied by the table.

    * column_sum:          sum_k C(n,k,m) is 2^n at m=0 and 0 otherwise;
    * row_orthogonality:   sum_m binom(n,m) C(n,k,m) C(n,k',m)
      equals 2^n binom(n,k) delta_kk' (the weight binom(n,k) is forced:
      row k starts at C(n,k,0) = binom(n,k), so the k = k' sum scales
      with it; check n=2, k=1, where the sum is 8, not 4);
    * row_sum:             sum_m binom(n,m) C(n,k,m) is 2^n at k=0 and 0 otherwise;
    * weighted_column_sum: sum_k k C(n,k,m) is n 2^(n-1) at m=0, -2^(n-1) at m=1,
      and 0 for every larger m.

    All sums are evaluated in exact integer arithmetic.
    """
    _check_args(n)
    ent = _table_entries(n)
    pow2 = 1 << n
    checks = []

    fail = None
    for m in range(n + 1):
        got = sum(ent[k][m] for k in range(n + 1))
        expected = pow2 if m == 0 else 0
        if got != expected:
            fail = {"m": m, "got": got, "expected": expected}
            break
    checks.append(IdentityCheck("column_sum", fail is None, fail))

    fail = None
    for k in range(n + 1):
        for kp in range(k, n + 1):
            got = sum(_binom(n, m) * ent[k][m] * ent[kp][m] for m in range(n + 1))
            expected = pow2 * _binom(n, k) if k == kp else 0
            if got != expected:
                fail = {"k": k, "k_prime": kp, "got": got, "expected": expected}
                break
        if fail:
            break
    checks.append(IdentityCheck("row_orthogonality", fail is None, fail))

    fail = None
    for k in range(n + 1):
        got = sum(_binom(n, m) * ent[k][m] for m in range(n + 1))
        expected = pow2 if k == 0 else 0
        if got != expected:
            fail = {"k": k, "got": got, "expected": expected}
            break
    checks.append(IdentityCheck("row_sum", fail is None, fail))

    fail = None
    for m in range(n + 1):
        got = sum(k * ent[k][m] for k in range(n + 1))
        if m == 0:
            expected = n * (1 << (n - 1))
        elif m == 1:
            expected = -(1 << (n - 1))
        else:
            expected = 0
        if got != expected:
            fail = {"m": m, "got": got, "expected": expected}
            break
    checks.append(IdentityCheck("weighted_column_sum", fail is None, fail))

    return IdentityReport(n=n, checks=tuple(checks))


def format_table(t: KravchukTable, fmt: str = "text") -> str:
    """Render a table as a text grid, CSV rows, or a JSON object.

    Text layout mirrors the tabular presentation of the coefficients: rows k
    top to bottom, columns m left to right, right-aligned signed integers.
    """
    if fmt == "text":
        width = max(len(str(e)) for row in t.entries for e in row)
        return "".join(
            " ".join(str(e).rjust(width) for e in row) + "\n" for row in t.entries
        )
    if fmt == "csv":
        return "".join(",".join(str(e) for e in row) + "\n" for row in t.entries)
    if fmt == "json":
        return json.dumps({"n": t.n, "entries": [list(r) for r in t.entries]}, indent=2) + "\n"
    raise DomainError(f"unknown table format {fmt!r}; expected one of {TABLE_FORMATS}")


def format_identity_report(report: IdentityReport) -> str:
    lines = [f"identities for n={report.n}:"]
    for c in report.checks:
        if c.passed:
            lines.append(f"  PASS {c.name}")
        else:
            lines.append(f"  FAIL {c.name} first counterexample: {c.counterexample}")
    return "\n".join(lines) + "\n"

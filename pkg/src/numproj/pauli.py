"""Pauli strings and weighted Pauli sums in a two-bitmask (symplectic) encoding.

A string on ``n`` qubits is a pair of n-bit masks: bit ``i`` of ``x_mask`` is
set when qubit ``i`` carries X or Y, bit ``i`` of ``z_mask`` when it carries
Z or Y.  Qubit 0 is the rightmost character of the printed label and the
least-significant bit of a computational basis index.  A string additionally
carries a global phase ``i**phase_exp``; the masks alone always denote the
literal tensor product of I/X/Y/Z factors.

Multiplication uses the ordered form ``i**c * X^x * Z^z`` internally (each Y
factors as ``i * X * Z``), so products reduce to XORs of masks plus an exact
quarter-turn phase count.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    DomainError,
    PauliParseError,
    ResourceLimitError,
)

MAX_DENSE_QUBITS = 12
DEFAULT_PRUNE_TOL = 1e-12

PHASES = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)  # i**p for p = 0..3

_CHARS = "IXZY"  # indexed by x_bit + 2 * z_bit
_MATRICES = (
    np.eye(2, dtype=complex),                            # I
    np.array([[0, 1], [1, 0]], dtype=complex),           # X
    np.array([[1, 0], [0, -1]], dtype=complex),          # Z
    np.array([[0, -1j], [1j, 0]], dtype=complex),        # Y
)

#: Term key inside a PauliSum: (x_mask, z_mask), phase-free.
TermKey = tuple[int, int]

#: Dense realisation used as the verification oracle; plain 2^n x 2^n array.
DenseOperator = np.ndarray


def _check_masks(n: int, x_mask: int, z_mask: int) -> None:
    if n < 1:
        raise DomainError(f"qubit count must be positive, got n={n}")
    full = (1 << n) - 1
    if not 0 <= x_mask <= full:
        raise DomainError(f"x_mask {x_mask:#x} does not fit in {n} bits")
    if not 0 <= z_mask <= full:
        raise DomainError(f"z_mask {z_mask:#x} does not fit in {n} bits")


@dataclass(frozen=True)
class PauliString:
    """One tensor product of I/X/Y/Z with a global phase ``i**phase_exp``."""

    n: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    def __post_init__(self):
        _check_masks(self.n, self.x_mask, self.z_mask)
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @property
    def phase(self) -> complex:
        return PHASES[self.phase_exp]

    @property
    def x_weight(self) -> int:
        """Number of qubits carrying X or Y."""
        return self.x_mask.bit_count()

    def key(self) -> TermKey:
        return (self.x_mask, self.z_mask)

    def __str__(self) -> str:
        return format_string(self)

    def __repr__(self) -> str:
        return f"PauliString({self.n}, {format_string(self)!r}, phase_exp={self.phase_exp})"


def parse_string(text: str) -> PauliString:
    """Parse an I/X/Y/Z label, leftmost character acting on qubit n-1."""
    if not text:
        raise PauliParseError("empty Pauli string")
    x_mask = 0
    z_mask = 0
    bad = []
    n = len(text)
    for pos, ch in enumerate(text):
        bit = 1 << (n - 1 - pos)
        if ch == "X":
            x_mask |= bit
        elif ch == "Z":
            z_mask |= bit
        elif ch == "Y":
            x_mask |= bit
            z_mask |= bit
        elif ch != "I":
            bad.append(pos)
    if bad:
        raise PauliParseError(
            f"invalid Pauli character(s) at position(s) {', '.join(map(str, bad))} "
            f"in {text!r}",
            positions=tuple(bad),
        )
    return PauliString(n, x_mask, z_mask)


def format_string(s: PauliString) -> str:
    """Render the label, qubit n-1 leftmost; the phase is not emitted."""
    chars = []
    for i in range(s.n - 1, -1, -1):
        idx = ((s.x_mask >> i) & 1) + 2 * ((s.z_mask >> i) & 1)
        chars.append(_CHARS[idx])
    return "".join(chars)


def format_key(n: int, key: TermKey) -> str:
    return format_string(PauliString(n, key[0], key[1]))


def _require_same_n(a, b) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(
            f"operands act on different qubit counts: {a.n} vs {b.n}"
        )


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Exact product a * b with full quarter-turn phase tracking."""
    _require_same_n(a, b)
    x = a.x_mask ^ b.x_mask
    z = a.z_mask ^ b.z_mask
    # Ordered-form bookkeeping: convert both factors to i^c X^x Z^z, commute
    # b's X block past a's Z block, and convert the result back to literal form.
    phase = (
        a.phase_exp
        + b.phase_exp
        + (a.x_mask & a.z_mask).bit_count()
        + (b.x_mask & b.z_mask).bit_count()
        + 2 * (a.z_mask & b.x_mask).bit_count()
        - (x & z).bit_count()
    )
    return PauliString(a.n, x, z, phase)


def keys_commute(a: TermKey, b: TermKey) -> bool:
    """Symplectic commutation test on raw (x_mask, z_mask) keys."""
    return ((a[0] & b[1]) ^ (a[1] & b[0])).bit_count() % 2 == 0


def keys_qubitwise_commute(a: TermKey, b: TermKey) -> bool:
    """True when on every qubit the factors agree or one is the identity."""
    both_active = (a[0] | a[1]) & (b[0] | b[1])
    differ = (a[0] ^ b[0]) | (a[1] ^ b[1])
    return (both_active & differ) == 0


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff the symplectic form <a.x, b.z> + <a.z, b.x> is even."""
    _require_same_n(a, b)
    return keys_commute(a.key(), b.key())


def qubitwise_commutes(a: PauliString, b: PauliString) -> bool:
    """Stricter relation: per-qubit factors equal or at least one identity."""
    _require_same_n(a, b)
    return keys_qubitwise_commute(a.key(), b.key())


class PauliSum:
    """A finite map from phase-free Pauli strings to complex coefficients.

    Keys are (x_mask, z_mask) pairs denoting literal I/X/Y/Z tensors; any
    string phase is folded into the coefficient at insertion.  Instances are
    treated as immutable: every operation returns a new sum.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[TermKey, complex] | None = None):
        if n < 1:
            raise DomainError(f"qubit count must be positive, got n={n}")
        self.n = n
        self._terms = {} if terms is None else terms

    @classmethod
    def zero(cls, n: int) -> "PauliSum":
        return cls(n)

    @classmethod
    def identity(cls, n: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n, {(0, 0): complex(coeff)})

    @classmethod
    def from_strings(
        cls, n: int, items: Iterable[tuple[complex, Union[str, PauliString]]]
    ) -> "PauliSum":
        """Build from (coefficient, label-or-string) pairs, merging duplicates."""
        terms: dict[TermKey, complex] = {}
        for coeff, s in items:
            if isinstance(s, str):
                s = parse_string(s)
            if s.n != n:
                raise DimensionMismatchError(
                    f"term {format_string(s)!r} acts on {s.n} qubits, expected {n}"
                )
            key = s.key()
            terms[key] = terms.get(key, 0j) + complex(coeff) * s.phase
        return cls(n, terms)

    @property
    def terms(self) -> Mapping[TermKey, complex]:
        return MappingProxyType(self._terms)

    def coefficient(self, label_or_key: Union[str, TermKey]) -> complex:
        if isinstance(label_or_key, str):
            label_or_key = parse_string(label_or_key).key()
        return self._terms.get(label_or_key, 0j)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[TermKey, complex]]:
        return iter(self._terms.items())

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if not isinstance(other, PauliSum):
            return NotImplemented
        _require_same_n(self, other)
        merged = dict(self._terms)
        for key, val in other._terms.items():
            merged[key] = merged.get(key, 0j) + val
        return PauliSum(self.n, merged)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (-1.0) * other

    def __neg__(self) -> "PauliSum":
        return (-1.0) * self

    def __mul__(self, scalar: complex) -> "PauliSum":
        if isinstance(scalar, PauliSum):
            return NotImplemented
        c = complex(scalar)
        return PauliSum(self.n, {key: val * c for key, val in self._terms.items()})

    __rmul__ = __mul__

    def simplify(self, tol: float = 0.0) -> "PauliSum":
        """Drop every term with |coefficient| <= tol (the only lossy step)."""
        if tol < 0:
            raise DomainError(f"pruning tolerance must be nonnegative, got {tol}")
        return PauliSum(
            self.n, {k: v for k, v in self._terms.items() if abs(v) > tol}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def allclose(self, other: "PauliSum", tol: float = 1e-13) -> bool:
        if self.n != other.n:
            return False
        for key in self._terms.keys() | other._terms.keys():
            if abs(self._terms.get(key, 0j) - other._terms.get(key, 0j)) > tol:
                return False
        return True

    def __repr__(self) -> str:
        return f"PauliSum(n={self.n}, terms={len(self._terms)})"


def term_sort_key(item: tuple[TermKey, complex]):
    """Canonical term order: descending |coefficient|, then (z_mask, x_mask)."""
    (x, z), coeff = item
    return (-abs(coeff), z, x)


def sorted_terms(a: PauliSum) -> list[tuple[TermKey, complex]]:
    return sorted(a._terms.items(), key=term_sort_key)


def _dense_string(n: int, x_mask: int, z_mask: int) -> DenseOperator:
    mats = []
    for i in range(n - 1, -1, -1):
        idx = ((x_mask >> i) & 1) + 2 * ((z_mask >> i) & 1)
        mats.append(_MATRICES[idx])
    return reduce(np.kron, mats)


def to_dense(op: Union[PauliSum, PauliString]) -> DenseOperator:
    """Realise an operator as a dense 2^n x 2^n matrix via Kronecker products.

    Deliberately the dumbest faithful construction: it is the oracle against
    which the fast bitmask paths are checked, so it must stay independent of
    them.  Guarded to small n; a 2^12-dimensional complex matrix is 256 MB.
    """
    if op.n > MAX_DENSE_QUBITS:
        raise ResourceLimitError(
            f"dense realisation is limited to {MAX_DENSE_QUBITS} qubits, got n={op.n}"
        )
    if isinstance(op, PauliString):
        return op.phase * _dense_string(op.n, op.x_mask, op.z_mask)
    out = np.zeros((1 << op.n, 1 << op.n), dtype=complex)
    for (x, z), coeff in op._terms.items():
        out += coeff * _dense_string(op.n, x, z)
    return out

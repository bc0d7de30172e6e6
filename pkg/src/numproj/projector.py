"""Particle-number projectors in the Pauli basis and fast subspace projection.

The projector onto the k-particle sector of n qubits is diagonal, so its
Pauli expansion contains only Z-strings: a Z-mask of weight m carries the
exact dyadic coefficient C(n, k, m) / 2^n.

Conjugating a single Pauli string by the projector never needs the full
2^n-term expansion twice.  Writing the string as s = i^p X^x Z^z, the
conjugation P s P equals s * D, where D is the diagonal projector onto basis
states with exactly half of the X-support bits set and exactly k - |x|/2 of
the remaining bits set.  D factorises over the support and its complement,
each factor expanding through its own coefficient table, and the whole
product keeps the single 1/2^n normalisation.  Strings with odd X-support
annihilate: they cannot preserve Hamming weight.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import kravchuk
from .errors import DimensionMismatchError, DomainError, ResourceLimitError
from .pauli import DEFAULT_PRUNE_TOL, PHASES, PauliString, PauliSum

MAX_EXPANSION_QUBITS = 24
TERM_GENERATION_GUARD = 1 << 26


@dataclass(frozen=True)
class ProjectorSpec:
    """Target sector: ``k`` ones out of ``n`` qubits."""

    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.n <= kravchuk.MAX_QUBITS:
            raise DomainError(
                f"n must be in [1, {kravchuk.MAX_QUBITS}], got n={self.n}"
            )
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k must be in [0, n={self.n}], got k={self.k}")


def build_projector(spec: ProjectorSpec) -> PauliSum:
    """Fully expand the projector: one term per Z-mask, zero weights pruned.

    The expansion has 2^n candidate terms, so it is guarded; above the guard
    use :func:`project_string` / :func:`project_operator`, which never
    materialise the projector.
    """
    n, k = spec.n, spec.k
    if n > MAX_EXPANSION_QUBITS:
        raise ResourceLimitError(
            f"full projector expansion has 2^{n} terms; limited to "
            f"{MAX_EXPANSION_QUBITS} qubits. Use project_string/project_operator, "
            f"which never materialise the projector."
        )
    scale = 2.0 ** -n
    weights = [c * scale for c in kravchuk.table(n).row(k)]
    terms = {}
    for z in range(1 << n):
        c = weights[z.bit_count()]
        if c:
            terms[(0, z)] = complex(c)
    return PauliSum(n, terms)


def build_number_operator(n: int) -> PauliSum:
    """Operator whose diagonal entry at basis state b is the weight of b.

    Expansion: n/2 on the identity and -1/2 on each single-qubit Z.
    """
    if not 1 <= n <= MAX_EXPANSION_QUBITS:
        raise DomainError(f"n must be in [1, {MAX_EXPANSION_QUBITS}], got n={n}")
    terms: dict[tuple[int, int], complex] = {(0, 0): complex(n / 2)}
    for i in range(n):
        terms[(0, 1 << i)] = complex(-0.5)
    return PauliSum(n, terms)


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _sector_weights(n_bits: int, k: int) -> tuple[int, ...]:
    """Unnormalised projector weights by Z-mask weight on an n_bits block."""
    if n_bits == 0:
        return (1,)
    return kravchuk.table(n_bits).row(k)


def _nonzero_mask_count(n_bits: int, weights: tuple[int, ...]) -> int:
    return sum(
        kravchuk._binom(n_bits, w) for w, c in enumerate(weights) if c != 0
    )


def project_string(spec: ProjectorSpec, s: PauliString, coeff: complex = 1.0) -> PauliSum:
    """Conjugate ``coeff * s`` by the projector without materialising it.

    Every output term keeps the X-mask of ``s``; only the Z-mask and the
    coefficient vary.  Exact dyadic arithmetic throughout: for ``coeff`` of
    unit modulus the coefficients are exact.
    """
    if s.n != spec.n:
        raise DimensionMismatchError(
            f"string acts on {s.n} qubits, projector on {spec.n}"
        )
    n, k = spec.n, spec.k
    zero = PauliSum.zero(n)
    if coeff == 0:
        return zero
    m_prime = s.x_mask.bit_count()
    if m_prime % 2 == 1:
        return zero
    k_inside = m_prime // 2
    k_outside = k - k_inside
    n_outside = n - m_prime
    if not 0 <= k_outside <= n_outside:
        return zero

    supp_weights = _sector_weights(m_prime, k_inside)
    comp_weights = _sector_weights(n_outside, k_outside)
    supp_count = _nonzero_mask_count(m_prime, supp_weights)
    comp_count = _nonzero_mask_count(n_outside, comp_weights)
    if supp_count * comp_count > TERM_GENERATION_GUARD:
        raise ResourceLimitError(
            f"projection would generate {supp_count * comp_count} terms "
            f"(guard {TERM_GENERATION_GUARD}); for small n use the dense route"
        )

    scale = 2.0 ** -n
    comp_mask = ((1 << n) - 1) ^ s.x_mask
    y_mask = s.x_mask & s.z_mask
    y_count = y_mask.bit_count()
    x = s.x_mask
    terms: dict[tuple[int, int], complex] = {}
    for zs in _submasks(s.x_mask):
        cs = supp_weights[zs.bit_count()]
        if cs == 0:
            continue
        # Right-multiplying s by the diagonal term Z_(zs|zc) only re-enters
        # literal form through the Y positions covered by zs.
        e = (s.phase_exp + y_count - (y_mask ^ zs).bit_count()) % 4
        outer = coeff * PHASES[e] * (cs * scale)
        base_z = s.z_mask ^ zs
        for zc in _submasks(comp_mask):
            cc = comp_weights[zc.bit_count()]
            if cc:
                terms[(x, base_z ^ zc)] = outer * cc
    return PauliSum(n, terms)


def project_operator(
    spec: ProjectorSpec,
    operator: PauliSum,
    tol: float = DEFAULT_PRUNE_TOL,
    max_workers: int | None = None,
) -> PauliSum:
    """Project every term of ``operator``, merge, and prune at ``tol``.

    Terms are projected independently (optionally on a thread pool capped at
    ``max_workers``) and merged in input order, so the result is
    deterministic for a fixed input.
    """
    if operator.n != spec.n:
        raise DimensionMismatchError(
            f"operator acts on {operator.n} qubits, projector on {spec.n}"
        )
    n = spec.n

    def one(item: tuple[tuple[int, int], complex]) -> PauliSum:
        (x, z), c = item
        return project_string(spec, PauliString(n, x, z), c)

    items = list(operator.terms.items())
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            partials = list(pool.map(one, items))
    else:
        partials = map(one, items)

    merged: dict[tuple[int, int], complex] = {}
    for partial in partials:
        for key, val in partial.terms.items():
            merged[key] = merged.get(key, 0j) + val
        if len(merged) > TERM_GENERATION_GUARD:
            raise ResourceLimitError(
                f"projected operator exceeds {TERM_GENERATION_GUARD} terms"
            )
    return PauliSum(n, merged).simplify(tol)

"""Greedy partitioning of Pauli-sum terms into pairwise-commuting cliques.

Terms that commute pairwise can be measured simultaneously, so the number of
cliques upper-bounds the number of measurement settings an operator needs.
First-fit greedy is deterministic for a fixed visiting order and gives an
upper bound on the optimal clique count, not the optimum (minimum clique
cover is NP-hard).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .pauli import (
    PauliSum,
    TermKey,
    keys_commute,
    keys_qubitwise_commute,
    term_sort_key,
)

RELATIONS = ("general", "qubitwise")
POLICIES = ("magnitude", "input", "lex")

_RELATION_FN = {
    "general": keys_commute,
    "qubitwise": keys_qubitwise_commute,
}


@dataclass(frozen=True)
class CliquePartition:
    """Disjoint cover of an operator's term keys by pairwise-commuting groups."""

    relation: str
    policy: str
    cliques: tuple[tuple[TermKey, ...], ...]
    source_term_count: int

    @property
    def clique_count(self) -> int:
        return len(self.cliques)


@dataclass(frozen=True)
class CliqueValidation:
    ok: bool
    violation: str | None = None


def _ordered_keys(operator: PauliSum, policy: str) -> list[TermKey]:
    items = list(operator.terms.items())
    if policy == "magnitude":
        items.sort(key=term_sort_key)
    elif policy == "lex":
        items.sort(key=lambda kv: (kv[0][1], kv[0][0]))
    elif policy != "input":
        raise DomainError(f"unknown ordering policy {policy!r}; expected one of {POLICIES}")
    return [key for key, _ in items]


def partition(
    operator: PauliSum, relation: str = "general", policy: str = "magnitude"
) -> CliquePartition:
    """Sequential first-fit: place each term in the first clique it fits.

    Visiting order is set by ``policy``: descending coefficient magnitude
    with a (z_mask, x_mask) tie-break (default), the operator's own term
    order, or plain (z_mask, x_mask) order.  A term joins the first existing
    clique with which it satisfies ``relation`` against every member; the
    identity term fits anywhere, so it always lands in the first clique.
    """
    if relation not in _RELATION_FN:
        raise DomainError(f"unknown relation {relation!r}; expected one of {RELATIONS}")
    keys = _ordered_keys(operator, policy)
    if not keys:
        raise DomainError("cannot partition an empty operator")
    compatible = _RELATION_FN[relation]
    cliques: list[list[TermKey]] = []
    for key in keys:
        for clique in cliques:
            if all(compatible(key, member) for member in clique):
                clique.append(key)
                break
        else:
            cliques.append([key])
    return CliquePartition(
        relation=relation,
        policy=policy,
        cliques=tuple(tuple(c) for c in cliques),
        source_term_count=len(keys),
    )


def validate(p: CliquePartition, operator: PauliSum) -> CliqueValidation:
    """Re-check disjointness, coverage, and the pairwise relation per clique."""
    compatible = _RELATION_FN.get(p.relation)
    if compatible is None:
        return CliqueValidation(False, f"unknown relation {p.relation!r}")
    seen: set[TermKey] = set()
    for ci, clique in enumerate(p.cliques):
        for key in clique:
            if key in seen:
                return CliqueValidation(False, f"term key {key} appears twice (clique {ci})")
            seen.add(key)
    source = set(operator.terms.keys())
    missing = source - seen
    if missing:
        return CliqueValidation(False, f"term key {next(iter(missing))} not covered")
    extra = seen - source
    if extra:
        return CliqueValidation(
            False, f"term key {next(iter(extra))} not present in the operator"
        )
    for ci, clique in enumerate(p.cliques):
        for i in range(len(clique)):
            for j in range(i + 1, len(clique)):
                if not compatible(clique[i], clique[j]):
                    return CliqueValidation(
                        False,
                        f"clique {ci}: terms {clique[i]} and {clique[j]} "
                        f"violate the {p.relation} relation",
                    )
    return CliqueValidation(True)

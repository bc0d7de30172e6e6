"""Greedy commuting-clique partitioning and its validator."""
import pytest

from numproj import (
    CliquePartition,
    DomainError,
    PauliSum,
    ProjectorSpec,
    build_projector,
    partition,
    validate,
)

from conftest import random_operator

RELATIONS = ("general", "qubitwise")
POLICIES = ("magnitude", "input", "lex")


class TestPartition:
    def test_diagonal_operator_single_clique(self):
        p = partition(build_projector(ProjectorSpec(4, 2)))
        assert p.clique_count == 1

    def test_anticommuting_pair_two_cliques(self):
        op = PauliSum.from_strings(1, [(1.0, "X"), (1.0, "Z")])
        p = partition(op)
        assert p.clique_count == 2

    def test_mutually_commuting_single_clique_every_policy(self):
        op = PauliSum.from_strings(
            2, [(0.4, "II"), (0.3, "ZZ"), (0.2, "XX"), (0.1, "YY")]
        )
        for relation in ("general",):
            for policy in POLICIES:
                assert partition(op, relation, policy).clique_count == 1

    def test_counts_and_cover(self, rng):
        op = random_operator(rng, 6, 30)
        p = partition(op)
        assert p.source_term_count == 30
        assert 1 <= p.clique_count <= 30
        assert sorted(k for c in p.cliques for k in c) == sorted(op.terms)

    def test_magnitude_order_default(self):
        op = PauliSum.from_strings(
            1, [(0.1, "X"), (0.9, "Z"), (0.5, "I")]
        )
        p = partition(op)
        # visits Z first, I joins it, X opens the second clique
        assert p.cliques[0][0] == (0, 1)
        assert (0, 0) in p.cliques[0]
        assert p.cliques[1] == ((1, 0),)

    def test_identity_joins_first_clique(self):
        op = PauliSum.from_strings(2, [(1.0, "XX"), (0.5, "ZZ"), (0.1, "II")])
        p = partition(op)
        first = p.cliques[0]
        assert (0, 0) in first

    def test_qubitwise_never_coarser(self, rng):
        for _ in range(25):
            op = random_operator(rng, 6, 20)
            for policy in POLICIES:
                general = partition(op, "general", policy).clique_count
                qubitwise = partition(op, "qubitwise", policy).clique_count
                assert qubitwise >= general

    def test_scale_invariance(self, rng):
        op = random_operator(rng, 5, 15)
        base = partition(op)
        for c in (2.0, -3.5, 0.125):
            assert partition(op * c).cliques == base.cliques

    def test_deterministic(self, rng):
        op = random_operator(rng, 6, 25)
        assert partition(op) == partition(op)

    def test_empty_operator_rejected(self):
        with pytest.raises(DomainError):
            partition(PauliSum.zero(3))

    def test_unknown_relation_or_policy(self):
        op = PauliSum.identity(1)
        with pytest.raises(DomainError):
            partition(op, "weird", "magnitude")
        with pytest.raises(DomainError):
            partition(op, "general", "weird")


class TestValidate:
    def test_own_partitions_valid(self, rng):
        for _ in range(50):
            op = random_operator(rng, 6, 15)
            for relation in RELATIONS:
                for policy in POLICIES:
                    p = partition(op, relation, policy)
                    assert validate(p, op).ok

    def test_detects_moved_term(self):
        op = PauliSum.from_strings(1, [(1.0, "X"), (1.0, "Z")])
        p = partition(op)
        broken = CliquePartition(
            relation=p.relation,
            policy=p.policy,
            cliques=(tuple(k for c in p.cliques for k in c),),
            source_term_count=p.source_term_count,
        )
        report = validate(broken, op)
        assert not report.ok
        assert report.violation is not None

    def test_detects_missing_term(self):
        op = PauliSum.from_strings(1, [(1.0, "X"), (1.0, "Z")])
        p = partition(op)
        broken = CliquePartition(
            relation=p.relation,
            policy=p.policy,
            cliques=(p.cliques[0],),
            source_term_count=p.source_term_count,
        )
        assert not validate(broken, op).ok

    def test_detects_duplicate_term(self):
        op = PauliSum.from_strings(1, [(1.0, "X"), (1.0, "Z")])
        p = partition(op)
        broken = CliquePartition(
            relation=p.relation,
            policy=p.policy,
            cliques=p.cliques + (p.cliques[0],),
            source_term_count=p.source_term_count,
        )
        assert not validate(broken, op).ok

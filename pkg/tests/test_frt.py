"""Tests for quantum supermatrix relations."""

import pytest
from superspace_verifier.errors import NonQuadraticRelation
from superspace_verifier.frt import (
    SCHEME, bialgebra_check, coaction_relations, comodule_check, frt_relations, ideal_equiv, mhh12,
)
from superspace_verifier.gradedlinalg import KRON_CONVENTIONS, identity, super_permutation
from superspace_verifier.presets import preset
from superspace_verifier.rmatrix import build_rhat_hh
from superspace_verifier.scalars import GrassmannScalar
from superspace_verifier.superalgebra import SuperPolynomial


def supercommutation(scheme=SCHEME):
    generators = scheme.generators
    parities = {g.name: g.parity for g in generators}
    relations = []
    for i, a in enumerate(generators):
        if a.parity:
            relations.append(SuperPolynomial({(a.name, a.name): GrassmannScalar.one()}, parities))
        for b in generators[i + 1:]:
            sign = -1 if a.parity and b.parity else 1
            relations.append(SuperPolynomial({
                (a.name, b.name): GrassmannScalar.one(),
                (b.name, a.name): GrassmannScalar.number(-sign),
            }, parities))
    return relations


class TestIdealEquiv:
    """Test cases for comparing relation spans."""

    @pytest.fixture
    def relations(self):
        return preset("A12").relations

    def test_reflexive(self, relations):
        verdict = ideal_equiv(relations, relations)
        assert verdict.passed
        assert verdict.details["rank_a"] == verdict.details["rank_union"]

    def test_rescaled_relations(self, relations):
        q = GrassmannScalar.even("q")
        assert ideal_equiv([q * r for r in relations], relations).passed

    def test_dropped_relation(self, relations):
        verdict = ideal_equiv(relations[:-1], relations)
        assert not verdict.passed
        assert "from the second set" in verdict.witness

    def test_non_quadratic(self, relations):
        with pytest.raises(NonQuadraticRelation):
            ideal_equiv(list(relations) + [preset("A12").parse("X")], relations)


class TestFrtRelations:
    """Test cases for R T1 T2 = T1 T2 R."""

    def test_identity_gives_no_relations(self):
        assert frt_relations(identity([0, 1, 1, 1, 0, 0, 1, 0, 0])) == []

    def test_flip_gives_supercommutation(self):
        flip = super_permutation(SCHEME.parities)
        verdicts = [ideal_equiv(frt_relations(flip, c), supercommutation())
                    for c in KRON_CONVENTIONS]
        assert any(v.passed for v in verdicts)

    def test_jordanian_fixture(self):
        rhat = build_rhat_hh().rhat
        verdicts = [ideal_equiv(frt_relations(rhat, c), mhh12().relations)
                    for c in KRON_CONVENTIONS]
        assert any(v.passed for v in verdicts)

    def test_coaction_matches_fixture(self):
        relations = (coaction_relations(preset("Ah12"), ("x", "theta1", "theta2"))
                     + coaction_relations(preset("Ah'21"), ("phi", "y1", "y2")))
        assert ideal_equiv(relations, mhh12().relations).passed


class TestBialgebra:
    """Test cases for the matrix coproduct."""

    def test_costructure(self):
        cs = SCHEME.costructure()
        assert cs.counit["a"] == 1
        assert cs.counit["alpha"] == 0
        assert len(cs.coproduct["a"].terms) == 3

    def test_generator_parities(self):
        parities = {g.name: g.parity for g in SCHEME.generators}
        assert parities["a"] == 0
        assert parities["alpha"] == 1
        assert parities["c"] == 0

    def test_fixture_is_bialgebra(self):
        assert bialgebra_check(mhh12()).passed

    def test_superspace_comodule(self):
        assert comodule_check(preset("Ah12"), ("x", "theta1", "theta2"), mhh12()).passed

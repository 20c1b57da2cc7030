"""Tests for Hopf structures and star involutions."""

from dataclasses import replace

import pytest
from superspace_verifier.contraction import basis_change
from superspace_verifier.errors import ConstraintUnsatisfied, MissingImage
from superspace_verifier.hopfstar import (
    STAR_ROUTES, SUPERSTAR, InvolutionSpec, antipode_check, coproduct_relations_check,
    counit_check, derive_star, hopf_check_both, induce_star, involution_algebra,
    load_costructure, load_involution, star_check, star_image,
)
from superspace_verifier.presets import preset
from superspace_verifier.scalars import GrassmannScalar
from superspace_verifier.superalgebra import SuperPolynomial, normal_form, words_of_length
from superspace_verifier.suites import STAR_CLAIMS


class TestHopfStructure:
    """Test cases for the q-superspace function algebra."""

    @pytest.fixture
    def algebra(self):
        return preset("FAq12")

    @pytest.fixture
    def costructure(self):
        return load_costructure("q-superspace-hopf")

    def test_costructure_loaded(self, costructure):
        assert set(costructure.coproduct) == {"X", "Xi", "Theta1", "Theta2"}
        assert costructure.counit["Theta1"] == 0
        assert costructure.image_relations.name == "Aq12inv"

    def test_coproduct_respects_relations(self, algebra, costructure):
        assert coproduct_relations_check(algebra, costructure).passed

    def test_counit(self, algebra, costructure):
        assert counit_check(algebra, costructure).passed

    def test_hopf_axioms(self, algebra, costructure):
        verdict = hopf_check_both(algebra, costructure)
        assert verdict.passed
        assert any(note.startswith("conventions that pass:") for note in verdict.notes)

    def test_wrong_counit(self, algebra, costructure):
        broken = replace(costructure, counit={**costructure.counit, "X": GrassmannScalar.number(2)})
        verdict = counit_check(algebra, broken)
        assert not verdict.passed
        assert "counit on" in verdict.witness

    def test_unknown_sign_convention(self, algebra, costructure):
        with pytest.raises(ValueError):
            antipode_check(algebra, costructure, "sideways")


class TestStarStructures:
    """Test cases for the stated involutions."""

    @pytest.mark.parametrize("name", list(STAR_CLAIMS))
    def test_stated_star(self, name):
        pres = preset(involution_algebra(name))
        assert star_check(pres, load_involution(name)).passed

    def test_superstar_squares_to_parity(self):
        inv = load_involution("undeformed-superstar")
        assert inv.flavor == SUPERSTAR
        a12 = preset("A12")
        twice = star_image(star_image(a12.letter("Theta1"), inv), inv)
        assert twice == -a12.letter("Theta1")

    def test_star_reverses_products(self):
        inv = load_involution("h-superspace-star")
        ah12 = preset("Ah12")
        assert star_image(ah12.parse("x*theta1"), inv) == ah12.parse("theta1*x")

    @pytest.mark.parametrize("length", [2, 3])
    def test_star_is_involutive_on_words(self, length):
        inv = load_involution("h-superspace-star")
        ah12 = preset("Ah12")
        for word in words_of_length(ah12, length):
            monomial = SuperPolynomial.monomial(word, ah12.parities)
            twice = star_image(star_image(monomial, inv), inv)
            assert normal_form(twice, ah12) == normal_form(monomial, ah12)

    def test_wrong_image_fails(self):
        inv = load_involution("h-superspace-star")
        wrong = InvolutionSpec("wrong", {**inv.images, "theta1": preset("Ah12").letter("theta2")},
                               inv.conj)
        verdict = star_check(preset("Ah12"), wrong)
        assert not verdict.passed

    def test_missing_image(self):
        inv = load_involution("q-superspace-star")
        partial = InvolutionSpec("partial", {"X": inv.images["X"]}, inv.conj)
        with pytest.raises(MissingImage):
            star_image(preset("Aq12").parse("X*Theta1"), partial)


class TestInducedStar:
    """Test cases for stars pushed through a basis change."""

    def test_h_only_route(self):
        derived = derive_star("h-only")
        assert derived.verdict.passed
        q = GrassmannScalar.even("q")
        expected = (GrassmannScalar.odd("h") + q * GrassmannScalar.odd("hconj")) / (q - 1)
        assert derived.induced.pre_constraint["theta2"].coefficient(("x",)) == expected
        assert derived.induced.images["theta2"] == preset("Ah12").parse("theta2 - h*x")

    def test_hprime_only_route(self):
        assert derive_star("hprime-only").verdict.passed

    def test_full_route_is_modulo_product(self):
        assert STAR_ROUTES["full"].modulo == ("h", "h'")

    def test_unconstrained_conjugate_symbol(self):
        source = load_involution("q-superspace-star", conjugation="formal")
        with pytest.raises(ConstraintUnsatisfied):
            induce_star(basis_change("h-only", "superspace"), source)

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            derive_star("sideways")

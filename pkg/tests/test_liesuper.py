"""Tests for exponential generators and the Lie superalgebra matrices."""

import pytest
from superspace_verifier.errors import TruncationTooSmall
from superspace_verifier.liesuper import (
    TruncatedAlgebra, exp_relation_check, exponential_generators, mu_check, mu_matrices,
    primitive_hopf_check, truncate,
)
from superspace_verifier.presets import preset


class TestTruncation:
    """Test cases for the truncated enveloping algebra."""

    @pytest.fixture
    def lie(self):
        return preset("Lie")

    def test_truncate_by_u_count(self, lie):
        assert truncate(lie.parse("u*u*u"), 2).is_zero
        assert truncate(lie.parse("u*u"), 2) == lie.parse("u*u")

    def test_truncate_by_hbar_degree(self, lie):
        assert truncate(lie.parse("hbar1*u*xi1"), 1).is_zero
        assert truncate(lie.parse("hbar1*xi1"), 1) == lie.parse("hbar1*xi1")

    def test_order_too_small(self, lie):
        with pytest.raises(TruncationTooSmall):
            TruncatedAlgebra(lie, 1)
        with pytest.raises(TruncationTooSmall):
            exp_relation_check(1)

    def test_exponential_starts_with_one(self, lie):
        generators = exponential_generators(TruncatedAlgebra(lie, 3))
        assert generators["X"].coefficient(()) == 1
        assert generators["X"].coefficient(("u",)) == 1
        assert "Theta2" in generators


class TestLieSuperalgebra:
    """Test cases for the Lie superalgebra claims."""

    def test_exponential_relations(self):
        verdict = exp_relation_check(6)
        assert verdict.passed
        assert verdict.details["order"] == 6

    def test_low_order(self):
        assert exp_relation_check(2).passed

    def test_primitive_hopf(self):
        assert primitive_hopf_check().passed

    def test_mu_matrices(self):
        mu = mu_matrices()
        assert set(mu) == {"u", "xi1", "xi2"}
        assert mu["u"].shape == (3, 3)
        assert mu_check().passed

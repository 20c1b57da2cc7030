"""Tests for basis changes and contraction limits."""

import pytest
from superspace_verifier.contraction import (
    UNIT_POINT, BasisChange, basis_change, cancelled_parameters, contract_and_compare,
    contract_rmatrix, inverse, limit_relations, transform_relations,
)
from superspace_verifier.errors import NonInvertibleBasisChange, PoleAtLimit
from superspace_verifier.gradedlinalg import (
    KRON_CONVENTIONS, GradedMatrix, identity, mat_mul, super_permutation,
)
from superspace_verifier.presets import preset
from superspace_verifier.rmatrix import build_rhat_hh, build_rhat_pq
from superspace_verifier.scalars import GrassmannScalar
from superspace_verifier.superalgebra import rule_difference


class TestBasisChange:
    """Test cases for the built-in g matrices."""

    def test_full_superspace(self):
        bc = basis_change("full", "superspace")
        assert bc.source == ("X", "Theta1", "Theta2")
        assert bc.target == ("x", "theta1", "theta2")
        assert bc.parities == (0, 1, 1)

    def test_inverse(self):
        bc = basis_change("hprime-only", "exterior")
        inv = inverse(bc)
        assert (inv.source, inv.target) == (bc.target, bc.source)
        assert mat_mul(inv.matrix, bc.matrix) == identity(bc.parities)

    def test_unknown_kind_and_space(self):
        with pytest.raises(ValueError):
            basis_change("sideways")
        with pytest.raises(ValueError):
            basis_change("full", "hyperspace")

    def test_non_unit_diagonal(self):
        swap = GradedMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]], (0, 0, 0))
        with pytest.raises(NonInvertibleBasisChange):
            BasisChange("swap", swap, ("a", "b", "c"), ("a", "b", "c"))

    def test_uncovered_generators(self):
        with pytest.raises(NonInvertibleBasisChange):
            transform_relations(basis_change("full", "exterior"), preset("Aq12"))


class TestSuperspaceContraction:
    """Test cases for the q-superspace route."""

    @pytest.fixture
    def transformed(self):
        bc = basis_change("full", "superspace")
        return transform_relations(bc, preset("Aq12"), "transformed")

    def test_transformed_relations(self, transformed):
        assert rule_difference(transformed, preset("Aqh12")) is None
        assert "h'" in cancelled_parameters(transformed)

    def test_limit_is_jordanian(self, transformed):
        limit = limit_relations(transformed, UNIT_POINT, "limit")
        assert rule_difference(limit, preset("Ah12")) is None

    def test_h_only_route(self):
        transformed = transform_relations(basis_change("h-only", "superspace"), preset("Aq12"))
        limit = limit_relations(transformed, UNIT_POINT)
        assert rule_difference(limit, preset("Ah12")) is None

    def test_identity_route_is_undeformed(self):
        transformed = transform_relations(basis_change("identity", "superspace"), preset("Aq12"))
        limit = limit_relations(transformed, UNIT_POINT)
        assert rule_difference(limit, preset("Ah12")) is not None

    def test_pole(self):
        ah12 = preset("Ah12")
        q = GrassmannScalar.even("q")
        relation = (GrassmannScalar.odd("h") / (q - 1)) * ah12.parse("x*x")
        with pytest.raises(PoleAtLimit):
            limit_relations([relation], UNIT_POINT, generators=ah12.generators)

    def test_bare_relations_need_generators(self):
        with pytest.raises(ValueError):
            limit_relations(preset("Ah12").relations, UNIT_POINT)


class TestExteriorContraction:
    """Test cases for the exterior route."""

    def test_limit_is_jordanian_exterior(self):
        transformed = transform_relations(basis_change("hprime-only", "exterior"),
                                          preset("Apq21"))
        limit = limit_relations(transformed, UNIT_POINT)
        assert rule_difference(limit, preset("Ah'21")) is None
        assert cancelled_parameters(limit, ("h",)) == ["h"]


class TestRMatrixContraction:
    """Test cases for contracting the two-parameter R-hat."""

    def test_matches_jordanian_rhat(self):
        result = contract_and_compare(build_rhat_pq().rhat, basis_change("full", "superspace"),
                                      build_rhat_hh().rhat)
        assert result.verdict.passed
        assert result.convention in KRON_CONVENTIONS
        assert result.convention in result.matrices

    def test_mismatch_reports_both_conventions(self):
        result = contract_and_compare(build_rhat_pq().rhat, basis_change("full", "superspace"),
                                      identity(build_rhat_hh().rhat.row_parities))
        assert not result.verdict.passed
        assert result.convention is None
        for convention in KRON_CONVENTIONS:
            assert f"{convention}:" in result.verdict.witness

    def test_identity_basis_change_gives_flip(self):
        contracted = contract_rmatrix(build_rhat_pq().rhat, basis_change("identity", "superspace"),
                                      UNIT_POINT)
        assert contracted == super_permutation((0, 1, 1))


class TestRoundTrip:
    """Test cases for transforming back with the inverse basis change."""

    def test_transform_then_inverse(self):
        bc = basis_change("full", "superspace")
        there = transform_relations(bc, preset("Aq12"))
        back = transform_relations(inverse(bc), there)
        assert rule_difference(back, preset("Aq12")) is None

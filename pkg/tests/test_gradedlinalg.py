"""Tests for graded matrices."""

import pytest
from superspace_verifier.contraction import basis_change
from superspace_verifier.errors import Singular
from superspace_verifier.gradedlinalg import (
    KRON_CONVENTIONS, ODD_BLOCK, STANDARD, GradedMatrix, first_difference, graded_kron,
    identity, mat_inv, mat_mul, mat_rank_at, matrix_to_dict, super_permutation, supertranspose,
)
from superspace_verifier.scalars import GrassmannScalar


PARITIES = (0, 1, 1)


class TestGradedMatrix:
    """Test cases for graded matrix arithmetic."""

    @pytest.fixture
    def h(self):
        return GrassmannScalar.odd("h")

    @pytest.fixture
    def unipotent(self, h):
        return GradedMatrix.from_rows([[1, h], [0, 1]], (0, 1))

    def test_even_supermatrix(self, unipotent, h):
        assert unipotent.is_even_supermatrix()
        assert not GradedMatrix.from_rows([[1, h], [0, 1]], (0, 0)).is_even_supermatrix()

    def test_unipotent_inverse(self, unipotent, h):
        assert mat_inv(unipotent) == GradedMatrix.from_rows([[1, -h], [0, 1]], (0, 1))

    def test_basis_change_inverse(self):
        g = basis_change("full", "superspace").matrix
        assert mat_mul(mat_inv(g), g) == identity(PARITIES)
        assert mat_mul(g, mat_inv(g)) == identity(PARITIES)

    def test_singular(self, h):
        with pytest.raises(Singular) as info:
            mat_inv(GradedMatrix.from_rows([[h, 0], [0, 1]], (0, 0)))
        assert info.value.column == 0

    def test_first_difference(self, unipotent, h):
        other = unipotent.with_entry(0, 1, 0)
        i, j, diff = first_difference(unipotent, other)
        assert (i, j) == (0, 1)
        assert diff == h
        assert first_difference(unipotent, unipotent) is None

    def test_shape_mismatch(self, unipotent):
        with pytest.raises(ValueError):
            mat_mul(unipotent, identity(PARITIES))

    def test_rank_at_point(self):
        q = GrassmannScalar.even("q")
        m = GradedMatrix.from_rows([[q - 1, 0], [0, 1]], (0, 0))
        assert mat_rank_at(m) == 2
        assert mat_rank_at(m, {"q": 1}) == 1
        assert mat_rank_at(identity(PARITIES)) == 3

    def test_to_dict(self, unipotent):
        assert matrix_to_dict(unipotent) == {
            "row_parities": [0, 1], "col_parities": [0, 1], "rows": [["1", "h"], ["0", "1"]],
        }


class TestTensorMatrices:
    """Test cases for Kronecker products, flips and supertransposes."""

    def test_super_permutation_squares_to_identity(self):
        p = super_permutation(PARITIES)
        assert mat_mul(p, p) == identity([0, 1, 1, 1, 0, 0, 1, 0, 0])

    @pytest.mark.parametrize("convention", KRON_CONVENTIONS)
    def test_kron_of_identities(self, convention):
        eye = identity(PARITIES)
        product = graded_kron(eye, eye, convention=convention)
        assert product == identity(product.row_parities)

    def test_supertranspose_order(self):
        h = GrassmannScalar.odd("h")
        q = GrassmannScalar.even("q")
        m = GradedMatrix.from_rows([[q, h, 0], [h, 1, 0], [0, 0, 2]], PARITIES)
        twice = supertranspose(supertranspose(m, STANDARD), STANDARD)
        assert twice == GradedMatrix.from_rows([[q, -h, 0], [-h, 1, 0], [0, 0, 2]], PARITIES)
        assert supertranspose(supertranspose(m, ODD_BLOCK), ODD_BLOCK) == m
        four = supertranspose(supertranspose(twice, STANDARD), STANDARD)
        assert four == m

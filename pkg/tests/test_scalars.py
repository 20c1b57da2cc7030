"""Tests for Grassmann scalars, conjugation and limits."""

import pytest
from superspace_verifier.errors import NotInvolutive, PoleAtLimit
from superspace_verifier.parsing import parse_scalar
from superspace_verifier.scalars import (
    EVEN_SYMBOLS, ConjugationSpec, GrassmannScalar, odd_monomials, sconj, slimit,
)
from superspace_verifier.suites import scalar_law_verdict


class TestGrassmannScalar:
    """Test cases for the coefficient ring."""

    @pytest.fixture
    def q(self):
        return GrassmannScalar.even("q")

    @pytest.fixture
    def h(self):
        return GrassmannScalar.odd("h")

    @pytest.fixture
    def hp(self):
        return GrassmannScalar.odd("h'")

    def test_odd_parameters_anticommute(self, h, hp):
        assert h * h == 0
        assert h * hp == -(hp * h)
        assert not (h * hp).is_zero

    def test_parity(self, q, h, hp):
        assert q.parity == 0
        assert h.parity == 1
        assert (h * hp).parity == 0
        assert (q + h).parity is None

    def test_inverse_of_unit(self, q, h):
        assert (1 + h).inverse() == 1 - h
        value = q + h
        assert value * value.inverse() == 1

    def test_nilpotent_has_no_inverse(self, h):
        assert not h.is_unit
        with pytest.raises(ZeroDivisionError):
            h.inverse()

    def test_twist(self, q, h):
        assert h.twist(1) == -h
        assert h.twist(0) == h
        assert q.twist(1) == q

    def test_imaginary_unit(self):
        i = GrassmannScalar.imaginary()
        assert i * i == -1

    def test_substitute_and_drop(self, h, hp):
        assert (h + GrassmannScalar.odd("hconj")).substitute_odd({"hconj": -h}) == 0
        assert (h * hp + h).drop_products(["h", "h'"]) == h

    def test_odd_monomials(self):
        monomials = odd_monomials(["h", "h'"])
        assert len(monomials) == 4
        assert monomials[0] == 1

    def test_symbols(self, q, h):
        assert (q * h).even_symbols() == {"q"}
        assert (q * h).odd_symbols() == {"h"}


class TestLimits:
    """Test cases for evaluation at a point of the even parameters."""

    def test_removable_singularity(self):
        q = GrassmannScalar.even("q")
        assert slimit((q * q - 1) / (q - 1), {"q": 1}) == 2

    def test_pole(self):
        q = GrassmannScalar.even("q")
        with pytest.raises(PoleAtLimit) as info:
            slimit(GrassmannScalar.odd("h") / (q - 1), {"q": 1}, "entry (1,2)")
        assert "entry (1,2)" in str(info.value)


class TestConjugation:
    """Test cases for parameter conjugation."""

    @pytest.fixture
    def spec(self):
        q = EVEN_SYMBOLS["q"]
        return ConjugationSpec(
            even={"q": 1 / q},
            odd={"h": -GrassmannScalar.odd("h"), "h'": GrassmannScalar.odd("h'")},
        )

    def test_even_conjugation(self, spec):
        q = GrassmannScalar.even("q")
        assert sconj(q, spec) == q.inverse()
        assert sconj(GrassmannScalar.imaginary() * q, spec) == -GrassmannScalar.imaginary() / q

    def test_reversing_and_plain_conjugation(self, spec):
        h, hp = GrassmannScalar.odd("h"), GrassmannScalar.odd("h'")
        assert sconj(h * hp, spec) == h * hp
        assert sconj(h * hp, spec, reverse=False) == -(h * hp)

    def test_involutive(self, spec):
        q, h = GrassmannScalar.even("q"), GrassmannScalar.odd("h")
        value = q * h + 3
        assert sconj(sconj(value, spec), spec) == value

    def test_not_involutive(self):
        with pytest.raises(NotInvolutive):
            ConjugationSpec(even={"q": 2 * EVEN_SYMBOLS["q"]}, odd={})

    def test_missing_image_is_not_involutive(self):
        with pytest.raises(NotInvolutive):
            ConjugationSpec(even={}, odd={"h": GrassmannScalar.odd("h'")})

    def test_randomized_laws(self):
        assert scalar_law_verdict(cases=100, seed=7).passed


class TestParseScalar:
    """Test cases for the coefficient literal grammar."""

    def test_rational_expression(self):
        q = GrassmannScalar.even("q")
        expected = (GrassmannScalar.odd("h") + q * GrassmannScalar.odd("hconj")) / (q - 1)
        assert parse_scalar("(h + q*hconj)/(q - 1)") == expected

    def test_negative_powers(self):
        q = GrassmannScalar.even("q")
        assert parse_scalar("q^-1") == q.inverse()
        assert parse_scalar("q^−2") == q.inverse() ** 2
        assert parse_scalar("−q**2") == -(q * q)

    def test_imaginary_unit(self):
        assert parse_scalar("I*I") == -1

    @pytest.mark.parametrize("text", ["2 +", "zeta", "(q"])
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            parse_scalar(text)

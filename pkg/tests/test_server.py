"""Tests for SuperspaceMCPServer prompts and initialization."""

import pytest
from unittest.mock import Mock, AsyncMock, patch
from superspace_verifier.config import EngineSettings
from superspace_verifier.report import CheckRecord, VerificationReport
from superspace_verifier.server import SuperspaceMCPServer


class TestSuperspaceMCPServer:
    """Test cases for SuperspaceMCPServer."""

    @pytest.fixture
    def server(self):
        """Server with a mocked engine."""
        server = SuperspaceMCPServer(EngineSettings())
        server.engine = Mock()
        return server

    @pytest.mark.asyncio
    async def test_initialize(self):
        """Test that initialize wires tools and resources to one engine."""
        server = SuperspaceMCPServer(EngineSettings())
        with patch("superspace_verifier.server.VerificationEngine") as engine_cls:
            await server.initialize()

        engine_cls.assert_called_once_with(server.settings)
        assert server.tools.engine is server.engine
        assert server.resources.engine is server.engine

    @pytest.mark.asyncio
    async def test_initialize_error(self):
        """Test that initialization failures propagate."""
        server = SuperspaceMCPServer(EngineSettings())
        with patch("superspace_verifier.server.VerificationEngine",
                   side_effect=Exception("Fixture missing")):
            with pytest.raises(Exception, match="Fixture missing"):
                await server.initialize()

    @pytest.mark.asyncio
    async def test_verify_claim_prompt(self, server):
        """Test the verify_claim prompt lists claims, verdicts and witnesses."""
        server.engine.run_suite = AsyncMock(return_value=VerificationReport(
            suite="star", engine_version="0.1.0", records=[
                CheckRecord(check_id="star.induce.full", claim="full route", kind="adjudication",
                            verdict="fail", witness="theta2* differs"),
                CheckRecord(check_id="star.induce.h_only", claim="h-only route", verdict="pass"),
            ],
        ))

        prompt = await server.verify_claim_prompt({"suite": "star"})

        assert "# Verification of the star claims" in prompt
        assert "**Witness:** theta2* differs" in prompt
        assert "star.induce.h_only (asserted)" in prompt

    @pytest.mark.asyncio
    async def test_verify_claim_prompt_single_check(self, server):
        """Test restricting the prompt to one check id."""
        server.engine.run_suite = AsyncMock(return_value=VerificationReport(
            suite="star", engine_version="0.1.0", records=[
                CheckRecord(check_id="star.a", claim="a", verdict="pass"),
                CheckRecord(check_id="star.b", claim="b", verdict="pass"),
            ],
        ))

        prompt = await server.verify_claim_prompt({"suite": "star", "check_id": "star.b"})
        assert "star.b" in prompt
        assert "star.a" not in prompt

        missing = await server.verify_claim_prompt({"suite": "star", "check_id": "star.z"})
        assert missing == "No check star.z in suite star"

    @pytest.mark.asyncio
    async def test_explain_presentation_prompt(self, server):
        """Test the explain_presentation prompt shows generators and rules."""
        server.engine.get_preset = AsyncMock(return_value={
            "name": "Ah12",
            "generators": [{"name": "theta1", "parity": 1}, {"name": "x", "parity": 0}],
            "rules": [{"lhs": "x*theta1", "rhs": "theta1*x"}],
            "relations": [],
            "unresolved": [],
        })

        prompt = await server.explain_presentation_prompt({"preset": "Ah12"})

        assert "theta1 (odd), x (even)" in prompt
        assert "- x*theta1 -> theta1*x" in prompt
        assert "without a unit leading coefficient" not in prompt
        server.engine.get_preset.assert_called_once_with("Ah12")

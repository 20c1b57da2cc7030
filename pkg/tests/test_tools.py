"""Tests for VerificationTools."""

import pytest
from unittest.mock import Mock, AsyncMock
from superspace_verifier.engine import (
    ConfluenceSummary, ContractionSummary, NormalFormResult, PresetSummary, StarSummary,
)
from superspace_verifier.report import CheckRecord, Verdict, VerificationReport
from superspace_verifier.tools import VerificationTools


class TestVerificationTools:
    """Test cases for VerificationTools."""

    @pytest.fixture
    def mock_engine(self):
        """Mock verification engine."""
        return Mock()

    @pytest.fixture
    def tools(self, mock_engine):
        """VerificationTools instance with mocked engine."""
        return VerificationTools(mock_engine)

    def test_get_tools(self, tools):
        """Test getting list of tools."""
        tool_list = tools.get_tools()
        assert len(tool_list) == 7

        tool_names = [tool.name for tool in tool_list]
        expected_tools = [
            'run_suite',
            'normal_form',
            'check_confluence',
            'contract',
            'derive_star',
            'compare_ideals',
            'list_presets'
        ]

        for expected_tool in expected_tools:
            assert expected_tool in tool_names

        suites = tool_list[0].inputSchema["properties"]["suite"]["enum"]
        assert "braid" in suites
        assert "comodule" in suites

    @pytest.mark.asyncio
    async def test_call_tool_normal_form(self, tools, mock_engine):
        """Test calling normal_form tool."""
        mock_engine.normal_form = AsyncMock(return_value=NormalFormResult(
            preset='Ah12', expression='theta1*theta1', normal_form='0'
        ))

        result = await tools.call_tool('normal_form',
                                       {'preset': 'Ah12', 'expression': 'theta1*theta1'})

        assert len(result) == 1
        assert result[0].type == 'text'
        assert 'Normal form in Ah12' in result[0].text
        assert '= 0' in result[0].text
        mock_engine.normal_form.assert_called_once_with('Ah12', 'theta1*theta1')

    @pytest.mark.asyncio
    async def test_call_tool_run_suite_text(self, tools, mock_engine):
        """Test calling run_suite tool with the text format."""
        report = VerificationReport(suite='star', engine_version='0.1.0', records=[
            CheckRecord(check_id='star.induce.h_only', claim='claim', verdict='pass'),
        ])
        mock_engine.run_suite = AsyncMock(return_value=report)

        result = await tools.call_tool('run_suite', {'suite': 'star'})

        assert 'Suite: star' in result[0].text
        assert 'star.induce.h_only' in result[0].text
        assert mock_engine.run_suite.call_args.args == ('star',)

    @pytest.mark.asyncio
    async def test_call_tool_run_suite_json(self, tools, mock_engine):
        """Test calling run_suite tool with the json format."""
        report = VerificationReport(suite='hopf', engine_version='0.1.0')
        mock_engine.run_suite = AsyncMock(return_value=report)

        result = await tools.call_tool('run_suite', {'suite': 'hopf', 'format': 'json'})

        assert '"suite": "hopf"' in result[0].text

    @pytest.mark.asyncio
    async def test_call_tool_check_confluence_failure(self, tools, mock_engine):
        """Test calling check_confluence tool when an overlap does not resolve."""
        mock_engine.check_confluence = AsyncMock(return_value=ConfluenceSummary(
            preset='Bad', confluent=False, checked=3, witness='a b c: x vs y'
        ))

        result = await tools.call_tool('check_confluence', {'preset': 'Bad'})

        assert 'Ambiguities checked: 3' in result[0].text
        assert 'a b c: x vs y' in result[0].text
        mock_engine.check_confluence.assert_called_once_with('Bad', 4)

    @pytest.mark.asyncio
    async def test_call_tool_contract(self, tools, mock_engine):
        """Test calling contract tool."""
        mock_engine.contract = AsyncMock(return_value=ContractionSummary(
            target='superspace',
            basis_change='full/superspace',
            verdict=Verdict.ok('limit matches Ah12'),
            limit={'rules': [{'lhs': 'theta1*x', 'rhs': 'x*theta1'}]},
            cancelled=['p', "h'"],
        ))

        result = await tools.call_tool('contract', {'target': 'superspace'})

        assert 'PASS' in result[0].text
        assert 'theta1*x -> x*theta1' in result[0].text
        assert "Cancelled parameters: p, h'" in result[0].text
        mock_engine.contract.assert_called_once_with('superspace', 'full')

    @pytest.mark.asyncio
    async def test_call_tool_derive_star(self, tools, mock_engine):
        """Test calling derive_star tool."""
        mock_engine.derive_star = AsyncMock(return_value=StarSummary(
            route='h-only',
            images={'theta2': 'theta2 - h*x'},
            pre_constraint={},
            verdict=Verdict.ok(),
        ))

        result = await tools.call_tool('derive_star', {'g': 'h-only'})

        assert 'theta2* = theta2 - h*x' in result[0].text
        mock_engine.derive_star.assert_called_once_with('h-only')

    @pytest.mark.asyncio
    async def test_call_tool_compare_ideals(self, tools, mock_engine):
        """Test calling compare_ideals tool."""
        mock_engine.compare_ideals = AsyncMock(return_value=Verdict.fail(
            'x*y = 0 from the first set is not implied by the second',
            rank_a=1, rank_b=0, rank_union=1,
        ))

        result = await tools.call_tool('compare_ideals',
                                       {'preset': 'Ah12', 'first': ['x*y = 0'], 'second': []})

        assert 'FAIL' in result[0].text
        assert 'not implied' in result[0].text
        assert '"rank_union": 1' in result[0].text

    @pytest.mark.asyncio
    async def test_call_tool_list_presets(self, tools, mock_engine):
        """Test calling list_presets tool."""
        mock_engine.list_presets = AsyncMock(return_value=[
            PresetSummary(name='Ah12', generators=['theta1', 'theta2', 'x'], relation_count=5),
        ])

        result = await tools.call_tool('list_presets', {})

        assert 'Ah12 (theta1, theta2, x): 5 relations' in result[0].text

    @pytest.mark.asyncio
    async def test_call_tool_unknown(self, tools):
        """Test calling unknown tool."""
        result = await tools.call_tool('unknown_tool', {})

        assert len(result) == 1
        assert result[0].type == 'text'
        assert 'Unknown tool: unknown_tool' in result[0].text

    @pytest.mark.asyncio
    async def test_call_tool_error(self, tools, mock_engine):
        """Test tool call with error."""
        mock_engine.normal_form = AsyncMock(side_effect=Exception("Unknown preset: Nope"))

        result = await tools.call_tool('normal_form', {'preset': 'Nope', 'expression': 'x'})

        assert len(result) == 1
        assert result[0].type == 'text'
        assert 'Error: Unknown preset: Nope' in result[0].text

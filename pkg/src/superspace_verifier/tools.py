"""MCP tools for superspace verification."""

import json
import logging
from typing import Any, Dict, Sequence

from mcp.types import EmbeddedResource, ImageContent, TextContent, Tool

from .engine import CONTRACTION_TARGETS, VerificationEngine
from .hopfstar import STAR_ROUTES
from .report import Verdict
from .suites import CHECK_GROUPS, SUITES


logger = logging.getLogger(__name__)

BASIS_CHANGES = ["full", "h-only", "hprime-only", "identity"]


def _verdict_lines(verdict: Verdict) -> str:
    mark = "✅ PASS" if verdict.passed else "❌ FAIL"
    response = f"Verdict: {mark}\n"
    if verdict.witness:
        response += f"Witness: {verdict.witness}\n"
    for note in verdict.notes:
        response += f"• {note}\n"
    return response


class VerificationTools:
    """Superspace verification MCP tools."""

    def __init__(self, engine: VerificationEngine):
        """Initialize tools with the verification engine.

        Args:
            engine: Verification engine
        """
        self.engine = engine

    def get_tools(self) -> list[Tool]:
        """Get list of available tools.

        Returns:
            List of MCP tools
        """
        return [
            Tool(
                name="run_suite",
                description="Run a verification suite and return its report",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "suite": {
                            "type": "string",
                            "description": "Suite or check group name (default: all)",
                            "enum": list(SUITES) + list(CHECK_GROUPS),
                            "default": "all"
                        },
                        "mode": {
                            "type": "string",
                            "description": "Braid-relation grading mode",
                            "enum": ["graded", "ungraded", "both"],
                            "default": "both"
                        },
                        "order": {
                            "type": "integer",
                            "description": "Truncation order of the exponential checks",
                            "minimum": 2
                        },
                        "example": {
                            "type": "string",
                            "description": "Restrict reps to one representation or label"
                        },
                        "algebra": {
                            "type": "string",
                            "description": "Restrict preset-bound checks to one preset"
                        },
                        "format": {
                            "type": "string",
                            "enum": ["text", "json"],
                            "default": "text"
                        }
                    }
                }
            ),
            Tool(
                name="normal_form",
                description="Reduce an expression to normal form in a preset algebra",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "preset": {
                            "type": "string",
                            "description": "Preset name (e.g., Aq12, Ah12, Mhh12)"
                        },
                        "expression": {
                            "type": "string",
                            "description": "Expression such as theta2*x - x*theta2"
                        }
                    },
                    "required": ["preset", "expression"]
                }
            ),
            Tool(
                name="check_confluence",
                description="Check local confluence of a preset's rewriting rules",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "preset": {
                            "type": "string",
                            "description": "Preset name"
                        },
                        "max_length": {
                            "type": "integer",
                            "description": "Longest overlap word to resolve (default: 4)",
                            "minimum": 2,
                            "default": 4
                        }
                    },
                    "required": ["preset"]
                }
            ),
            Tool(
                name="contract",
                description="Transform by a built-in basis change and take the singular limit",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "target": {
                            "type": "string",
                            "enum": list(CONTRACTION_TARGETS)
                        },
                        "g": {
                            "type": "string",
                            "description": "Basis change (default: full)",
                            "enum": BASIS_CHANGES,
                            "default": "full"
                        }
                    },
                    "required": ["target"]
                }
            ),
            Tool(
                name="derive_star",
                description="Induce a star structure through a basis change",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "g": {
                            "type": "string",
                            "enum": list(STAR_ROUTES),
                            "default": "h-only"
                        }
                    }
                }
            ),
            Tool(
                name="compare_ideals",
                description="Decide whether two homogeneous relation sets generate the same ideal",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "preset": {
                            "type": "string",
                            "description": "Preset whose generators the relations use"
                        },
                        "first": {
                            "type": "array",
                            "items": {"type": "string"}
                        },
                        "second": {
                            "type": "array",
                            "items": {"type": "string"}
                        },
                        "degree": {
                            "type": "integer",
                            "default": 2,
                            "minimum": 1
                        }
                    },
                    "required": ["preset", "first", "second"]
                }
            ),
            Tool(
                name="list_presets",
                description="List the named presentations",
                inputSchema={"type": "object", "properties": {}}
            ),
        ]

    async def call_tool(self, name: str, arguments: Dict[str, Any]) -> Sequence[TextContent | ImageContent | EmbeddedResource]:
        """Call a tool with given arguments.

        Args:
            name: Tool name
            arguments: Tool arguments

        Returns:
            Tool response
        """
        try:
            if name == "run_suite":
                return await self._run_suite(arguments)
            elif name == "normal_form":
                return await self._normal_form(arguments)
            elif name == "check_confluence":
                return await self._check_confluence(arguments)
            elif name == "contract":
                return await self._contract(arguments)
            elif name == "derive_star":
                return await self._derive_star(arguments)
            elif name == "compare_ideals":
                return await self._compare_ideals(arguments)
            elif name == "list_presets":
                return await self._list_presets(arguments)
            else:
                return [TextContent(type="text", text=f"Unknown tool: {name}")]

        except Exception as e:
            logger.error(f"Error calling tool {name}: {e}")
            return [TextContent(type="text", text=f"Error: {str(e)}")]

    async def _run_suite(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        suite = arguments.get("suite", "all")
        report = await self.engine.run_suite(
            suite,
            mode=arguments.get("mode"),
            order=arguments.get("order"),
            example=arguments.get("example"),
            algebra=arguments.get("algebra"),
        )
        if arguments.get("format") == "json":
            return [TextContent(type="text", text=report.to_json())]
        return [TextContent(type="text", text=report.summary_text())]

    async def _normal_form(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        result = await self.engine.normal_form(arguments["preset"], arguments["expression"])
        response = f"**Normal form in {result.preset}**\n"
        response += f"{result.expression}\n= {result.normal_form}"
        return [TextContent(type="text", text=response)]

    async def _check_confluence(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        result = await self.engine.check_confluence(arguments["preset"],
                                                    arguments.get("max_length", 4))
        response = f"**Confluence of {result.preset}**\n"
        response += f"Ambiguities checked: {result.checked}\n"
        if result.confluent:
            response += "Every ambiguity resolves ✅"
        else:
            response += f"Unresolved overlap ❌\n{result.witness}"
        return [TextContent(type="text", text=response)]

    async def _contract(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        summary = await self.engine.contract(arguments["target"], arguments.get("g", "full"))
        response = f"**Contraction of {summary.target} via {summary.basis_change}**\n"
        response += _verdict_lines(summary.verdict)
        if summary.limit:
            response += "\nLimit relations:\n"
            for rule in summary.limit["rules"]:
                response += f"  {rule['lhs']} -> {rule['rhs']}\n"
        if summary.cancelled:
            response += f"Cancelled parameters: {', '.join(summary.cancelled)}\n"
        return [TextContent(type="text", text=response)]

    async def _derive_star(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        summary = await self.engine.derive_star(arguments.get("g", "h-only"))
        response = f"**Induced star ({summary.route})**\n"
        for name, image in summary.images.items():
            response += f"{name}* = {image}\n"
        response += _verdict_lines(summary.verdict)
        return [TextContent(type="text", text=response)]

    async def _compare_ideals(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        verdict = await self.engine.compare_ideals(
            arguments["preset"], arguments["first"], arguments["second"],
            arguments.get("degree", 2),
        )
        response = "**Ideal comparison**\n"
        response += _verdict_lines(verdict)
        if verdict.details:
            response += json.dumps(verdict.details)
        return [TextContent(type="text", text=response)]

    async def _list_presets(self, arguments: Dict[str, Any]) -> Sequence[TextContent]:
        presets = await self.engine.list_presets()
        response = "**Presets**\n"
        for p in presets:
            response += f"• {p.name} ({', '.join(p.generators)}): {p.relation_count} relations"
            if p.description:
                response += f", {p.description}"
            response += "\n"
        return [TextContent(type="text", text=response)]

"""Superspace verification MCP server main entry point."""

import asyncio
import logging
from typing import Any, Optional, Sequence

from mcp.server import Server
from mcp.server.models import InitializationOptions
from mcp.server.stdio import stdio_server
from mcp.types import EmbeddedResource, ImageContent, Resource, TextContent

from . import __version__
from .config import EngineSettings
from .engine import VerificationEngine
from .resources import VerificationResources
from .tools import VerificationTools


logger = logging.getLogger(__name__)

SERVER_NAME = "superspace-verification-server"


class SuperspaceMCPServer:
    """Main superspace verification MCP server class."""

    def __init__(self, settings: Optional[EngineSettings] = None):
        """Initialize the server."""
        self.server = Server(SERVER_NAME)
        self.settings = settings
        self.engine = None
        self.tools = None
        self.resources = None

    async def initialize(self):
        """Initialize the server components."""
        try:
            self.settings = self.settings or EngineSettings.from_env()
            self.engine = VerificationEngine(self.settings)

            self.tools = VerificationTools(self.engine)
            self.resources = VerificationResources(self.engine)

            await self._register_handlers()

            logger.info("Superspace verification server initialized successfully")

        except Exception as e:
            logger.error(f"Failed to initialize server: {e}")
            raise

    async def verify_claim_prompt(self, arguments: dict[str, str]) -> str:
        """Prompt text asking for an assessment of a suite's verdicts."""
        suite = arguments.get("suite", "all")
        check_id = arguments.get("check_id")
        report = await self.engine.run_suite(suite)
        records = [r for r in report.records if not check_id or r.check_id == check_id]
        if not records:
            return f"No check {check_id} in suite {suite}"

        prompt = f"# Verification of the {suite} claims\n\n"
        for r in records:
            prompt += f"## {r.check_id} ({r.kind})\n"
            prompt += f"- **Claim:** {r.claim}\n"
            prompt += f"- **Verdict:** {r.verdict}\n"
            if r.witness:
                prompt += f"- **Witness:** {r.witness}\n"
            for note in r.notes:
                prompt += f"- {note}\n"
            prompt += "\n"
        prompt += "## Request\n"
        prompt += "Explain what each verdict says about the stated claim. For every failure, "
        prompt += "read the witness and say which relation, entry or convention is at fault.\n"
        return prompt

    async def explain_presentation_prompt(self, arguments: dict[str, str]) -> str:
        name = arguments.get("preset", "Ah12")
        data = await self.engine.get_preset(name)
        generators = ", ".join(
            f"{g['name']} ({'odd' if g['parity'] else 'even'})" for g in data["generators"]
        )

        prompt = f"# Presentation {name}\n\n"
        prompt += f"**Generators:** {generators}\n\n"
        prompt += "## Rewriting rules\n"
        for rule in data["rules"]:
            prompt += f"- {rule['lhs']} -> {rule['rhs']}\n"
        if data["unresolved"]:
            prompt += "\n## Relations without a unit leading coefficient\n"
            for relation in data["unresolved"]:
                prompt += f"- {relation}\n"
        prompt += "\n## Request\n"
        prompt += f"Describe the superalgebra {name}: its grading, the role of each deformation "
        prompt += "parameter and the normal-ordered basis the rules produce.\n"
        return prompt

    async def _register_handlers(self):
        """Register MCP server handlers."""

        @self.server.list_tools()
        async def list_tools() -> list:
            """List available tools."""
            return self.tools.get_tools()

        @self.server.call_tool()
        async def call_tool(name: str, arguments: dict[str, Any] | None) -> Sequence[TextContent | ImageContent | EmbeddedResource]:
            """Call a tool."""
            if arguments is None:
                arguments = {}
            return await self.tools.call_tool(name, arguments)

        @self.server.list_resources()
        async def list_resources() -> list[Resource]:
            """List available resources."""
            return await self.resources.list_resources()

        @self.server.read_resource()
        async def read_resource(uri: str) -> str:
            """Read a resource."""
            return await self.resources.read_resource(uri)

        @self.server.list_prompts()
        async def list_prompts() -> list:
            """List available prompts."""
            return [
                {
                    "name": "verify_claim",
                    "description": "Run a verification suite and ask for an assessment of its verdicts",
                    "arguments": [
                        {
                            "name": "suite",
                            "description": "Suite to run (e.g., rmatrix, star, reps)",
                            "required": True
                        },
                        {
                            "name": "check_id",
                            "description": "Restrict the prompt to one check (e.g., star.induce.full)",
                            "required": False
                        }
                    ]
                },
                {
                    "name": "explain_presentation",
                    "description": "Explain a preset superalgebra from its rewriting rules",
                    "arguments": [
                        {
                            "name": "preset",
                            "description": "Preset name (e.g., Ah12, Mhh12)",
                            "required": True
                        }
                    ]
                }
            ]

        @self.server.get_prompt()
        async def get_prompt(name: str, arguments: dict[str, str] | None) -> Sequence[TextContent | ImageContent | EmbeddedResource]:
            """Get a prompt."""
            if arguments is None:
                arguments = {}

            try:
                if name == "verify_claim":
                    prompt = await self.verify_claim_prompt(arguments)
                elif name == "explain_presentation":
                    prompt = await self.explain_presentation_prompt(arguments)
                else:
                    return [TextContent(type="text", text=f"Unknown prompt: {name}")]
                return [TextContent(type="text", text=prompt)]

            except Exception as e:
                logger.error(f"Error building prompt {name}: {e}")
                return [TextContent(type="text", text=f"Error: {str(e)}")]

    async def run(self):
        """Run the MCP server."""
        await self.initialize()

        options = InitializationOptions(
            server_name=SERVER_NAME,
            server_version=__version__,
            capabilities={
                "tools": {},
                "resources": {},
                "prompts": {}
            }
        )

        async with stdio_server() as (read_stream, write_stream):
            await self.server.run(
                read_stream,
                write_stream,
                options
            )


async def main():
    """Main entry point."""
    settings = EngineSettings.from_env()
    logging.basicConfig(level=settings.log_level)
    server = SuperspaceMCPServer(settings)
    await server.run()


def run_server():
    """Console script entry point."""
    asyncio.run(main())


if __name__ == "__main__":
    run_server()

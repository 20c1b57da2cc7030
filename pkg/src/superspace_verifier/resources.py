"""MCP resources for presets, matrices and the fixture manifest."""

import json
import logging
from urllib.parse import unquote

from mcp.types import Resource

from .engine import VerificationEngine


logger = logging.getLogger(__name__)

PRESET_PREFIX = "superspace://presets/"
MATRIX_PREFIX = "superspace://matrices/"
MANIFEST_URI = "superspace://fixtures/manifest"


class VerificationResources:
    """Superspace verification MCP resources."""

    def __init__(self, engine: VerificationEngine):
        """Initialize resources with the verification engine.

        Args:
            engine: Verification engine
        """
        self.engine = engine

    async def list_resources(self) -> list[Resource]:
        """List available resources.

        Returns:
            List of MCP resources
        """
        resources = []
        for summary in await self.engine.list_presets():
            resources.append(Resource(
                uri=f"{PRESET_PREFIX}{summary.name}",
                name=f"Preset {summary.name}",
                description=summary.description or f"Presentation {summary.name}",
                mimeType="application/json"
            ))
        for name in self.engine.matrix_names():
            resources.append(Resource(
                uri=f"{MATRIX_PREFIX}{name}",
                name=f"Matrix {name}",
                description=f"Fixture matrix {name}",
                mimeType="application/json"
            ))
        resources.append(Resource(
            uri=MANIFEST_URI,
            name="Fixture Manifest",
            description="SHA-256 hashes of the fixture files",
            mimeType="application/json"
        ))
        return resources

    async def read_resource(self, uri: str) -> str:
        """Read a resource by URI.

        Args:
            uri: Resource URI

        Returns:
            Resource content as JSON string
        """
        uri = unquote(str(uri))
        try:
            if uri.startswith(PRESET_PREFIX):
                content = await self.engine.get_preset(uri[len(PRESET_PREFIX):])
            elif uri.startswith(MATRIX_PREFIX):
                content = await self.engine.get_matrix(uri[len(MATRIX_PREFIX):])
            elif uri == MANIFEST_URI:
                content = await self.engine.fixture_manifest()
            else:
                return json.dumps({"error": f"Unknown resource URI: {uri}"})
            return json.dumps(content, indent=2)

        except Exception as e:
            logger.error(f"Error reading resource {uri}: {e}")
            return json.dumps({"error": str(e)})

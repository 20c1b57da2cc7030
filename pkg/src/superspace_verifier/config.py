"""Engine settings read from the environment."""

import logging
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field


logger = logging.getLogger(__name__)


def _env_flag(value: Optional[str]) -> bool:
    return (value or "").strip().lower() in {"1", "true", "yes", "on"}


class EngineSettings(BaseModel):
    """Runtime configuration shared by the CLI and the MCP server."""
    log_level: str = "INFO"
    fixture_dir: Optional[Path] = None
    jobs: int = Field(default=1, ge=1)
    order: int = Field(default=6, ge=0)
    strict: bool = False

    @classmethod
    def from_env(cls) -> "EngineSettings":
        """Build settings from LOG_LEVEL and the SUPERSPACE_* variables."""
        fixture_dir = os.getenv("SUPERSPACE_FIXTURE_DIR")
        settings = cls(
            log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
            fixture_dir=Path(fixture_dir) if fixture_dir else None,
            jobs=int(os.getenv("SUPERSPACE_JOBS", "1")),
            order=int(os.getenv("SUPERSPACE_ORDER", "6")),
            strict=_env_flag(os.getenv("SUPERSPACE_STRICT")),
        )
        logger.debug(f"Loaded settings: {settings}")
        return settings

    def with_overrides(self, **overrides) -> "EngineSettings":
        """Return a validated copy with every non-None override applied."""
        updates = {k: v for k, v in overrides.items() if v is not None}
        return self.model_validate({**self.model_dump(), **updates})

"""Content-hashed JSON fixtures."""

import hashlib
import json
import logging
import threading
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import FixtureCorrupt, FixtureMissing


logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).parent / "fixtures"
MANIFEST_NAME = "manifest.json"


class FixtureStore:
    """Loads fixture documents and checks them against the SHA-256 manifest."""

    def __init__(self, root: Optional[Path] = None, verify: bool = True):
        """Initialize the store.

        Args:
            root: Fixture directory; defaults to the packaged fixtures
            verify: Check every document against ``manifest.json``
        """
        self.root = Path(root) if root else FIXTURE_DIR
        self.verify = verify
        self._manifest: Optional[Dict[str, str]] = None
        self._documents: Dict[str, Any] = {}
        self._lock = threading.Lock()

    def _path(self, filename: str) -> Path:
        path = self.root / filename
        if not path.is_file():
            raise FixtureMissing(path)
        return path

    @staticmethod
    def digest(path: Path) -> str:
        return hashlib.sha256(path.read_bytes()).hexdigest()

    def manifest(self) -> Dict[str, str]:
        if self._manifest is None:
            path = self._path(MANIFEST_NAME)
            self._manifest = json.loads(path.read_text(encoding="utf-8"))
        return self._manifest

    def hashes(self) -> Dict[str, str]:
        """Manifest hashes, keyed by file name, in sorted order."""
        return dict(sorted(self.manifest().items()))

    def load(self, name: str) -> Any:
        """Load ``<name>.json``.

        Raises:
            FixtureMissing: If the file does not exist
            FixtureCorrupt: If its hash differs from the manifest entry
        """
        with self._lock:
            if name in self._documents:
                return self._documents[name]
            filename = f"{name}.json"
            path = self._path(filename)
            if self.verify:
                expected = self.manifest().get(filename)
                actual = self.digest(path)
                if expected != actual:
                    logger.error(f"Fixture {filename} failed verification")
                    raise FixtureCorrupt(path, expected, actual)
            document = json.loads(path.read_text(encoding="utf-8"))
            logger.info(f"Loaded fixture {filename}")
            self._documents[name] = document
            return document


_default_store: Optional[FixtureStore] = None
_default_lock = threading.Lock()


def default_store() -> FixtureStore:
    global _default_store
    with _default_lock:
        if _default_store is None:
            _default_store = FixtureStore()
        return _default_store


def set_default_store(store: FixtureStore) -> None:
    """Replace the store used when callers pass none (CLI and server settings)."""
    global _default_store
    with _default_lock:
        _default_store = store

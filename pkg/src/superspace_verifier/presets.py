"""Named presentations loaded from the preset fixture."""

import logging
import threading
from typing import Dict, List, Optional, Tuple

from .errors import UnknownPreset
from .fixture_store import FixtureStore, default_store
from .superalgebra import GeneratorSpec, Presentation


logger = logging.getLogger(__name__)

_cache: Dict[Tuple[str, str], Presentation] = {}
_lock = threading.Lock()


def _document(store: Optional[FixtureStore]) -> Tuple[FixtureStore, dict]:
    store = store or default_store()
    return store, store.load("presets")


def preset_names(store: Optional[FixtureStore] = None) -> List[str]:
    return list(_document(store)[1])


def preset_info(name: str, store: Optional[FixtureStore] = None) -> dict:
    document = _document(store)[1]
    if name not in document:
        raise UnknownPreset(name)
    return document[name]


def preset_generators(name: str, store: Optional[FixtureStore] = None) -> List[GeneratorSpec]:
    return [GeneratorSpec(n, p) for n, p in preset_info(name, store)["generators"]]


def preset(name: str, store: Optional[FixtureStore] = None) -> Presentation:
    """Build (once per store) the oriented presentation called ``name``.

    Raises:
        UnknownPreset: If the fixture has no such entry
    """
    store, document = _document(store)
    key = (str(store.root), name)
    with _lock:
        if key in _cache:
            return _cache[key]
    if name not in document:
        raise UnknownPreset(name)
    entry = document[name]
    generators = [GeneratorSpec(n, p) for n, p in entry["generators"]]
    presentation = Presentation.from_text(name, generators, entry["relations"])
    with _lock:
        return _cache.setdefault(key, presentation)

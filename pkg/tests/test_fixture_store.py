"""Tests for hashed fixtures."""

import json
import shutil

import pytest
from superspace_verifier.errors import FixtureCorrupt, FixtureMissing, UnknownPreset
from superspace_verifier.fixture_store import FIXTURE_DIR, FixtureStore
from superspace_verifier.presets import preset


class TestFixtureStore:
    """Test cases for loading and verifying fixture documents."""

    @pytest.fixture
    def copied(self, tmp_path):
        target = tmp_path / "fixtures"
        shutil.copytree(FIXTURE_DIR, target)
        return target

    def test_packaged_fixtures_verify(self):
        store = FixtureStore()
        for name in ("presets", "matrices", "representations", "structures"):
            assert store.load(name)
        assert list(store.hashes()) == sorted(store.hashes())

    def test_edited_fixture_is_corrupt(self, copied):
        path = copied / "presets.json"
        path.write_text(path.read_text() + "\n")
        with pytest.raises(FixtureCorrupt) as info:
            FixtureStore(copied).load("presets")
        assert info.value.expected != info.value.actual

    def test_unverified_store_accepts_edits(self, copied):
        path = copied / "presets.json"
        data = json.loads(path.read_text())
        data["Extra"] = data["A12"]
        path.write_text(json.dumps(data))
        assert "Extra" in FixtureStore(copied, verify=False).load("presets")

    def test_missing_fixture(self, copied):
        (copied / "matrices.json").unlink()
        with pytest.raises(FixtureMissing):
            FixtureStore(copied).load("matrices")

    def test_missing_manifest(self, copied):
        (copied / "manifest.json").unlink()
        with pytest.raises(FixtureMissing):
            FixtureStore(copied).load("presets")

    def test_unknown_preset(self):
        with pytest.raises(UnknownPreset):
            preset("Nope")

    def test_preset_from_store(self, copied):
        assert preset("Aq12", FixtureStore(copied)).name == "Aq12"

"""Tests for the check registry and suite runner."""

import pytest
from superspace_verifier.errors import PoleAtLimit, UnknownPreset
from superspace_verifier.presets import preset_names
from superspace_verifier.report import Verdict
from superspace_verifier.suites import (
    CHECK_GROUPS, ORACLE_DEGREE, SUITES, Check, SuiteOptions, build_registry, oracle_verdict,
    run_check, run_suite, select_checks,
)


class TestRegistry:
    """Test cases for selecting checks."""

    def test_check_ids_are_unique(self):
        ids = [c.check_id for c in build_registry(SuiteOptions())]
        assert len(ids) == len(set(ids))

    def test_every_group_is_a_suite(self):
        groups = {c.group for c in build_registry(SuiteOptions())}
        assert groups == set(SUITES) - {"all"}

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            select_checks("nonsense", SuiteOptions())

    def test_single_suite(self):
        checks = select_checks("hopf", SuiteOptions())
        assert [c.check_id for c in checks] == ["hopf.q_superspace"]

    @pytest.mark.parametrize("matrix,dropped", [("pq", ".hh"), ("hh", ".pq")])
    def test_matrix_filter(self, matrix, dropped):
        ids = [c.check_id for c in select_checks("rmatrix", SuiteOptions(matrix=matrix))]
        assert ids
        assert not any(dropped in i for i in ids)

    def test_example_filter(self):
        ids = [c.check_id for c in select_checks("reps", SuiteOptions(example="q-superspace"))]
        assert ids == ["reps.q-superspace"]

    def test_algebra_filter(self):
        ids = [c.check_id for c in select_checks("engine", SuiteOptions(algebra="Aq12"))]
        assert ids == ["engine.confluence.Aq12", "engine.oracle.Aq12", "engine.scalar_laws"]

    @pytest.mark.parametrize("label,expected", [
        ("2.2", ["reps.q-superspace"]),
        ("2.6", ["reps.pq-exterior"]),
        ("3.2", ["reps.h-transformed"]),
        ("6.2", ["reps.pq-superspace"]),
    ])
    def test_example_labels(self, label, expected):
        ids = [c.check_id for c in select_checks("reps", SuiteOptions(example=label))]
        assert ids == expected

    def test_unknown_example(self):
        with pytest.raises(ValueError):
            select_checks("reps", SuiteOptions(example="9.9"))

    def test_check_group(self):
        options = SuiteOptions(matrix="hh", mode="graded")
        ids = [c.check_id for c in select_checks("braid", options)]
        assert ids == ["rmatrix.braid.hh.graded"]

    @pytest.mark.parametrize("group", sorted(CHECK_GROUPS))
    def test_every_check_group_selects(self, group):
        checks = select_checks(group, SuiteOptions())
        assert checks
        assert all(c.check_id.startswith(CHECK_GROUPS[group]) for c in checks)

    def test_algebra_filter_reaches_star_checks(self):
        ids = [c.check_id for c in select_checks("star", SuiteOptions(algebra="Ah12"))]
        assert ids == ["star.h-superspace-star", "star.induce.h_only", "star.induce.full"]

    def test_algebra_filter_reaches_compact_checks(self):
        ids = [c.check_id for c in select_checks("compact", SuiteOptions(algebra="Apq12"))]
        assert ids == ["rmatrix.compact.pq.Apq12"]

    def test_unknown_algebra(self):
        with pytest.raises(UnknownPreset):
            select_checks("engine", SuiteOptions(algebra="Nope"))

    def test_empty_selection(self):
        with pytest.raises(ValueError):
            select_checks("hopf", SuiteOptions(algebra="Aq12"))

    def test_mode_filter(self):
        assert SuiteOptions(mode="graded").modes() == ("graded",)
        assert len(SuiteOptions().modes()) == 2


class TestRunCheck:
    """Test cases for turning verdicts into records."""

    def test_pass(self):
        record = run_check(Check("x.ok", "engine", "claim", lambda: Verdict.ok("fine")))
        assert record.verdict == "pass"
        assert record.notes == ["fine"]
        assert record.wall_time is not None

    def test_fail(self):
        check = Check("x.bad", "engine", "claim", lambda: Verdict.fail("entry (1,1)"),
                      "adjudication")
        record = run_check(check)
        assert record.verdict == "fail"
        assert record.kind == "adjudication"
        assert record.witness == "entry (1,1)"

    def test_engine_error_is_indeterminate(self):
        def boom() -> Verdict:
            raise PoleAtLimit("h", "q - 1", "entry (1,2)")

        record = run_check(Check("x.pole", "engine", "claim", boom))
        assert record.verdict == "indeterminate"
        assert "entry (1,2)" in record.witness


class TestRunSuite:
    """Test cases for the asynchronous runner."""

    @pytest.mark.asyncio
    async def test_records_in_registry_order(self):
        options = SuiteOptions(algebra="Aq12", jobs=3)
        report = await run_suite("engine", options)
        expected = [c.check_id for c in select_checks("engine", options)]
        assert [r.check_id for r in report.records] == expected
        assert report.exit_code() == 0
        assert "presets.json" in report.fixture_hashes


class TestOracle:
    """Test cases for the linear-algebra cross-check of rewriting."""

    @pytest.mark.parametrize("name", preset_names())
    def test_every_preset_reaches_degree_four(self, name):
        verdict = oracle_verdict(name)
        assert verdict.passed, verdict.witness
        assert verdict.details["degree"] == ORACLE_DEGREE == 4
        assert not any("skipped" in note for note in verdict.notes)

    @pytest.mark.parametrize("name", ["Lie", "FAq12"])
    def test_inhomogeneous_presets_use_filtered_ideal(self, name):
        notes = oracle_verdict(name, degree=3).notes
        assert "oracle over the filtered ideal" in notes

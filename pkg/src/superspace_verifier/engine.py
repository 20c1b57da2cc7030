"""Async verification engine shared by the CLI and the MCP server."""

import logging
from typing import Any, Dict, List, Optional

import anyio
from pydantic import BaseModel, Field

from .config import EngineSettings
from .contraction import (
    UNIT_POINT, basis_change, cancelled_parameters, contract_and_compare, limit_relations,
    transform_relations,
)
from .fixture_store import FixtureStore, set_default_store
from .frt import ideal_equiv
from .gradedlinalg import matrix_to_dict
from .hopfstar import derive_star
from .presets import preset, preset_info, preset_names
from .report import Verdict, VerificationReport
from .rmatrix import build_rhat_hh, build_rhat_pq
from .suites import SuiteOptions, run_suite
from .superalgebra import check_local_confluence, normal_form, rule_difference


logger = logging.getLogger(__name__)

CONTRACTION_TARGETS = ("superspace", "exterior", "rmatrix")

# source and limit presets of the two contraction routes
CONTRACTION_ROUTES = {
    "superspace": ("Aq12", "Ah12"),
    "exterior": ("Apq21", "Ah'21"),
}


class PresetSummary(BaseModel):
    """One named presentation."""
    name: str
    generators: List[str]
    relation_count: int
    description: Optional[str] = None


class NormalFormResult(BaseModel):
    preset: str
    expression: str
    normal_form: str


class ConfluenceSummary(BaseModel):
    preset: str
    confluent: bool
    checked: int
    witness: Optional[str] = None


class ContractionSummary(BaseModel):
    """Outcome of one contraction route."""
    target: str
    basis_change: str
    verdict: Verdict
    transformed: Optional[Dict[str, Any]] = None
    limit: Optional[Dict[str, Any]] = None
    cancelled: List[str] = Field(default_factory=list)
    matrix: Optional[Dict[str, Any]] = None


class StarSummary(BaseModel):
    route: str
    images: Dict[str, str]
    pre_constraint: Dict[str, str]
    verdict: Verdict


class VerificationEngine:
    """Runs suites and single algebra operations off the event loop."""

    def __init__(self, settings: Optional[EngineSettings] = None):
        """Initialize the engine.

        Args:
            settings: Engine settings; read from the environment when omitted
        """
        self.settings = settings or EngineSettings.from_env()

        try:
            self.store = FixtureStore(self.settings.fixture_dir)
            set_default_store(self.store)
            logger.info(f"Verification engine initialized with fixtures in {self.store.root}")
        except Exception as e:
            logger.error(f"Failed to initialize verification engine: {e}")
            raise

    def suite_options(self, **overrides) -> SuiteOptions:
        """Suite options from the settings with every non-None override applied."""
        values = {
            "order": self.settings.order,
            "jobs": self.settings.jobs,
            "strict": self.settings.strict,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SuiteOptions(**values)

    async def run_suite(self, suite: str = "all", **overrides) -> VerificationReport:
        """Run a suite or check group.

        Args:
            suite: Suite name, ``all`` for every group
            **overrides: SuiteOptions fields such as mode, order or example

        Returns:
            The ordered verification report
        """
        try:
            return await run_suite(suite, self.suite_options(**overrides), self.store)
        except Exception as e:
            logger.error(f"Error running suite {suite}: {e}")
            raise

    async def list_presets(self) -> List[PresetSummary]:
        try:
            summaries = []
            for name in preset_names(self.store):
                info = preset_info(name, self.store)
                summaries.append(PresetSummary(
                    name=name,
                    generators=[g for g, _ in info["generators"]],
                    relation_count=len(info["relations"]),
                    description=info.get("description"),
                ))
            return summaries
        except Exception as e:
            logger.error(f"Error listing presets: {e}")
            raise

    async def get_preset(self, name: str) -> Dict[str, Any]:
        """Oriented presentation of a preset as plain data."""
        try:
            pres = await anyio.to_thread.run_sync(preset, name, self.store)
            return pres.to_dict()
        except Exception as e:
            logger.error(f"Error loading preset {name}: {e}")
            raise

    async def get_matrix(self, name: str) -> Dict[str, Any]:
        """Raw fixture entry of a named matrix."""
        try:
            matrices = self.store.load("matrices")
            if name not in matrices:
                raise KeyError(f"Unknown matrix: {name}")
            return matrices[name]
        except Exception as e:
            logger.error(f"Error loading matrix {name}: {e}")
            raise

    def matrix_names(self) -> List[str]:
        return list(self.store.load("matrices"))

    async def fixture_manifest(self) -> Dict[str, str]:
        return self.store.hashes()

    async def normal_form(self, preset_name: str, expression: str) -> NormalFormResult:
        """Parse ``expression`` over a preset's generators and reduce it."""

        def reduce() -> str:
            pres = preset(preset_name, self.store)
            return str(normal_form(pres.parse(expression), pres))

        try:
            result = await anyio.to_thread.run_sync(reduce)
            return NormalFormResult(preset=preset_name, expression=expression, normal_form=result)
        except Exception as e:
            logger.error(f"Error reducing {expression} in {preset_name}: {e}")
            raise

    async def check_confluence(self, preset_name: str, max_length: int = 4) -> ConfluenceSummary:
        def check() -> ConfluenceSummary:
            result = check_local_confluence(preset(preset_name, self.store), max_length)
            witness = None
            if not result.confluent:
                witness = f"{' '.join(result.word)}: {result.left} vs {result.right}"
            return ConfluenceSummary(preset=preset_name, confluent=result.confluent,
                                     checked=result.checked, witness=witness)

        try:
            return await anyio.to_thread.run_sync(check)
        except Exception as e:
            logger.error(f"Error checking confluence of {preset_name}: {e}")
            raise

    def _contract(self, target: str, kind: str) -> ContractionSummary:
        if target not in CONTRACTION_TARGETS:
            raise ValueError(f"Unknown contraction target: {target}")
        if target == "rmatrix":
            bc = basis_change(kind, "superspace", self.store)
            result = contract_and_compare(build_rhat_pq(self.store).rhat, bc,
                                          build_rhat_hh(self.store).rhat)
            matrix = None
            if result.convention:
                matrix = matrix_to_dict(result.matrices[result.convention])
            return ContractionSummary(target=target, basis_change=bc.name,
                                      verdict=result.verdict, matrix=matrix)

        source, expected = CONTRACTION_ROUTES[target]
        bc = basis_change(kind, target, self.store)
        transformed = transform_relations(bc, preset(source, self.store), f"{source} transformed")
        limit = limit_relations(transformed, UNIT_POINT, f"{source} limit")
        difference = rule_difference(limit, preset(expected, self.store))
        if difference:
            verdict = Verdict.fail(difference)
        else:
            verdict = Verdict.ok(f"limit matches {expected}")
        return ContractionSummary(
            target=target,
            basis_change=bc.name,
            verdict=verdict,
            transformed=transformed.to_dict(),
            limit=limit.to_dict(),
            cancelled=cancelled_parameters(transformed, ("p", "h", "h'")),
        )

    async def contract(self, target: str, kind: str = "full") -> ContractionSummary:
        """Transform and contract the relations or the R-matrix along a built-in g.

        Args:
            target: ``superspace``, ``exterior`` or ``rmatrix``
            kind: ``full``, ``h-only``, ``hprime-only`` or ``identity``
        """
        try:
            return await anyio.to_thread.run_sync(self._contract, target, kind)
        except Exception as e:
            logger.error(f"Error contracting {target} with {kind}: {e}")
            raise

    async def derive_star(self, kind: str = "h-only") -> StarSummary:
        try:
            derived = await anyio.to_thread.run_sync(derive_star, kind, self.store)
            return StarSummary(
                route=kind,
                images={k: str(v) for k, v in derived.induced.images.items()},
                pre_constraint={k: str(v) for k, v in derived.induced.pre_constraint.items()},
                verdict=derived.verdict,
            )
        except Exception as e:
            logger.error(f"Error deriving star for {kind}: {e}")
            raise

    async def compare_ideals(self, preset_name: str, first: List[str], second: List[str],
                             degree: int = 2) -> Verdict:
        """Compare two relation lists written over the generators of a preset."""

        def compare() -> Verdict:
            pres = preset(preset_name, self.store)
            a = [pres.parse_relation(text) for text in first]
            b = [pres.parse_relation(text) for text in second]
            return ideal_equiv(a, b, degree)

        try:
            return await anyio.to_thread.run_sync(compare)
        except Exception as e:
            logger.error(f"Error comparing relation sets over {preset_name}: {e}")
            raise

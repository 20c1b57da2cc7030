"""Check registry and concurrent suite runner."""

import logging
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

import anyio
from pydantic import BaseModel, Field

from . import __version__
from .contraction import (
    UNIT_POINT, basis_change, cancelled_parameters, contract_and_compare, limit_relations,
    transform_relations,
)
from .errors import UnknownPreset, VerificationError
from .fixture_store import FixtureStore, default_store
from .frt import bialgebra_check, coaction_relations, comodule_check, frt_relations, ideal_equiv
from .gradedlinalg import KRON_CONVENTIONS, first_difference
from .hopfstar import (
    derive_star, hopf_check_both, involution_algebra, load_costructure, load_involution, star_check,
)
from .liesuper import exp_relation_check, mu_check, primitive_hopf_check
from .presets import preset, preset_names
from .report import CheckRecord, Verdict, VerificationReport
from .reps import (
    CONVENTIONS, load_representation, rep_check, representation_algebra, transform_rep,
)
from .rmatrix import (
    GRADED, MODES, build_rhat_hh, build_rhat_pq, braid_check, compact_form_check,
    decompose_check, from_rhat, involutive_check, kernel_relations, projectors, ybe_check,
)
from .scalars import ConjugationSpec, GrassmannScalar, sconj
from .superalgebra import (
    GeneratorSpec, check_local_confluence, oracle_mismatch, rule_difference,
)


logger = logging.getLogger(__name__)

SUITES = ("all", "rmatrix", "contraction", "frt", "hopf", "star", "liesuper", "reps", "engine")
# check groups: id prefixes inside a suite
CHECK_GROUPS: Dict[str, Tuple[str, ...]] = {
    "braid": ("rmatrix.braid.",),
    "ybe": ("rmatrix.ybe.",),
    "involutive": ("rmatrix.involutive.",),
    "projectors": ("rmatrix.projectors.",),
    "kernel": ("rmatrix.kernel.",),
    "compact": ("rmatrix.compact.",),
    "decompose": ("rmatrix.decompose",),
    "coaction": ("frt.coaction_vs_fixture", "frt.frt_vs_coaction"),
    "bialgebra": ("frt.bialgebra",),
    "comodule": ("frt.comodule.",),
}
SUPERSPACE_COORDS = ("x", "theta1", "theta2")
EXTERIOR_COORDS = ("phi", "y1", "y2")
ORACLE_DEGREE = 4
SCALAR_LAW_CASES = 1000


class SuiteOptions(BaseModel):
    """Per-run options; the CLI fills them from flags and settings."""
    mode: Literal["graded", "ungraded", "both"] = "both"
    order: int = Field(default=6, ge=0)
    jobs: int = Field(default=1, ge=1)
    strict: bool = False
    example: Optional[str] = None
    algebra: Optional[str] = None
    matrix: Optional[Literal["pq", "hh"]] = None

    def modes(self) -> Sequence[str]:
        return MODES if self.mode == "both" else (self.mode,)


@dataclass
class Check:
    check_id: str
    group: str
    claim: str
    run: Callable[[], Verdict]
    kind: Literal["asserted", "adjudication"] = "asserted"
    algebras: Tuple[str, ...] = ()


# rmatrix

def _rmatrix_checks(options: SuiteOptions, store: FixtureStore) -> List[Check]:
    def rhat_pq():
        return build_rhat_pq(store).rhat

    def rhat_hh():
        return build_rhat_hh(store).rhat

    def kernel(sign: str) -> Verdict:
        pair = projectors(rhat_hh())
        if sign == "minus":
            coords = [GeneratorSpec(n, p) for n, p in zip(SUPERSPACE_COORDS, (0, 1, 1))]
            target = preset("Ah12", store)
            relations = kernel_relations(pair.minus, coords, precedence=target.generators)
        else:
            coords = [GeneratorSpec(n, p) for n, p in zip(EXTERIOR_COORDS, (1, 0, 0))]
            target = preset("Ah'21", store)
            relations = kernel_relations(pair.plus, coords, signed=True,
                                         precedence=target.generators)
        return ideal_equiv(relations, target.relations)

    def compact_pq(algebra: str) -> Verdict:
        return compact_form_check(rhat_pq(), preset(algebra, store), ("X", "Theta1", "Theta2"),
                                  GrassmannScalar.even("p"))

    checks = [
        Check("rmatrix.braid.pq", "rmatrix", "The two-parameter R-hat satisfies the braid relation",
              lambda: braid_check(rhat_pq(), GRADED)),
        Check("rmatrix.ybe.pq", "rmatrix", "R = P R-hat satisfies the graded Yang-Baxter equation",
              lambda: ybe_check(from_rhat(rhat_pq(), GRADED), GRADED)),
    ]
    for mode in options.modes():
        checks.append(Check(
            f"rmatrix.braid.hh.{mode}", "rmatrix",
            f"The Jordanian R-hat satisfies the braid relation ({mode})",
            lambda mode=mode: braid_check(rhat_hh(), mode),
        ))
    checks += [
        Check("rmatrix.involutive.hh", "rmatrix", "The Jordanian R-hat squares to the identity",
              lambda: involutive_check(rhat_hh())),
        Check("rmatrix.projectors.hh", "rmatrix",
              "(I + R)/2 and (I - R)/2 are complementary orthogonal idempotents",
              lambda: projectors(rhat_hh()).verdict),
        Check("rmatrix.kernel.minus", "rmatrix",
              "The kernel of P- spans the Jordanian superspace relations",
              lambda: kernel("minus")),
        Check("rmatrix.kernel.plus", "rmatrix",
              "The signed kernel of P+ spans the Jordanian exterior relations",
              lambda: kernel("plus")),
        Check("rmatrix.compact.hh", "rmatrix",
              "x_i x_j = R x_k x_l holds modulo the Jordanian superspace relations",
              lambda: compact_form_check(rhat_hh(), preset("Ah12", store), SUPERSPACE_COORDS),
              algebras=("Ah12",)),
        Check("rmatrix.compact.pq.Aq12", "rmatrix",
              "p x_i x_j = R x_k x_l modulo the one-parameter superspace relations",
              lambda: compact_pq("Aq12"), "adjudication", ("Aq12",)),
        Check("rmatrix.compact.pq.Apq12", "rmatrix",
              "p x_i x_j = R x_k x_l modulo the two-parameter superspace relations",
              lambda: compact_pq("Apq12"), "adjudication", ("Apq12",)),
        Check("rmatrix.decompose", "rmatrix",
              "R factors as R(h) R(h') up to hh' terms, each factor solving Yang-Baxter",
              lambda: decompose_check(store)),
    ]
    return checks


# contraction

def _contraction_checks(store: FixtureStore) -> List[Check]:
    def superspace_relations() -> Verdict:
        transformed = transform_relations(basis_change("full", "superspace", store),
                                          preset("Aq12", store), "transformed")
        difference = rule_difference(transformed, preset("Aqh12", store))
        if difference:
            return Verdict.fail(difference)
        cancelled = cancelled_parameters(transformed)
        if "h'" not in cancelled:
            return Verdict.fail("h' survives the transformation")
        return Verdict.ok(f"cancelled parameters: {', '.join(cancelled)}")

    def superspace_limit() -> Verdict:
        transformed = transform_relations(basis_change("full", "superspace", store),
                                          preset("Aq12", store), "transformed")
        limit = limit_relations(transformed, UNIT_POINT, "limit")
        difference = rule_difference(limit, preset("Ah12", store))
        return Verdict.fail(difference) if difference else Verdict.ok()

    def exterior_limit() -> Verdict:
        transformed = transform_relations(basis_change("hprime-only", "exterior", store),
                                          preset("Apq21", store), "transformed")
        limit = limit_relations(transformed, UNIT_POINT, "limit")
        difference = rule_difference(limit, preset("Ah'21", store))
        if difference:
            return Verdict.fail(difference)
        if "h" not in cancelled_parameters(limit, ("h",)):
            return Verdict.fail("h appears in the exterior relations")
        return Verdict.ok()

    def rmatrix_limit() -> Verdict:
        return contract_and_compare(build_rhat_pq(store).rhat,
                                    basis_change("full", "superspace", store),
                                    build_rhat_hh(store).rhat).verdict

    return [
        Check("contraction.relations.superspace", "contraction",
              "The basis change turns the q-superspace relations into the transformed relations",
              superspace_relations),
        Check("contraction.limit.superspace", "contraction",
              "The q -> 1 limit of the transformed relations is the Jordanian superspace",
              superspace_limit),
        Check("contraction.limit.exterior", "contraction",
              "The (p, q) -> (1, 1) limit of the exterior route is the Jordanian "
              "exterior superspace",
              exterior_limit),
        Check("contraction.rmatrix", "contraction",
              "Contracting the two-parameter R-hat gives the Jordanian R-hat entry by entry",
              rmatrix_limit),
    ]


# frt

def _frt_checks(store: FixtureStore) -> List[Check]:
    def fixture():
        return preset("Mhh12", store)

    def coaction():
        return (coaction_relations(preset("Ah12", store), SUPERSPACE_COORDS)
                + coaction_relations(preset("Ah'21", store), EXTERIOR_COORDS))

    def frt_vs(label: str, other: Callable[[], list]) -> Verdict:
        rhat = build_rhat_hh(store).rhat
        failures = []
        for convention in KRON_CONVENTIONS:
            verdict = ideal_equiv(frt_relations(rhat, convention), other())
            if verdict.passed:
                return Verdict.ok(f"Kronecker convention: {convention}", **verdict.details)
            failures.append(f"{convention}: {verdict.witness}")
        return Verdict.fail("; ".join(failures), f"compared with {label}")

    return [
        Check("frt.frt_vs_fixture", "frt",
              "R T1 T2 = T1 T2 R generates the quantum supermatrix relations",
              lambda: frt_vs("fixture", lambda: fixture().relations)),
        Check("frt.coaction_vs_fixture", "frt",
              "T coacting on both Jordanian spaces generates the quantum supermatrix relations",
              lambda: ideal_equiv(coaction(), fixture().relations)),
        Check("frt.frt_vs_coaction", "frt",
              "The FRT and coaction relations agree",
              lambda: frt_vs("coaction", coaction)),
        Check("frt.bialgebra", "frt",
              "Matrix coproduct and counit make the quotient a bialgebra",
              lambda: bialgebra_check(fixture())),
        Check("frt.comodule.superspace", "frt",
              "x_i -> t_ik (x) x_k is a left comodule algebra structure on the Jordanian "
              "superspace",
              lambda: comodule_check(preset("Ah12", store), SUPERSPACE_COORDS, fixture())),
        Check("frt.comodule.exterior", "frt",
              "The same coaction on the Jordanian exterior superspace",
              lambda: comodule_check(preset("Ah'21", store), EXTERIOR_COORDS, fixture())),
    ]


# hopf, star

def _hopf_checks(store: FixtureStore) -> List[Check]:
    def faq12() -> Verdict:
        cs = load_costructure("q-superspace-hopf", store)
        return hopf_check_both(preset("FAq12", store), cs)

    return [Check("hopf.q_superspace", "hopf",
                  "The q-superspace function algebra is a Hopf superalgebra", faq12,
                  algebras=("FAq12",))]


STAR_CLAIMS = {
    "q-superspace-star": "Identity images define a star on the q-superspace when q* = 1/q",
    "pq-exterior-star": "Phi* = Phi, Y* = -Y defines a star on the exterior superspace",
    "h-superspace-star": "theta2* = theta2 - h x defines a star on the Jordanian superspace",
    "hprime-exterior-star": "phi* = phi - h' y2 defines a star on the Jordanian exterior space",
    "undeformed-superstar": "Theta1# = Theta2, Theta2# = -Theta1 defines a superstar",
}


def _star_checks(store: FixtureStore) -> List[Check]:
    checks = []
    for name, claim in STAR_CLAIMS.items():
        algebra = involution_algebra(name, store)
        checks.append(Check(
            f"star.{name}", "star", claim,
            lambda name=name, algebra=algebra: star_check(preset(algebra, store),
                                                          load_involution(name, store)),
            algebras=(algebra,),
        ))

    def h_only() -> Verdict:
        derived = derive_star("h-only", store)
        pre = derived.induced.pre_constraint["theta2"].coefficient(("x",))
        q = GrassmannScalar.even("q")
        expected = (GrassmannScalar.odd("h") + q * GrassmannScalar.odd("hconj")) / (q - 1)
        if pre != expected:
            return Verdict.fail(f"pre-constraint coefficient of x in theta2* is {pre}")
        return derived.verdict

    checks += [
        Check("star.induce.h_only", "star",
              "The q-superspace star induces theta2* = theta2 - h x through the h-only "
              "basis change",
              h_only, algebras=("Aq12", "Ah12")),
        Check("star.induce.hprime_only", "star",
              "The exterior star induces phi* = phi - h' y2 through the h'-only basis change",
              lambda: derive_star("hprime-only", store).verdict, algebras=("Apq21", "Ah'21")),
        Check("star.induce.full", "star",
              "The full basis change induces the Jordanian star modulo hh'",
              lambda: derive_star("full", store).verdict, "adjudication", ("Aq12", "Ah12")),
    ]
    return checks


def _liesuper_checks(options: SuiteOptions, store: FixtureStore) -> List[Check]:
    return [
        Check("liesuper.exp", "liesuper",
              "X = e^u and Theta_k = e^(ku) xi_k satisfy the two-parameter superspace relations",
              lambda: exp_relation_check(options.order, store), algebras=("Lie", "Apq12")),
        Check("liesuper.primitive_hopf", "liesuper",
              "Primitive coproduct, zero counit and S = -g make the enveloping algebra Hopf",
              lambda: primitive_hopf_check(store), algebras=("Lie",)),
        Check("liesuper.mu", "liesuper",
              "The three matrices satisfy the Lie superalgebra brackets for free eps1, eps2",
              mu_check),
    ]


# reps

REPRESENTATIONS = ("q-superspace", "pq-exterior", "pq-superspace", "undeformed-trivial")
EXAMPLES = REPRESENTATIONS + ("h-transformed",)
EXAMPLE_LABELS = {
    "2.2": "q-superspace",
    "2.6": "pq-exterior",
    "3.2": "h-transformed",
    "6.2": "pq-superspace",
}


def resolve_example(example: str) -> str:
    """Map a numbered example label to its representation; names pass through."""
    name = EXAMPLE_LABELS.get(example, example)
    if name not in EXAMPLES:
        known = ", ".join(list(EXAMPLE_LABELS) + list(EXAMPLES))
        raise ValueError(f"Unknown example: {example} (expected one of {known})")
    return name


def _representation_verdict(name: str, store: FixtureStore) -> Verdict:
    spec = load_representation(name, store)
    pres = representation_algebra(name, store)
    parts = {c: rep_check(spec.with_convention(c), pres) for c in CONVENTIONS}
    winners = [c for c, v in parts.items() if v.passed]
    combined = Verdict.combine(parts, f"conventions that pass: {', '.join(winners) or 'none'}")
    if winners:
        return Verdict.ok(*combined.notes, **combined.details)
    return combined


def _transformed_verdict(store: FixtureStore) -> Verdict:
    transformed = transform_rep(load_representation("q-superspace", store),
                                basis_change("full", "superspace", store))
    stated = load_representation("h-transformed", store)
    for name, matrix in stated.images.items():
        diff = first_difference(transformed.images[name], matrix)
        if diff is not None:
            i, j, value = diff
            return Verdict.fail(
                f"transformed image of {name} differs at ({i + 1},{j + 1}) by {value}"
            )
    pres = representation_algebra("h-transformed", store)
    parts = {c: rep_check(stated.with_convention(c), pres) for c in CONVENTIONS}
    winners = [c for c, v in parts.items() if v.passed]
    notes = [f"conventions that pass: {', '.join(winners) or 'none'}"]
    combined = Verdict.combine(parts, *notes)
    return Verdict.ok(*combined.notes, **combined.details) if winners else combined


def _reps_checks(options: SuiteOptions, store: FixtureStore) -> List[Check]:
    example = resolve_example(options.example) if options.example else None
    checks = []
    for name in REPRESENTATIONS:
        if example and example != name:
            continue
        claim = (store.load("representations")[name]["claim"])
        kind = "asserted" if name == "undeformed-trivial" else "adjudication"
        checks.append(Check(f"reps.{name}", "reps", claim,
                            lambda name=name: _representation_verdict(name, store), kind))
    if example in (None, "h-transformed"):
        checks.append(Check(
            "reps.h-transformed", "reps",
            "The transformed q-superspace images satisfy the transformed relations",
            lambda: _transformed_verdict(store), "adjudication",
        ))
    return checks


# engine

def oracle_verdict(name: str, store: Optional[FixtureStore] = None,
                   degree: int = ORACLE_DEGREE) -> Verdict:
    """Compare rewriting with the linear-algebra oracle on every word up to ``degree`` letters."""
    pres = preset(name, store or default_store())
    mismatch = oracle_mismatch(pres, degree)
    scope = "graded pieces" if pres.is_homogeneous else "filtered ideal"
    if mismatch:
        return Verdict.fail(mismatch, f"oracle over the {scope}", degree=degree)
    return Verdict.ok(f"words up to length {degree}", f"oracle over the {scope}", degree=degree)


def _confluence_verdict(name: str, store: FixtureStore) -> Verdict:
    result = check_local_confluence(preset(name, store))
    if result.confluent:
        return Verdict.ok(f"{result.checked} ambiguities resolved")
    return Verdict.fail(f"{' '.join(result.word)}: {result.left} vs {result.right}")


def scalar_law_verdict(cases: int = SCALAR_LAW_CASES, seed: int = 0) -> Verdict:
    """Randomized ring and conjugation laws on small Grassmann scalars."""
    rng = random.Random(seed)
    conj = ConjugationSpec(
        even={"q": GrassmannScalar.even("q").inverse().body().re},
        odd={"h": -GrassmannScalar.odd("h"), "h'": GrassmannScalar.odd("h'")},
    )
    atoms = [GrassmannScalar.one(), GrassmannScalar.even("q"), GrassmannScalar.odd("h"),
             GrassmannScalar.odd("h'"), GrassmannScalar.number(2), GrassmannScalar.imaginary()]

    def sample() -> GrassmannScalar:
        value = GrassmannScalar.zero()
        for _ in range(rng.randint(1, 3)):
            term = GrassmannScalar.number(rng.randint(-3, 3))
            for _ in range(rng.randint(0, 2)):
                term = term * rng.choice(atoms)
            value = value + term
        return value

    for case in range(cases):
        a, b, c = sample(), sample(), sample()
        if (a * b) * c != a * (b * c):
            return Verdict.fail(f"associativity fails on case {case}: {a}, {b}, {c}")
        if a * (b + c) != a * b + a * c:
            return Verdict.fail(f"distributivity fails on case {case}: {a}, {b}, {c}")
        if sconj(a * b, conj) != sconj(b, conj) * sconj(a, conj):
            return Verdict.fail(f"conjugation is not antimultiplicative on case {case}: {a}, {b}")
        if sconj(sconj(a, conj), conj) != a:
            return Verdict.fail(f"conjugation is not involutive on case {case}: {a}")
    return Verdict.ok(f"{cases} cases")


def _engine_checks(options: SuiteOptions, store: FixtureStore) -> List[Check]:
    checks = []
    for name in preset_names(store):
        checks.append(Check(f"engine.confluence.{name}", "engine",
                            f"The rewriting rules of {name} are locally confluent",
                            lambda name=name: _confluence_verdict(name, store),
                            algebras=(name,)))
        checks.append(Check(f"engine.oracle.{name}", "engine",
                            f"Normal forms in {name} agree with the linear-algebra oracle",
                            lambda name=name: oracle_verdict(name, store), algebras=(name,)))
    checks.append(Check("engine.scalar_laws", "engine",
                        "Grassmann scalars satisfy the ring and conjugation laws",
                        scalar_law_verdict))
    return checks


def build_registry(options: SuiteOptions, store: Optional[FixtureStore] = None) -> List[Check]:
    """All checks in report order."""
    store = store or default_store()
    return (
        _rmatrix_checks(options, store)
        + _contraction_checks(store)
        + _frt_checks(store)
        + _hopf_checks(store)
        + _star_checks(store)
        + _liesuper_checks(options, store)
        + _reps_checks(options, store)
        + _engine_checks(options, store)
    )


def select_checks(name: str, options: SuiteOptions,
                  store: Optional[FixtureStore] = None) -> List[Check]:
    """Checks of a suite or check group, narrowed by the matrix, example and algebra filters."""
    if name not in SUITES and name not in CHECK_GROUPS:
        raise ValueError(f"Unknown suite or check group: {name}")
    store = store or default_store()
    if options.algebra and options.algebra not in preset_names(store):
        raise UnknownPreset(options.algebra)
    checks = build_registry(options, store)
    if options.matrix:
        other = "hh" if options.matrix == "pq" else "pq"
        checks = [c for c in checks if not (c.group == "rmatrix" and f".{other}" in c.check_id)]
    if options.algebra:
        checks = [c for c in checks if not c.algebras or options.algebra in c.algebras]
    if name in CHECK_GROUPS:
        checks = [c for c in checks if c.check_id.startswith(CHECK_GROUPS[name])]
    elif name != "all":
        checks = [c for c in checks if c.group == name]
    if not checks:
        raise ValueError(f"No {name} checks match the given filters")
    return checks


def run_check(check: Check) -> CheckRecord:
    """Run one check; engine errors become indeterminate records."""
    start = time.perf_counter()
    try:
        verdict = check.run()
        record = CheckRecord.from_verdict(check.check_id, check.claim, check.kind, verdict)
    except VerificationError as e:
        logger.error(f"Check {check.check_id} could not be decided: {e}")
        record = CheckRecord(check_id=check.check_id, claim=check.claim, kind=check.kind,
                             verdict="indeterminate", witness=str(e))
    record.wall_time = time.perf_counter() - start
    logger.debug(f"{check.check_id} finished in {record.wall_time:.3f}s: {record.verdict}")
    return record


async def run_suite(name: str, options: Optional[SuiteOptions] = None,
                    store: Optional[FixtureStore] = None) -> VerificationReport:
    """Run a suite with at most ``options.jobs`` checks in worker threads at once.

    Args:
        name: Suite name or ``all``
        options: Run options
        store: Fixture store; defaults to the packaged fixtures

    Returns:
        Report with records in registry order
    """
    options = options or SuiteOptions()
    store = store or default_store()
    checks = select_checks(name, options, store)
    logger.info(f"Running suite {name} with {len(checks)} checks")
    records: Dict[int, CheckRecord] = {}
    limiter = anyio.CapacityLimiter(options.jobs)

    async def worker(index: int, check: Check) -> None:
        records[index] = await anyio.to_thread.run_sync(run_check, check, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for index, check in enumerate(checks):
            tg.start_soon(worker, index, check)

    report = VerificationReport(
        suite=name,
        engine_version=__version__,
        fixture_hashes=store.hashes(),
        records=[records[i] for i in range(len(checks))],
    )
    logger.info(f"Suite {name} finished: {len(report.failures(options.strict))} gating failures")
    return report


def run_suite_sync(name: str, options: Optional[SuiteOptions] = None,
                   store: Optional[FixtureStore] = None) -> VerificationReport:
    return anyio.run(run_suite, name, options, store)

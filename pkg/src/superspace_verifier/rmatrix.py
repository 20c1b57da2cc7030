"""R-matrices of the quantum superspace and their checks."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotInvolutive
from .fixture_store import FixtureStore, default_store
from .gradedlinalg import (
    COLUMN, GradedMatrix, ODD_BLOCK, TRANSPOSE_CONVENTIONS, first_difference, graded_kron,
    identity, mat_mul, plain_flip, super_permutation, supertranspose,
)
from .report import Verdict
from .scalars import GrassmannScalar
from .superalgebra import GeneratorSpec, Presentation, SuperPolynomial, normal_form


logger = logging.getLogger(__name__)

PARITIES: Tuple[int, ...] = (0, 1, 1)
GRADED = "graded"
UNGRADED = "ungraded"
MODES = (GRADED, UNGRADED)

# Kronecker sign convention used by the braid and Yang-Baxter checks
KRON_CONVENTION = COLUMN


@dataclass
class RMatrixBundle:
    name: str
    rhat: GradedMatrix
    parities: Tuple[int, ...] = PARITIES
    description: str = ""
    errata: Optional[str] = None


def load_matrix(name: str, store: Optional[FixtureStore] = None,
                parities: Optional[Sequence[int]] = None) -> Tuple[GradedMatrix, dict]:
    entry = (store or default_store()).load("matrices")[name]
    matrix = GradedMatrix.from_text(entry["rows"], parities or entry.get("parities", PARITIES))
    return matrix, entry


def _bundle(name: str, store: Optional[FixtureStore]) -> RMatrixBundle:
    matrix, entry = load_matrix(name, store)
    return RMatrixBundle(name, matrix, tuple(entry["parities"]), entry.get("description", ""),
                         entry.get("errata"))


def build_rhat_pq(store: Optional[FixtureStore] = None) -> RMatrixBundle:
    return _bundle("rhat_pq", store)


def build_rhat_hh(store: Optional[FixtureStore] = None) -> RMatrixBundle:
    return _bundle("rhat_hh", store)


def build_r_h(param: str = "h", convention: str = ODD_BLOCK,
              store: Optional[FixtureStore] = None) -> GradedMatrix:
    """R(h), or R(h') as the supertranspose of R(h) with h renamed to h'."""
    r_h, _ = load_matrix("r_h", store)
    if param == "h":
        return r_h
    if param != "h'":
        raise ValueError(f"Unknown R(h) parameter: {param}")
    rename = {"h": GrassmannScalar.odd("h'")}
    return supertranspose(r_h, convention).map_entries(lambda v: v.substitute_odd(rename))


def _kron(mode: str, convention: str):
    if mode not in MODES:
        raise ValueError(f"Unknown mode: {mode}")

    def kron(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
        return graded_kron(a, b, graded=(mode == GRADED), convention=convention)

    return kron


def _flip(mode: str, parities: Sequence[int]) -> GradedMatrix:
    return super_permutation(parities) if mode == GRADED else plain_flip(parities)


def _difference_verdict(lhs: GradedMatrix, rhs: GradedMatrix, label: str, **details) -> Verdict:
    diff = first_difference(lhs, rhs)
    if diff is None:
        return Verdict.ok(**details)
    i, j, value = diff
    return Verdict.fail(f"entry ({i + 1},{j + 1}) of {label} is {value}", **details)


def braid_check(rhat: GradedMatrix, mode: str = GRADED,
                convention: str = KRON_CONVENTION) -> Verdict:
    """Check R12 R23 R12 = R23 R12 R23 with R12 = R (x) I and R23 = I (x) R."""
    kron = _kron(mode, convention)
    one = identity(PARITIES)
    r12, r23 = kron(rhat, one), kron(one, rhat)
    lhs = mat_mul(mat_mul(r12, r23), r12)
    rhs = mat_mul(mat_mul(r23, r12), r23)
    logger.debug(f"braid check in {mode} mode finished")
    return _difference_verdict(lhs, rhs, "R12 R23 R12 - R23 R12 R23", mode=mode)


def from_rhat(rhat: GradedMatrix, mode: str = GRADED) -> GradedMatrix:
    """R = P R-hat with the flip matching the mode."""
    return mat_mul(_flip(mode, PARITIES), rhat)


def ybe_check(r: GradedMatrix, mode: str = GRADED,
              convention: str = KRON_CONVENTION) -> Verdict:
    """Check R12 R13 R23 = R23 R13 R12 with R13 = P12 R23 P12."""
    kron = _kron(mode, convention)
    one = identity(PARITIES)
    p12 = kron(_flip(mode, PARITIES), one)
    r12, r23 = kron(r, one), kron(one, r)
    r13 = mat_mul(mat_mul(p12, r23), p12)
    lhs = mat_mul(mat_mul(r12, r13), r23)
    rhs = mat_mul(mat_mul(r23, r13), r12)
    return _difference_verdict(lhs, rhs, "R12 R13 R23 - R23 R13 R12", mode=mode)


def involutive_check(rhat: GradedMatrix) -> Verdict:
    return _difference_verdict(mat_mul(rhat, rhat), identity(rhat.row_parities), "R^2 - I")


@dataclass
class ProjectorPair:
    plus: GradedMatrix
    minus: GradedMatrix
    verdict: Verdict


def projectors(rhat: GradedMatrix) -> ProjectorPair:
    """Eigenprojectors (I + R)/2 and (I - R)/2 of an involutive R-hat.

    Raises:
        NotInvolutive: If R-hat squared is not the identity
    """
    square = involutive_check(rhat)
    if not square.passed:
        raise NotInvolutive(square.witness)
    one = identity(rhat.row_parities)
    half = GrassmannScalar.number(1) / 2
    plus = (one + rhat).scale(half)
    minus = (one - rhat).scale(half)
    zero = one - one
    parts = {
        "idempotent_plus": _difference_verdict(mat_mul(plus, plus), plus, "P+^2 - P+"),
        "idempotent_minus": _difference_verdict(mat_mul(minus, minus), minus, "P-^2 - P-"),
        "complete": _difference_verdict(plus + minus, one, "P+ + P- - I"),
        "orthogonal": _difference_verdict(mat_mul(plus, minus), zero, "P+ P-"),
        "orthogonal_reversed": _difference_verdict(mat_mul(minus, plus), zero, "P- P+"),
        "difference": _difference_verdict(plus - minus, rhat, "P+ - P- - R"),
    }
    return ProjectorPair(plus, minus, Verdict.combine(parts))


def _pair_words(coords: Sequence[GeneratorSpec]) -> List[Tuple[str, str]]:
    return [(a.name, b.name) for a in coords for b in coords]


def kernel_relations(pmat: GradedMatrix, coords: Sequence[GeneratorSpec], signed: bool = False,
                     precedence: Optional[Sequence[GeneratorSpec]] = None) -> List[SuperPolynomial]:
    """Quadratic relations P (x (x) x) = 0, reduced to an echelon basis.

    Args:
        pmat: 9x9 projector
        coords: Coordinates in matrix index order
        signed: Multiply column (k, l) by (-1)^(parity of x_l)
        precedence: Generator order for the echelon basis; defaults to ``coords``

    Returns:
        One relation ``lhs - rhs`` per oriented rule
    """
    parities = {g.name: g.parity for g in coords}
    words = _pair_words(coords)
    relations = []
    for row in pmat.entries:
        terms: Dict[Tuple[str, str], GrassmannScalar] = {}
        for (k, l), value in zip(words, row):
            if value.is_zero:
                continue
            sign = -1 if signed and parities[l] else 1
            terms[(k, l)] = terms.get((k, l), GrassmannScalar.zero()) + value * sign
        relations.append(SuperPolynomial(terms, parities))
    pres = Presentation.from_relations("kernel", precedence or coords, relations)
    return rule_relations(pres)


def rule_relations(pres: Presentation) -> List[SuperPolynomial]:
    """Rules of a presentation written back as relations, followed by leftovers."""
    out = [SuperPolynomial.monomial(lhs, pres.parities) - rhs for lhs, rhs in pres.rules.items()]
    return out + list(pres.unresolved)


def compact_form_check(rhat: GradedMatrix, presentation: Presentation,
                       coords: Sequence[str], lhs_scalar=1) -> Verdict:
    """Check s x_i x_j = sum R_{(i,j),(k,l)} x_k x_l modulo the presentation for all (i, j)."""
    scalar = GrassmannScalar.coerce(lhs_scalar)
    words = [(a, b) for a in coords for b in coords]
    for (i, j), row in zip(words, rhat.entries):
        expr = SuperPolynomial({(i, j): scalar}, presentation.parities)
        for word, value in zip(words, row):
            if not value.is_zero:
                expr = expr - SuperPolynomial({word: value}, presentation.parities)
        residual = normal_form(expr, presentation)
        if not residual.is_zero:
            return Verdict.fail(f"index ({i},{j}): {residual}", presentation=presentation.name)
    return Verdict.ok(presentation=presentation.name)


def decompose_check(store: Optional[FixtureStore] = None) -> Verdict:
    """R = P R-hat equals R(h) R(h') once hh' is dropped, plus the factor checks."""
    r = from_rhat(build_rhat_hh(store).rhat)
    r_h = build_r_h("h", store=store)

    def drop(m: GradedMatrix) -> GradedMatrix:
        return m.map_entries(lambda v: v.drop_products(["h", "h'"]))

    working = None
    for convention in TRANSPOSE_CONVENTIONS:
        product = mat_mul(r_h, build_r_h("h'", convention, store))
        if first_difference(drop(r), drop(product)) is None:
            working = convention
            break
    if working is None:
        product = mat_mul(r_h, build_r_h("h'", ODD_BLOCK, store))
        return Verdict.combine({
            "factorization": _difference_verdict(drop(r), drop(product), "R - R(h) R(h')"),
        })
    r_hp = build_r_h("h'", working, store)
    product = mat_mul(r_h, r_hp)
    at_h_zero = {"h": GrassmannScalar.zero()}
    defect = r - product
    parts = {
        "factorization": Verdict.ok(f"supertranspose convention: {working}"),
        "h_zero": _difference_verdict(
            r.map_entries(lambda v: v.substitute_odd(at_h_zero)), r_hp, "R|h=0 - R(h')"
        ),
        "defect_is_hh'": _difference_verdict(
            drop(defect), defect - defect, "R - R(h) R(h') without hh'"
        ),
    }
    for name, factor in (("R(h)", r_h), ("R(h')", r_hp)):
        for mode in MODES:
            parts[f"ybe {name} {mode}"] = ybe_check(factor, mode)
    return Verdict.combine(parts, f"supertranspose convention: {working}")

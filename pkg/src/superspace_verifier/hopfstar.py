"""Hopf axioms and star structures."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Sequence

from .contraction import BasisChange, basis_change
from .errors import ConstraintUnsatisfied, MissingImage
from .fixture_store import FixtureStore, default_store
from .gradedlinalg import mat_inv
from .parsing import parse_scalar
from .presets import preset
from .report import Verdict
from .scalars import ConjugationSpec, GrassmannScalar, sconj, slimit
from .superalgebra import (
    Presentation, SuperPolynomial, anti_substitute, apply_slotwise, embed, normal_form,
    parse_polynomial, relabel, slot_name, substitute, tensor_product, tensor_square,
)


logger = logging.getLogger(__name__)

STAR = "star"
SUPERSTAR = "superstar"
GRADED = "graded"
PLAIN = "plain"
SIGN_CONVENTIONS = ("plain", "koszul")
CONJUGATE_SYMBOLS = {"hconj", "hconj'"}


@dataclass
class CostructureSpec:
    """Images of the generators under coproduct, counit and antipode."""
    name: str
    coproduct: Dict[str, SuperPolynomial]
    counit: Dict[str, GrassmannScalar]
    antipode: Dict[str, SuperPolynomial] = field(default_factory=dict)
    antipode_target: Optional[Presentation] = None
    image_relations: Optional[Presentation] = None

    def counit_of(self, x: SuperPolynomial) -> SuperPolynomial:
        images = {g: SuperPolynomial.constant(v) for g, v in self.counit.items()}
        return substitute(x, images)


def _tensor_parities(pres: Presentation, slots: int = 2) -> Dict[str, int]:
    return {slot_name(g.name, k): g.parity for g in pres.generators for k in range(1, slots + 1)}


def load_costructure(name: str, store: Optional[FixtureStore] = None) -> CostructureSpec:
    entry = (store or default_store()).load("structures")["costructures"][name]
    pres = preset(entry["algebra"], store)
    target = preset(entry.get("antipode_target", entry["algebra"]), store)
    parities = _tensor_parities(pres)
    image_relations = entry.get("image_relations")
    return CostructureSpec(
        name=name,
        coproduct={g: parse_polynomial(t, parities) for g, t in entry["coproduct"].items()},
        counit={g: parse_scalar(t) for g, t in entry["counit"].items()},
        antipode={g: target.parse(t) for g, t in entry.get("antipode", {}).items()},
        antipode_target=target,
        image_relations=preset(image_relations, store) if image_relations else None,
    )


def _residual_verdict(residual: SuperPolynomial, label: str) -> Optional[Verdict]:
    if residual.is_zero:
        return None
    return Verdict.fail(f"{label}: {residual}")


def coproduct_relations_check(pres: Presentation, cs: CostructureSpec,
                              square: Optional[Presentation] = None) -> Verdict:
    """Delta(r) reduces to 0 in the tensor square for every defining relation r."""
    square = square or tensor_square(pres)
    for relation in pres.relations:
        residual = normal_form(substitute(relation, cs.coproduct), square)
        failure = _residual_verdict(residual, f"Delta({relation})")
        if failure:
            return failure
    return Verdict.ok()


def coassociativity_check(pres: Presentation, cs: CostructureSpec,
                          square: Optional[Presentation] = None) -> Verdict:
    square = square or tensor_square(pres)
    cube = tensor_product(pres, pres, pres)
    shift = {slot_name(g.name, k): slot_name(g.name, k + 1)
             for g in pres.generators for k in (1, 2)}

    def delta_left(m: SuperPolynomial) -> SuperPolynomial:
        return substitute(m, cs.coproduct)

    def delta_right(m: SuperPolynomial) -> SuperPolynomial:
        return relabel(substitute(m, cs.coproduct), shift)

    for g in pres.generators:
        image = cs.coproduct[g.name]
        left = apply_slotwise(image, square, [delta_left, lambda m: embed(m, 3)])
        right = apply_slotwise(image, square, [lambda m: embed(m, 1), delta_right])
        failure = _residual_verdict(normal_form(left - right, cube), f"coassociativity on {g.name}")
        if failure:
            return failure
    return Verdict.ok()


def counit_check(pres: Presentation, cs: CostructureSpec,
                 square: Optional[Presentation] = None) -> Verdict:
    """m(eps (x) id) Delta = id = m(id (x) eps) Delta on generators, and eps(r) = 0."""
    square = square or tensor_square(pres)

    def keep(m: SuperPolynomial) -> SuperPolynomial:
        return m

    for g in pres.generators:
        image = cs.coproduct[g.name]
        for side, maps in (("left", [cs.counit_of, keep]), ("right", [keep, cs.counit_of])):
            value = normal_form(apply_slotwise(image, square, maps), pres)
            failure = _residual_verdict(value - pres.letter(g.name), f"{side} counit on {g.name}")
            if failure:
                return failure
    for relation in pres.relations:
        failure = _residual_verdict(cs.counit_of(relation), f"eps({relation})")
        if failure:
            return failure
    return Verdict.ok()


def antipode_check(pres: Presentation, cs: CostructureSpec, sign_convention: str = "plain",
                   square: Optional[Presentation] = None) -> Verdict:
    """Antipode laws on generators and the antihomomorphism property on relations."""
    if sign_convention not in SIGN_CONVENTIONS:
        raise ValueError(f"Unknown sign convention: {sign_convention}")
    koszul = sign_convention == "koszul"
    square = square or tensor_square(pres)
    target = cs.antipode_target or pres

    def antipode(m: SuperPolynomial) -> SuperPolynomial:
        return anti_substitute(m, cs.antipode, koszul=koszul)

    def keep(m: SuperPolynomial) -> SuperPolynomial:
        return m

    for g in pres.generators:
        image = cs.coproduct[g.name]
        expected = cs.counit_of(pres.letter(g.name))
        for side, maps in (("left", [antipode, keep]), ("right", [keep, antipode])):
            value = normal_form(apply_slotwise(image, square, maps), target)
            failure = _residual_verdict(value - expected, f"{side} antipode law on {g.name}")
            if failure:
                return failure
    for relation in pres.relations:
        residual = normal_form(antipode(relation), target)
        failure = _residual_verdict(residual, f"S({relation})")
        if failure:
            return failure
    if cs.image_relations is not None:
        for relation in cs.image_relations.relations:
            residual = normal_form(substitute(relation, cs.antipode), target)
            failure = _residual_verdict(
                residual, f"{cs.image_relations.name} relation {relation} on antipode images"
            )
            if failure:
                return failure
    return Verdict.ok(f"antipode sign convention: {sign_convention}")


def hopf_check(pres: Presentation, cs: CostructureSpec, sign_convention: str = "plain") -> Verdict:
    """All Hopf axioms for one antipode sign convention."""
    square = tensor_square(pres)
    parts = {
        "coproduct": coproduct_relations_check(pres, cs, square),
        "coassociativity": coassociativity_check(pres, cs, square),
        "counit": counit_check(pres, cs, square),
    }
    if cs.antipode:
        parts["antipode"] = antipode_check(pres, cs, sign_convention, square)
    return Verdict.combine(parts, f"sign convention: {sign_convention}")


def hopf_check_both(pres: Presentation, cs: CostructureSpec) -> Verdict:
    """Run both antipode sign conventions and record which validate the axioms."""
    results = {c: hopf_check(pres, cs, c) for c in SIGN_CONVENTIONS}
    winners = [c for c, v in results.items() if v.passed]
    verdict = Verdict.combine(
        {f"{c} convention": v for c, v in results.items()},
        f"conventions that pass: {', '.join(winners) or 'none'}",
    )
    if winners and not verdict.passed:
        verdict.passed = True
        verdict.witness = None
    return verdict


# star structures

@dataclass
class InvolutionSpec:
    name: str
    images: Dict[str, SuperPolynomial]
    conj: ConjugationSpec
    flavor: str = STAR
    convention: str = GRADED


def load_conjugation(name: str, store: Optional[FixtureStore] = None) -> ConjugationSpec:
    entry = (store or default_store()).load("structures")["conjugations"][name]
    return ConjugationSpec(
        even={k: parse_scalar(v).body().re for k, v in entry["even"].items()},
        odd={k: parse_scalar(v) for k, v in entry["odd"].items()},
    )


def load_involution(name: str, store: Optional[FixtureStore] = None,
                    conjugation: Optional[str] = None,
                    convention: str = GRADED) -> InvolutionSpec:
    entry = (store or default_store()).load("structures")["involutions"][name]
    pres = preset(entry["algebra"], store)
    return InvolutionSpec(
        name=name,
        images={g: pres.parse(t) for g, t in entry["images"].items()},
        conj=load_conjugation(conjugation or entry["conjugation"], store),
        flavor=entry.get("flavor", STAR),
        convention=convention,
    )


def involution_algebra(name: str, store: Optional[FixtureStore] = None) -> str:
    return (store or default_store()).load("structures")["involutions"][name]["algebra"]


def star_image(x: SuperPolynomial, inv: InvolutionSpec) -> SuperPolynomial:
    """Extend the involution from generators to polynomials.

    The star is antimultiplicative without Koszul sign. Under the ``graded`` convention a
    coefficient moves to the right as its reversed conjugate; under ``plain`` it stays on
    the left. The superstar is multiplicative.
    """
    result = SuperPolynomial()
    for word, coeff in x.terms.items():
        for letter in word:
            if letter not in inv.images:
                raise MissingImage(letter)
        if inv.flavor == SUPERSTAR:
            term = SuperPolynomial.constant(sconj(coeff, inv.conj, reverse=False))
            for letter in word:
                term = term * inv.images[letter]
        else:
            term = SuperPolynomial.constant(1)
            for letter in reversed(word):
                term = term * inv.images[letter]
            if inv.convention == GRADED:
                term = term * sconj(coeff, inv.conj, reverse=True)
            else:
                term = sconj(coeff, inv.conj, reverse=False) * term
        result = result + term
    return result


def star_check(pres: Presentation, inv: InvolutionSpec) -> Verdict:
    """Ideal invariance on relations and involutivity on generators."""
    for relation in pres.relations:
        residual = normal_form(star_image(relation, inv), pres)
        if not residual.is_zero:
            return Verdict.fail(f"({relation})* = {residual}", flavor=inv.flavor)
    for g in pres.generators:
        twice = normal_form(star_image(inv.images[g.name], inv), pres)
        expected = pres.letter(g.name)
        if inv.flavor == SUPERSTAR and g.parity:
            expected = -expected
        if twice != expected:
            return Verdict.fail(f"({g.name}*)* = {twice}", flavor=inv.flavor)
    return Verdict.ok(flavor=inv.flavor)


@dataclass
class InducedStar:
    pre_constraint: Dict[str, SuperPolynomial]
    images: Dict[str, SuperPolynomial]


def induce_star(bc: BasisChange, src_inv: InvolutionSpec,
                constraints: Optional[Mapping[str, GrassmannScalar]] = None,
                point: Optional[Mapping[str, int]] = None) -> InducedStar:
    """Push an involution on the source coordinates through ``bc``.

    Args:
        bc: Basis change old = g * new
        src_inv: Involution on the source coordinates
        constraints: Values for conjugate symbols such as ``hconj -> -h``
        point: Optional limit point applied after the constraints

    Returns:
        The target images before and after the constraints

    Raises:
        ConstraintUnsatisfied: If a conjugate symbol survives the constraints
    """
    constraints = constraints or {}
    ginv = mat_inv(bc.matrix)
    source_parities = dict(zip(bc.source, bc.parities))
    old_images = bc.old_in_new()
    pre, images = {}, {}
    for j, name in enumerate(bc.target):
        expr = SuperPolynomial({}, source_parities)
        for i, old in enumerate(bc.source):
            expr = expr + SuperPolynomial({(old,): ginv[j, i]}, source_parities)
        starred = substitute(star_image(expr, src_inv), old_images)
        pre[name] = starred
        constrained = starred.map_coefficients(lambda c: c.substitute_odd(constraints))
        if point:
            constrained = constrained.map_coefficients(lambda c: slimit(c, point, f"{name}*"))
        leftover = {s for c in constrained.terms.values() for s in c.odd_symbols()}
        if leftover & CONJUGATE_SYMBOLS:
            logger.error(f"Constraints leave {sorted(leftover & CONJUGATE_SYMBOLS)} in {name}*")
            raise ConstraintUnsatisfied(f"{name}* = {constrained}")
        images[name] = constrained
    return InducedStar(pre, images)


@dataclass(frozen=True)
class StarRoute:
    kind: str
    space: str
    source: str
    conjugation: str
    convention: str
    constraints: Mapping[str, str]
    target: str
    modulo: Sequence[str] = ()


STAR_ROUTES: Dict[str, StarRoute] = {
    "h-only": StarRoute("h-only", "superspace", "q-superspace-star", "formal", GRADED,
                        {"hconj": "-h"}, "h-superspace-star"),
    "hprime-only": StarRoute("hprime-only", "exterior", "pq-exterior-star", "formal", GRADED,
                             {"hconj'": "h'"}, "hprime-exterior-star"),
    "full": StarRoute("full", "superspace", "q-superspace-star", "formal-pq2", PLAIN,
                      {"hconj": "-h", "hconj'": "h'"}, "h-superspace-star", ("h", "h'")),
}


@dataclass
class DerivedStar:
    route: StarRoute
    induced: InducedStar
    verdict: Verdict


def derive_star(kind: str, store: Optional[FixtureStore] = None) -> DerivedStar:
    """Induce a star through a built-in basis change and compare with the stated one."""
    if kind not in STAR_ROUTES:
        raise ValueError(f"Unknown star route: {kind}")
    route = STAR_ROUTES[kind]
    bc = basis_change(route.kind, route.space, store)
    source = load_involution(route.source, store, route.conjugation, route.convention)
    constraints = {k: parse_scalar(v) for k, v in route.constraints.items()}
    induced = induce_star(bc, source, constraints)
    expected = load_involution(route.target, store)
    reduce: Callable[[SuperPolynomial], SuperPolynomial] = (
        (lambda x: x.map_coefficients(lambda c: c.drop_products(route.modulo)))
        if route.modulo else (lambda x: x)
    )
    for name, image in induced.images.items():
        if reduce(image - expected.images[name]) != 0:
            return DerivedStar(route, induced, Verdict.fail(
                f"{name}* = {image}, expected {expected.images[name]}"
            ))
    notes = [f"{name}* = {image}" for name, image in induced.images.items()]
    if route.modulo:
        notes.append(f"agreement modulo {'*'.join(route.modulo)}")
    return DerivedStar(route, induced, Verdict.ok(*notes))

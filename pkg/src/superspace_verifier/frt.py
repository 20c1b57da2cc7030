"""Quantum supermatrix relations: FRT, coaction and the bialgebra structure."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NonQuadraticRelation
from .fixture_store import FixtureStore
from .gradedlinalg import COLUMN, GradedMatrix, graded_kron, identity, mat_mul, super_permutation
from .hopfstar import (
    CostructureSpec, coassociativity_check, coproduct_relations_check, counit_check,
)
from .linear import field_rank, scalar_rows_to_field
from .presets import preset
from .report import Verdict
from .scalars import GrassmannScalar, odd_monomials
from .superalgebra import (
    GeneratorSpec, Presentation, SuperPolynomial, apply_slotwise, embed, normal_form,
    slot_name, slot_parts, substitute, tensor_product,
)


logger = logging.getLogger(__name__)

T_LAYOUT: Tuple[Tuple[str, ...], ...] = (
    ("a", "alpha", "beta"),
    ("gamma", "b", "c"),
    ("delta", "d", "e"),
)
T_PARITIES = (0, 1, 1)


@dataclass
class QuantumMatrixScheme:
    """Generators t_ij of a 3x3 supermatrix over the grading ``parities``."""
    layout: Tuple[Tuple[str, ...], ...] = T_LAYOUT
    parities: Tuple[int, ...] = T_PARITIES

    @property
    def generators(self) -> List[GeneratorSpec]:
        return [
            GeneratorSpec(name, (self.parities[i] + self.parities[j]) % 2)
            for i, row in enumerate(self.layout) for j, name in enumerate(row)
        ]

    @property
    def size(self) -> int:
        return len(self.parities)

    def entry(self, i: int, j: int, slot: Optional[int] = None) -> SuperPolynomial:
        name = self.layout[i][j]
        parity = (self.parities[i] + self.parities[j]) % 2
        return SuperPolynomial.letter(slot_name(name, slot) if slot else name, parity)

    def matrix(self) -> GradedMatrix:
        return GradedMatrix(self.parities, self.parities, [
            [self.entry(i, j) for j in range(self.size)] for i in range(self.size)
        ])

    def free_presentation(self) -> Presentation:
        return Presentation("T", self.generators, {})

    def costructure(self) -> CostructureSpec:
        """Matrix coproduct Delta(t_ij) = sum_k t_ik (x) t_kj and counit delta_ij."""
        coproduct, counit = {}, {}
        for i, row in enumerate(self.layout):
            for j, name in enumerate(row):
                image = SuperPolynomial()
                for k in range(self.size):
                    image = image + self.entry(i, k, 1) * self.entry(k, j, 2)
                coproduct[name] = image
                counit[name] = GrassmannScalar.number(1 if i == j else 0)
        return CostructureSpec("matrix", coproduct, counit)


SCHEME = QuantumMatrixScheme()


def _nonzero_entries(m: GradedMatrix) -> List[SuperPolynomial]:
    out = []
    for row in m.entries:
        for value in row:
            if isinstance(value, SuperPolynomial) and not value.is_zero:
                out.append(value)
    return out


def frt_relations(rhat: GradedMatrix, convention: str = COLUMN,
                  scheme: QuantumMatrixScheme = SCHEME) -> List[SuperPolynomial]:
    """Nonzero entries of R T1 T2 - T1 T2 R with T1 = T (x) I and T2 = P T1 P."""
    t = scheme.matrix()
    flip = super_permutation(scheme.parities)
    t1 = graded_kron(t, identity(scheme.parities), convention=convention)
    t2 = mat_mul(mat_mul(flip, t1), flip)
    t12 = mat_mul(t1, t2)
    difference = mat_mul(rhat, t12) - mat_mul(t12, rhat)
    relations = _nonzero_entries(difference)
    logger.debug(f"FRT construction produced {len(relations)} relations")
    return relations


def coaction_relations(space: Presentation, coords: Sequence[str],
                       scheme: QuantumMatrixScheme = SCHEME) -> List[SuperPolynomial]:
    """Conditions on the t_ij for x_i -> sum_j t_ij x_j to respect the relations of ``space``.

    The t's supercommute with the coordinates; after ordering every t to the left the
    t-coefficient of each PBW coordinate monomial must vanish.
    """
    mixed = tensor_product(scheme.free_presentation(), space)
    images = {}
    for i, x in enumerate(coords):
        image = SuperPolynomial()
        for j, y in enumerate(coords):
            image = image + scheme.entry(i, j, 1) * embed(space.letter(y), 2)
        images[slot_name(x, 2)] = image
    out = []
    for relation in space.relations:
        ordered = normal_form(substitute(embed(relation, 2), images), mixed)
        groups: Dict[Tuple[str, ...], SuperPolynomial] = {}
        for word, coeff in ordered.terms.items():
            t_part, x_part = slot_parts(word, 2)
            piece = SuperPolynomial({t_part: coeff}, {g.name: g.parity for g in scheme.generators})
            groups[x_part] = groups.get(x_part, SuperPolynomial()) + piece
        out += [g for g in groups.values() if not g.is_zero]
    return out


def _closure_rows(relations: Sequence[SuperPolynomial], odd_names: Sequence[str],
                  imaginary: bool) -> List[Dict]:
    units = [GrassmannScalar.one()] + ([GrassmannScalar.imaginary()] if imaginary else [])
    monomials = odd_monomials(odd_names)
    rows = [(u * m * r).terms for r in relations for m in monomials for u in units]
    return scalar_rows_to_field(rows)


def _rank(rows: Sequence[Dict]) -> int:
    columns = list({c for row in rows for c in row})
    return field_rank(rows, columns)


def _check_degree(relations: Sequence[SuperPolynomial], degree: int) -> None:
    for r in relations:
        if any(len(word) != degree for word in r.terms):
            raise NonQuadraticRelation(str(r))


def ideal_equiv(a: Sequence[SuperPolynomial], b: Sequence[SuperPolynomial],
                degree: int = 2) -> Verdict:
    """Decide whether two homogeneous relation sets span the same degree component.

    Args:
        a: First relation set
        b: Second relation set
        degree: Common degree of every relation

    Returns:
        Verdict with the ranks; the witness is a relation outside the other span

    Raises:
        NonQuadraticRelation: If a relation is not homogeneous of ``degree``
    """
    a, b = list(a), list(b)
    _check_degree(a + b, degree)
    odd_names = sorted({s for r in a + b for c in r.terms.values() for s in c.odd_symbols()})
    imaginary = any(
        part for r in a + b for c in r.terms.values() for _, part, _ in c.components()
    )
    rows_a = _closure_rows(a, odd_names, imaginary)
    rows_b = _closure_rows(b, odd_names, imaginary)
    rank_a, rank_b = _rank(rows_a), _rank(rows_b)
    rank_union = _rank(rows_a + rows_b)
    details = {"rank_a": rank_a, "rank_b": rank_b, "rank_union": rank_union}
    if rank_a == rank_b == rank_union:
        return Verdict.ok(**details)
    for relations, own, other_rows, other_rank, label in (
        (a, "first", rows_b, rank_b, "second"),
        (b, "second", rows_a, rank_a, "first"),
    ):
        if other_rank == rank_union:
            continue
        for r in relations:
            extended = other_rows + _closure_rows([r], odd_names, imaginary)
            if _rank(extended) > other_rank:
                return Verdict.fail(f"{r} = 0 from the {own} set is not implied by the {label}",
                                    **details)
    return Verdict.fail("spans differ", **details)


def bialgebra_check(pres: Presentation, scheme: QuantumMatrixScheme = SCHEME) -> Verdict:
    """Matrix coproduct and counit on a quotient of the free algebra on the t_ij."""
    cs = scheme.costructure()
    parts = {
        "coproduct": coproduct_relations_check(pres, cs),
        "coassociativity": coassociativity_check(pres, cs),
        "counit": counit_check(pres, cs),
    }
    notes = []
    if pres.unresolved:
        notes.append(f"{len(pres.unresolved)} relations have no unit coefficient")
    return Verdict.combine(parts, *notes)


def comodule_check(space: Presentation, coords: Sequence[str], matrices: Presentation,
                   scheme: QuantumMatrixScheme = SCHEME) -> Verdict:
    """Left coaction x_i -> sum_k t_ik (x) x_k on ``space`` over ``matrices``."""
    mixed = tensor_product(matrices, space)
    cube = tensor_product(matrices, matrices, space)
    coaction = {}
    for i, x in enumerate(coords):
        image = SuperPolynomial()
        for k, y in enumerate(coords):
            image = image + scheme.entry(i, k, 1) * embed(space.letter(y), 2)
        coaction[x] = image

    for relation in space.relations:
        residual = normal_form(substitute(relation, coaction), mixed)
        if not residual.is_zero:
            return Verdict.fail(f"delta({relation}) = {residual}")

    cs = scheme.costructure()
    shift = {slot_name(name, k): slot_name(name, k + 1)
             for name in list(cs.coproduct) + list(coords) for k in (1, 2)}

    def delta_matrix(m: SuperPolynomial) -> SuperPolynomial:
        return substitute(m, cs.coproduct)

    def coact_shifted(m: SuperPolynomial) -> SuperPolynomial:
        image = substitute(m, coaction)
        return SuperPolynomial(
            {tuple(shift.get(letter, letter) for letter in w): c for w, c in image.terms.items()},
            {shift.get(n, n): p for n, p in image.parities.items()},
        )

    for x in coords:
        image = coaction[x]
        left = apply_slotwise(image, mixed, [delta_matrix, lambda m: embed(m, 3)])
        right = apply_slotwise(image, mixed, [lambda m: embed(m, 1), coact_shifted])
        residual = normal_form(left - right, cube)
        if not residual.is_zero:
            return Verdict.fail(f"coassociativity on {x}: {residual}")
        counit = apply_slotwise(image, mixed, [cs.counit_of, lambda m: m])
        if normal_form(counit, space) != space.letter(x):
            return Verdict.fail(f"counit on {x}: {counit}")
    return Verdict.ok()


def mhh12(store: Optional[FixtureStore] = None) -> Presentation:
    return preset("Mhh12", store)

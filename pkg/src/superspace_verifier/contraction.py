"""Basis changes, transformed relations and singular limits."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import NonInvertibleBasisChange, PoleAtLimit, Singular
from .fixture_store import FixtureStore, default_store
from .gradedlinalg import (
    COLUMN, KRON_CONVENTIONS, GradedMatrix, first_difference, graded_kron, mat_inv, mat_mul,
)
from .report import Verdict
from .scalars import slimit
from .superalgebra import GeneratorSpec, Presentation, SuperPolynomial, substitute


logger = logging.getLogger(__name__)

SPACES: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...], Tuple[int, ...]]] = {
    "superspace": (("X", "Theta1", "Theta2"), ("x", "theta1", "theta2"), (0, 1, 1)),
    "exterior": (("Phi", "Y1", "Y2"), ("phi", "y1", "y2"), (1, 0, 0)),
}

G_FIXTURES = {
    "full": "g_full",
    "h-only": "g_h_only",
    "hprime-only": "g_hprime_only",
    "identity": "g_identity",
}

UNIT_POINT = {"p": 1, "q": 1}


@dataclass
class BasisChange:
    """old = g * new, coordinate by coordinate."""
    name: str
    matrix: GradedMatrix
    source: Tuple[str, ...]
    target: Tuple[str, ...]

    def __post_init__(self):
        if not self.matrix.is_even_supermatrix():
            raise NonInvertibleBasisChange(f"{self.name}: entry parities do not match the grading")
        if any(not self.matrix[i, i].is_unit for i in range(len(self.source))):
            raise NonInvertibleBasisChange(f"{self.name}: diagonal entries must be units")

    @property
    def parities(self) -> Tuple[int, ...]:
        return self.matrix.row_parities

    def old_in_new(self) -> Dict[str, SuperPolynomial]:
        """Images X_i = sum_j g_ij x_j of the source coordinates."""
        parities = dict(zip(self.target, self.parities))
        images = {}
        for i, old in enumerate(self.source):
            image = SuperPolynomial({}, parities)
            for j, new in enumerate(self.target):
                image = image + SuperPolynomial({(new,): self.matrix[i, j]}, parities)
            images[old] = image
        return images


def basis_change(kind: str = "full", space: str = "superspace",
                 store: Optional[FixtureStore] = None) -> BasisChange:
    """Built-in g matrix for the superspace or exterior coordinates."""
    if kind not in G_FIXTURES:
        raise ValueError(f"Unknown basis change: {kind}")
    if space not in SPACES:
        raise ValueError(f"Unknown coordinate space: {space}")
    source, target, parities = SPACES[space]
    entry = (store or default_store()).load("matrices")[G_FIXTURES[kind]]
    matrix = GradedMatrix.from_text(entry["rows"], parities)
    return BasisChange(f"{kind}/{space}", matrix, source, target)


def inverse(bc: BasisChange) -> BasisChange:
    try:
        matrix = mat_inv(bc.matrix)
    except Singular as e:
        raise NonInvertibleBasisChange(str(e)) from e
    return BasisChange(f"inverse of {bc.name}", matrix, bc.target, bc.source)


def _target_generators(bc: BasisChange, src: Presentation) -> List[GeneratorSpec]:
    position = {name: i for i, name in enumerate(bc.source)}
    return [GeneratorSpec(bc.target[position[g.name]], g.parity) for g in src.generators]


def transform_relations(bc: BasisChange, src: Presentation,
                        name: Optional[str] = None) -> Presentation:
    """Rewrite the defining relations of ``src`` in the new coordinates.

    Args:
        bc: Basis change whose source coordinates are the generators of ``src``
        src: Presentation to transform
        name: Name of the result

    Returns:
        The echelon-oriented presentation on the target coordinates
    """
    missing = set(g.name for g in src.generators) - set(bc.source)
    if missing:
        raise NonInvertibleBasisChange(f"{bc.name} does not cover {sorted(missing)}")
    images = bc.old_in_new()
    relations = [substitute(r, images) for r in src.relations]
    label = name or f"{src.name} in {bc.name} coordinates"
    return Presentation.from_relations(label, _target_generators(bc, src), relations)


def limit_relations(source: Union[Presentation, Sequence[SuperPolynomial]],
                    point: Mapping[str, int], name: str = "limit",
                    generators: Optional[Sequence[GeneratorSpec]] = None) -> Presentation:
    """Evaluate every coefficient at ``point`` and orient the result.

    A presentation contributes its rules, which are pole-free exactly when the
    contraction is regular.

    Raises:
        PoleAtLimit: Naming the relation whose coefficient has a pole
    """
    if isinstance(source, Presentation):
        relations = [SuperPolynomial.monomial(lhs, source.parities) - rhs
                     for lhs, rhs in source.rules.items()]
        relations += list(source.unresolved)
        generators = generators or source.generators
    else:
        relations = list(source)
        if generators is None:
            raise ValueError("Generators are required for a bare relation list")
    limited = []
    for relation in relations:
        location = f"relation {relation} = 0"
        try:
            limited.append(relation.map_coefficients(lambda c: slimit(c, point, location)))
        except PoleAtLimit as e:
            logger.error(f"Limit failed: {e}")
            raise
    return Presentation.from_relations(name, generators, limited)


def contract_rmatrix(rhat: GradedMatrix, bc: BasisChange,
                     point: Optional[Mapping[str, int]] = None,
                     convention: str = COLUMN) -> GradedMatrix:
    """(g (x) g)^-1 R (g (x) g), then the limit at ``point`` entry by entry.

    Raises:
        PoleAtLimit: With the entry coordinates as location
    """
    gg = graded_kron(bc.matrix, bc.matrix, convention=convention)
    conjugated = mat_mul(mat_mul(mat_inv(gg), rhat), gg)
    if point is None:
        return conjugated
    entries = []
    for i, row in enumerate(conjugated.entries):
        entries.append([
            slimit(value, point, f"entry ({i + 1},{j + 1})") for j, value in enumerate(row)
        ])
    return GradedMatrix(conjugated.row_parities, conjugated.col_parities, entries)


@dataclass
class ContractionResult:
    verdict: Verdict
    convention: Optional[str] = None
    matrices: Dict[str, GradedMatrix] = field(default_factory=dict)


def contract_and_compare(rhat: GradedMatrix, bc: BasisChange, expected: GradedMatrix,
                         point: Optional[Mapping[str, int]] = None) -> ContractionResult:
    """Contract under both Kronecker conventions and report which one gives ``expected``."""
    point = UNIT_POINT if point is None else point
    matrices = {}
    witnesses = []
    for convention in KRON_CONVENTIONS:
        matrix = contract_rmatrix(rhat, bc, point, convention)
        matrices[convention] = matrix
        diff = first_difference(matrix, expected)
        if diff is None:
            logger.info(f"Contraction with {bc.name} matches under the {convention} convention")
            return ContractionResult(
                Verdict.ok(f"Kronecker convention: {convention}", convention=convention),
                convention, matrices,
            )
        i, j, value = diff
        witnesses.append(f"{convention}: entry ({i + 1},{j + 1}) differs by {value}")
    return ContractionResult(Verdict.fail("; ".join(witnesses)), None, matrices)


def cancelled_parameters(pres: Presentation, candidates: Sequence[str] = ("p", "h'")) -> List[str]:
    """Candidate parameters that appear in no rule of ``pres``."""
    present = set()
    for rhs in pres.rules.values():
        for coeff in rhs.terms.values():
            present |= coeff.even_symbols() | coeff.odd_symbols()
    return [name for name in candidates if name not in present]

"""Matrix representations of presented superalgebras."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .contraction import BasisChange
from .errors import MissingImage
from .fixture_store import FixtureStore, default_store
from .gradedlinalg import GradedMatrix, first_difference, identity, mat_inv, zeros
from .presets import preset
from .report import Verdict
from .superalgebra import Presentation, SuperPolynomial


logger = logging.getLogger(__name__)

LEFT = "left"
OPPOSITE = "opposite"
GRADED_OPPOSITE = "graded-opposite"
CONVENTIONS = (LEFT, OPPOSITE, GRADED_OPPOSITE)


@dataclass
class RepresentationSpec:
    """Matrix images of generators and the rule for extending them to words."""
    images: Dict[str, GradedMatrix]
    convention: str = LEFT
    name: str = ""

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"Unknown representation convention: {self.convention}")

    @property
    def size(self) -> int:
        return next(iter(self.images.values())).shape[0]

    def with_convention(self, convention: str) -> "RepresentationSpec":
        return RepresentationSpec(self.images, convention, self.name)

    def word_image(self, word: Sequence[str], parities: Dict[str, int]) -> GradedMatrix:
        for letter in word:
            if letter not in self.images:
                raise MissingImage(letter)
        one = identity([0] * self.size)
        if self.convention == LEFT:
            order = list(word)
            sign = 1
        else:
            order = list(reversed(word))
            sign = 1
            if self.convention == GRADED_OPPOSITE:
                odd = [parities[letter] for letter in word]
                swaps = sum(1 for i, j in itertools.combinations(range(len(word)), 2)
                            if odd[i] and odd[j])
                sign = -1 if swaps % 2 else 1
        result = one
        for letter in order:
            result = result @ self.images[letter]
        return result if sign > 0 else -result

    def evaluate(self, x: SuperPolynomial) -> GradedMatrix:
        """rho(x) with each coefficient multiplied on the left."""
        n = self.size
        total = zeros([0] * n, [0] * n)
        for word, coeff in x.terms.items():
            total = total + self.word_image(word, x.parities).scale(coeff)
        return total


def load_representation(name: str, store: Optional[FixtureStore] = None,
                        convention: str = LEFT) -> RepresentationSpec:
    entry = (store or default_store()).load("representations")[name]
    images = {}
    for generator, rows in entry["images"].items():
        images[generator] = GradedMatrix.from_text(rows, [0] * len(rows))
    return RepresentationSpec(images, convention, name)


def representation_algebra(name: str, store: Optional[FixtureStore] = None) -> Presentation:
    entry = (store or default_store()).load("representations")[name]
    return preset(entry["algebra"], store)


def rep_check(spec: RepresentationSpec, pres: Presentation) -> Verdict:
    """Evaluate every defining relation; the witness names the first nonzero entry."""
    for g in pres.generators:
        if g.name not in spec.images:
            raise MissingImage(g.name)
    n = spec.size
    empty = zeros([0] * n, [0] * n)
    parts = {}
    for relation in pres.relations:
        value = spec.evaluate(relation)
        diff = first_difference(value, empty)
        if diff is None:
            parts[f"{relation} = 0"] = Verdict.ok()
        else:
            i, j, entry = diff
            parts[f"{relation} = 0"] = Verdict.fail(f"entry ({i + 1},{j + 1}) is {entry}")
    verdict = Verdict.combine(parts, f"convention: {spec.convention}")
    logger.debug(f"{spec.name or 'representation'} under {spec.convention}: {verdict.passed}")
    return verdict


def conventions_passing(spec: RepresentationSpec, pres: Presentation) -> List[str]:
    return [c for c in CONVENTIONS if rep_check(spec.with_convention(c), pres).passed]


def transform_rep(spec: RepresentationSpec, bc: BasisChange) -> RepresentationSpec:
    """Images of the new coordinates: rho(x_j) = sum_i (g^-1)_ji rho(X_i)."""
    ginv = mat_inv(bc.matrix)
    n = spec.size
    images = {}
    for j, new in enumerate(bc.target):
        image = zeros([0] * n, [0] * n)
        for i, old in enumerate(bc.source):
            if old not in spec.images:
                raise MissingImage(old)
            coeff = ginv[j, i]
            if not coeff.is_zero:
                image = image + spec.images[old].scale(coeff)
        images[new] = image
    return RepresentationSpec(images, spec.convention, f"{spec.name} in {bc.name} coordinates")

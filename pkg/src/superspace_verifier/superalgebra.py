"""Free Z2-graded algebras, presentations and PBW normal forms."""

import itertools
import logging
import re
import threading
from dataclasses import dataclass
from typing import (
    Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union,
)

from .errors import MissingImage, NonTerminating, OracleUnavailable, UnknownGenerator
from .linear import ModuleEchelon
from .parsing import LiteralParser
from .scalars import GrassmannScalar


logger = logging.getLogger(__name__)

Word = Tuple[str, ...]
Terms = Dict[Word, GrassmannScalar]
RelationEntry = Union[str, Mapping[str, Optional[str]]]

_ATOMIC = re.compile(r"-?[A-Za-z0-9_']+")
_ONE = GrassmannScalar.one()


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    parity: int


def _accumulate(target: Terms, coeff: GrassmannScalar,
                source: Mapping[Word, GrassmannScalar]) -> None:
    for word, value in source.items():
        term = coeff * value
        if word in target:
            term = target[word] + term
        if term.is_zero:
            target.pop(word, None)
        else:
            target[word] = term


class SuperPolynomial:
    """Element of a free superalgebra with Grassmann coefficients written on the left."""

    __slots__ = ("terms", "parities")

    def __init__(self, terms: Optional[Mapping[Word, GrassmannScalar]] = None,
                 parities: Optional[Mapping[str, int]] = None):
        self.terms: Terms = {w: c for w, c in (terms or {}).items() if not c.is_zero}
        self.parities: Dict[str, int] = dict(parities or {})

    @classmethod
    def letter(cls, name: str, parity: int) -> "SuperPolynomial":
        return cls({(name,): _ONE}, {name: parity})

    @classmethod
    def constant(cls, value, parities: Optional[Mapping[str, int]] = None) -> "SuperPolynomial":
        return cls({(): GrassmannScalar.coerce(value)}, parities)

    @classmethod
    def monomial(cls, word: Sequence[str], parities: Mapping[str, int],
                 coeff: Optional[GrassmannScalar] = None) -> "SuperPolynomial":
        return cls({tuple(word): coeff if coeff is not None else _ONE}, parities)

    def word_parity(self, word: Sequence[str]) -> int:
        return sum(self.parities[letter] for letter in word) % 2

    def _coerce(self, other) -> Optional["SuperPolynomial"]:
        if isinstance(other, SuperPolynomial):
            return other
        scalar = GrassmannScalar.coerce(other)
        if scalar is None:
            return None
        return SuperPolynomial.constant(scalar, self.parities)

    def _merged(self, other: "SuperPolynomial") -> Dict[str, int]:
        return {**self.parities, **other.parities}

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        _accumulate(terms, _ONE, other.terms)
        return SuperPolynomial(terms, self._merged(other))

    __radd__ = __add__

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial({w: -c for w, c in self.terms.items()}, self.parities)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, SuperPolynomial):
            parities = self._merged(other)
            terms: Terms = {}
            for w1, c1 in self.terms.items():
                parity = sum(parities[letter] for letter in w1) % 2
                for w2, c2 in other.terms.items():
                    _accumulate(terms, c1 * c2.twist(parity), {w1 + w2: _ONE})
            return SuperPolynomial(terms, parities)
        scalar = GrassmannScalar.coerce(other)
        if scalar is None:
            return NotImplemented
        return SuperPolynomial(
            {w: c * scalar.twist(self.word_parity(w)) for w, c in self.terms.items()},
            self.parities,
        )

    def __rmul__(self, other):
        scalar = GrassmannScalar.coerce(other)
        if scalar is None:
            return NotImplemented
        return SuperPolynomial({w: scalar * c for w, c in self.terms.items()}, self.parities)

    def __truediv__(self, other):
        scalar = GrassmannScalar.coerce(other)
        if scalar is None:
            return NotImplemented
        return self * scalar.inverse()

    def __pow__(self, exponent: int) -> "SuperPolynomial":
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not defined")
        result = SuperPolynomial.constant(1, self.parities)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def parity(self) -> Optional[int]:
        """Parity of a homogeneous element, None when mixed."""
        found = set()
        for word, coeff in self.terms.items():
            scalar_parity = coeff.parity
            if scalar_parity is None:
                return None
            found.add((self.word_parity(word) + scalar_parity) % 2)
        if len(found) > 1:
            return None
        return found.pop() if found else 0

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def letters(self) -> set:
        return {letter for word in self.terms for letter in word}

    def map_coefficients(self,
                         fn: Callable[[GrassmannScalar], GrassmannScalar]) -> "SuperPolynomial":
        return SuperPolynomial({w: fn(c) for w, c in self.terms.items()}, self.parities)

    def coefficient(self, word: Sequence[str]) -> GrassmannScalar:
        return self.terms.get(tuple(word), GrassmannScalar.zero())

    def __repr__(self) -> str:
        return f"SuperPolynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            coeff = str(self.terms[word])
            if not word:
                parts.append(coeff if _ATOMIC.fullmatch(coeff) else f"({coeff})")
                continue
            letters = "*".join(word)
            if coeff == "1":
                parts.append(letters)
            elif coeff == "-1":
                parts.append(f"-{letters}")
            elif _ATOMIC.fullmatch(coeff):
                parts.append(f"{coeff}*{letters}")
            else:
                parts.append(f"({coeff})*{letters}")
        return " + ".join(parts).replace("+ -", "- ")


def relabel(x: SuperPolynomial, mapping: Mapping[str, str]) -> SuperPolynomial:
    """Rename letters; letters missing from the mapping are kept."""
    terms: Terms = {}
    for word, coeff in x.terms.items():
        _accumulate(terms, coeff, {tuple(mapping.get(letter, letter) for letter in word): _ONE})
    parities = {mapping.get(name, name): parity for name, parity in x.parities.items()}
    return SuperPolynomial(terms, parities)


def parse_polynomial(text: str, parities: Mapping[str, int]) -> SuperPolynomial:
    """Parse a polynomial literal; generator names shadow parameter names."""

    def resolve(name: str):
        if name in parities:
            return SuperPolynomial.letter(name, parities[name])
        return GrassmannScalar.symbol(name)

    value = LiteralParser(resolve).parse(text)
    if isinstance(value, SuperPolynomial):
        return SuperPolynomial(value.terms, {**parities, **value.parities})
    return SuperPolynomial.constant(value, parities)


def parse_relation(text: str, parities: Mapping[str, int]) -> SuperPolynomial:
    """Parse ``lhs = rhs`` (or a bare expression) into ``lhs - rhs``."""
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return parse_polynomial(lhs, parities) - parse_polynomial(rhs, parities)
    return parse_polynomial(text, parities)


class Presentation:
    """Generators, oriented rewriting rules and the relations they came from.

    Generator order is the precedence: words compare degree-lexicographically with
    earlier generators smaller.
    """

    max_steps = 200_000

    def __init__(self, name: str, generators: Sequence[GeneratorSpec],
                 rules: Mapping[Word, SuperPolynomial],
                 relations: Sequence[SuperPolynomial] = (),
                 unresolved: Sequence[SuperPolynomial] = (),
                 comments: Sequence[Optional[str]] = ()):
        self.name = name
        self.generators = tuple(generators)
        self.parities = {g.name: g.parity for g in self.generators}
        self.rank = {g.name: i for i, g in enumerate(self.generators)}
        self.rules = {tuple(lhs): rhs for lhs, rhs in rules.items()}
        self.relations = tuple(relations)
        self.unresolved = tuple(unresolved)
        # aligned with relations
        self.comments = tuple(comments) + (None,) * (len(self.relations) - len(comments))
        self._lhs_lengths = sorted({len(lhs) for lhs in self.rules})
        self._cache: Dict[Word, Terms] = {}
        self._lock = threading.RLock()

    @classmethod
    def from_relations(cls, name: str, generators: Sequence[GeneratorSpec],
                       relations: Sequence[SuperPolynomial],
                       comments: Sequence[Optional[str]] = ()) -> "Presentation":
        """Orient relations into rules by reduced echelon elimination.

        Args:
            name: Presentation name
            generators: Generators in precedence order
            relations: Defining relations, each meaning ``relation = 0``
            comments: Optional source note per relation

        Returns:
            Presentation whose rules are the unique reduced echelon basis
        """
        draft = cls(name, generators, {})
        echelon = ModuleEchelon(draft.word_key).extend(r.terms for r in relations)
        rules = {}
        for pivot, row in echelon.pivots.items():
            rhs = {w: -c for w, c in row.items() if w != pivot}
            rules[pivot] = SuperPolynomial(rhs, draft.parities)
        unresolved = [SuperPolynomial(row, draft.parities) for row in echelon.leftover]
        if unresolved:
            logger.warning(f"{name}: {len(unresolved)} relations have no unit coefficient")
        logger.info(f"Built presentation {name} with {len(rules)} rules")
        relations = [SuperPolynomial(r.terms, {**draft.parities, **r.parities}) for r in relations]
        return cls(name, generators, rules, relations, unresolved, comments)

    @classmethod
    def from_text(cls, name: str, generators: Sequence[GeneratorSpec],
                  relations: Iterable[RelationEntry]) -> "Presentation":
        """Build from relation texts, each a string or ``{"relation": ..., "comment": ...}``."""
        parities = {g.name: g.parity for g in generators}
        parsed, comments = [], []
        for entry in relations:
            if isinstance(entry, Mapping):
                text, comment = entry["relation"], entry.get("comment")
            else:
                text, comment = entry, None
            parsed.append(parse_relation(text, parities))
            comments.append(comment)
        return cls.from_relations(name, generators, parsed, comments)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Presentation":
        """Rebuild a presentation from the document written by :meth:`to_dict`."""
        generators = [GeneratorSpec(g["name"], g["parity"]) for g in data["generators"]]
        return cls.from_text(data["name"], generators, data["relations"])

    @property
    def is_homogeneous(self) -> bool:
        return all(len(w) == r.degree for r in self.relations for w in r.terms)

    def length_bounded(self) -> bool:
        """True when no rule rewrites a word into longer words."""
        return all(len(w) <= len(lhs) for lhs, rhs in self.rules.items() for w in rhs.terms)

    def word_key(self, word: Sequence[str]) -> Tuple[int, Tuple[int, ...]]:
        return len(word), tuple(self.rank[letter] for letter in word)

    def word_parity(self, word: Sequence[str]) -> int:
        return sum(self.parities[letter] for letter in word) % 2

    def letter(self, name: str) -> SuperPolynomial:
        if name not in self.parities:
            raise UnknownGenerator(name)
        return SuperPolynomial.letter(name, self.parities[name])

    def letters(self) -> Dict[str, SuperPolynomial]:
        return {g.name: self.letter(g.name) for g in self.generators}

    def parse(self, text: str) -> SuperPolynomial:
        return parse_polynomial(text, self.parities)

    def parse_relation(self, text: str) -> SuperPolynomial:
        return parse_relation(text, self.parities)

    def zero(self) -> SuperPolynomial:
        return SuperPolynomial({}, self.parities)

    def termination_violations(self) -> List[Tuple[Word, Word]]:
        """Pairs (lhs, rhs word) where a unit-coefficient rhs word is not smaller."""
        bad = []
        for lhs, rhs in self.rules.items():
            for word, coeff in rhs.terms.items():
                if coeff.is_unit and self.word_key(word) >= self.word_key(lhs):
                    bad.append((lhs, word))
        return bad

    def _find_rule(self, word: Word) -> Optional[Tuple[int, Word]]:
        for i in range(len(word)):
            for length in self._lhs_lengths:
                candidate = word[i:i + length]
                if len(candidate) == length and candidate in self.rules:
                    return i, candidate
        return None

    def rewrite_at(self, word: Word, position: int, lhs: Word) -> Terms:
        """One rewriting step of ``lhs`` at ``position`` inside ``word``."""
        prefix, suffix = word[:position], word[position + len(lhs):]
        parity = self.word_parity(prefix)
        terms: Terms = {}
        for v, coeff in self.rules[lhs].terms.items():
            _accumulate(terms, coeff.twist(parity), {prefix + v + suffix: _ONE})
        return terms

    def _reduce_terms(self, terms: Mapping[Word, GrassmannScalar]) -> Terms:
        pending: Terms = {}
        _accumulate(pending, _ONE, terms)
        done: Terms = {}
        steps = 0
        while pending:
            word = max(pending, key=self.word_key)
            coeff = pending.pop(word)
            cached = self._cache.get(word)
            if cached is not None:
                _accumulate(done, coeff, cached)
                continue
            match = self._find_rule(word)
            if match is None:
                _accumulate(done, coeff, {word: _ONE})
                continue
            steps += 1
            if steps > self.max_steps:
                raise NonTerminating(word)
            position, lhs = match
            _accumulate(pending, coeff, self.rewrite_at(word, position, lhs))
        return done

    def word_normal_form(self, word: Word) -> Terms:
        with self._lock:
            cached = self._cache.get(word)
            if cached is None:
                cached = self._reduce_terms({word: _ONE})
                self._cache[word] = cached
            return cached

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "generators": [{"name": g.name, "parity": g.parity} for g in self.generators],
            "rules": [{"lhs": "*".join(lhs), "rhs": str(rhs)} for lhs, rhs in self.rules.items()],
            "relations": [
                {"relation": f"{r} = 0", "comment": c} if c else f"{r} = 0"
                for r, c in zip(self.relations, self.comments)
            ],
            "unresolved": [f"{r} = 0" for r in self.unresolved],
        }


def rule_difference(a: Presentation, b: Presentation) -> Optional[str]:
    """First rule on which two presentations disagree, or None when the rule sets match."""
    for lhs in sorted(set(a.rules) | set(b.rules), key=lambda w: (len(w), w)):
        if lhs not in a.rules or lhs not in b.rules:
            owner = a if lhs in a.rules else b
            return f"{'*'.join(lhs)} is rewritten only in {owner.name}"
        if a.rules[lhs] != b.rules[lhs]:
            return f"{'*'.join(lhs)} -> {a.rules[lhs]} in {a.name}, {b.rules[lhs]} in {b.name}"
    return None


def normal_form(x: SuperPolynomial, presentation: Presentation) -> SuperPolynomial:
    """PBW normal form of ``x`` modulo the presentation.

    Raises:
        UnknownGenerator: If ``x`` uses a letter the presentation does not have
        NonTerminating: If rewriting exceeds the step budget
    """
    for letter in x.letters():
        if letter not in presentation.parities:
            raise UnknownGenerator(letter)
    terms: Terms = {}
    for word, coeff in x.terms.items():
        _accumulate(terms, coeff, presentation.word_normal_form(word))
    return SuperPolynomial(terms, presentation.parities)


@dataclass
class ConfluenceResult:
    confluent: bool
    checked: int
    word: Optional[Word] = None
    left: Optional[SuperPolynomial] = None
    right: Optional[SuperPolynomial] = None


def _ambiguities(presentation: Presentation, max_length: int):
    lhss = sorted(presentation.rules, key=presentation.word_key)
    for l1 in lhss:
        for l2 in lhss:
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    if len(word) <= max_length:
                        yield word, (0, l1), (len(l1) - k, l2)
            if l1 != l2 and len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2:
                        yield l1, (0, l1), (i, l2)


def check_local_confluence(presentation: Presentation, max_length: int = 4) -> ConfluenceResult:
    """Resolve every overlap and inclusion ambiguity up to ``max_length`` letters."""
    checked = 0
    for word, (i, l1), (j, l2) in _ambiguities(presentation, max_length):
        checked += 1
        parities = presentation.parities
        left = normal_form(
            SuperPolynomial(presentation.rewrite_at(word, i, l1), parities), presentation
        )
        right = normal_form(
            SuperPolynomial(presentation.rewrite_at(word, j, l2), parities), presentation
        )
        if left != right:
            logger.info(f"{presentation.name}: ambiguity {' '.join(word)} does not resolve")
            return ConfluenceResult(False, checked, word, left, right)
    return ConfluenceResult(True, checked)


# tensor products

def slot_name(name: str, slot: int) -> str:
    return f"{name}@{slot}"


def split_slot(letter: str) -> Tuple[str, int]:
    base, _, slot = letter.rpartition("@")
    return base, int(slot)


def tensor_product(*presentations: Presentation, name: Optional[str] = None) -> Presentation:
    """Graded tensor product with slot-labelled generators ``g@k``.

    Letters of later slots have higher precedence, so a cross rule moves them right
    with the Koszul sign.
    """
    generators: List[GeneratorSpec] = []
    rules: Dict[Word, SuperPolynomial] = {}
    relations: List[SuperPolynomial] = []
    for slot, pres in enumerate(presentations, start=1):
        mapping = {g.name: slot_name(g.name, slot) for g in pres.generators}
        generators += [GeneratorSpec(mapping[g.name], g.parity) for g in pres.generators]
        for lhs, rhs in pres.rules.items():
            rules[tuple(mapping[letter] for letter in lhs)] = relabel(rhs, mapping)
        relations += [relabel(r, mapping) for r in pres.relations]
    parities = {g.name: g.parity for g in generators}
    for b in generators:
        for a in generators:
            if split_slot(b.name)[1] > split_slot(a.name)[1]:
                sign = -1 if a.parity and b.parity else 1
                rhs = SuperPolynomial({(a.name, b.name): GrassmannScalar.number(sign)}, parities)
                rules[(b.name, a.name)] = rhs
                relations.append(SuperPolynomial.monomial((b.name, a.name), parities) - rhs)
    rules = {lhs: SuperPolynomial(rhs.terms, parities) for lhs, rhs in rules.items()}
    label = name or "(x)".join(p.name for p in presentations)
    return Presentation(label, generators, rules, relations)


def tensor_square(presentation: Presentation) -> Presentation:
    return tensor_product(presentation, presentation)


def embed(x: SuperPolynomial, slot: int) -> SuperPolynomial:
    return relabel(x, {name: slot_name(name, slot) for name in x.parities})


def tensor(*factors: SuperPolynomial) -> SuperPolynomial:
    """``x1 (x) x2 (x) ...`` as a product of slot-embedded factors."""
    result = SuperPolynomial.constant(1)
    for slot, x in enumerate(factors, start=1):
        result = result * embed(x, slot)
    return result


def strip_slots(x: SuperPolynomial) -> SuperPolynomial:
    return relabel(x, {name: split_slot(name)[0] for name in x.parities if "@" in name})


def slot_parts(word: Word, count: int) -> List[Word]:
    """Split a slot-ordered word into its per-slot base words."""
    parts: List[List[str]] = [[] for _ in range(count)]
    last = 1
    for letter in word:
        base, slot = split_slot(letter)
        if slot < last:
            raise ValueError(f"Word {word} is not in slot order")
        last = slot
        parts[slot - 1].append(base)
    return [tuple(p) for p in parts]


def apply_slotwise(x: SuperPolynomial, tensor_presentation: Presentation,
                   maps: Sequence[Callable[[SuperPolynomial], SuperPolynomial]]) -> SuperPolynomial:
    """Apply one even linear map per slot and multiply the results in slot order.

    Args:
        x: Element of the tensor product
        tensor_presentation: Presentation used to bring ``x`` into slot order
        maps: One map per slot, each taking a base-letter monomial

    Returns:
        Sum over terms of coeff * maps[0](part1) * maps[1](part2) * ...
    """
    base_parities = {split_slot(n)[0]: p for n, p in tensor_presentation.parities.items()}
    ordered = normal_form(x, tensor_presentation)
    result = SuperPolynomial()
    for word, coeff in ordered.terms.items():
        term = SuperPolynomial.constant(coeff)
        for fn, part in zip(maps, slot_parts(word, len(maps))):
            term = term * fn(SuperPolynomial.monomial(part, base_parities))
        result = result + term
    return result


# homomorphisms

def substitute(x: SuperPolynomial, images: Mapping[str, SuperPolynomial]) -> SuperPolynomial:
    """Extend letter images to an algebra homomorphism."""
    result = SuperPolynomial()
    for word, coeff in x.terms.items():
        term = SuperPolynomial.constant(coeff)
        for letter in word:
            if letter not in images:
                raise MissingImage(letter)
            term = term * images[letter]
        result = result + term
    return result


def anti_substitute(x: SuperPolynomial, images: Mapping[str, SuperPolynomial],
                    koszul: bool = False) -> SuperPolynomial:
    """Extend letter images to an antihomomorphism.

    With ``koszul`` the reversal of odd letters picks up (-1)^(|a||b|) per swap.
    """
    result = SuperPolynomial()
    for word, coeff in x.terms.items():
        odd = [x.parities[letter] for letter in word]
        swaps = sum(1 for i, j in itertools.combinations(range(len(word)), 2) if odd[i] and odd[j])
        sign = -1 if koszul and swaps % 2 else 1
        term = SuperPolynomial.constant(coeff * sign)
        for letter in reversed(word):
            if letter not in images:
                raise MissingImage(letter)
            term = term * images[letter]
        result = result + term
    return result


# linear-algebra oracle

def words_of_length(presentation: Presentation, length: int) -> List[Word]:
    names = [g.name for g in presentation.generators]
    return [tuple(w) for w in itertools.product(names, repeat=length)]


def degree_oracle(presentation: Presentation, degree: int) -> ModuleEchelon:
    """Reduced echelon basis of the ideal at ``degree``, built from u*r*v products.

    Homogeneous presentations get the ideal in exactly ``degree`` letters. Otherwise the
    echelon spans the ideal inside the words of at most ``degree`` letters, with the oriented
    rules added to the relations as generators.
    """
    homogeneous = presentation.is_homogeneous
    generators = list(presentation.relations)
    if not homogeneous:
        generators += [
            SuperPolynomial.monomial(lhs, presentation.parities) - rhs
            for lhs, rhs in presentation.rules.items()
        ]
    rows = []
    for relation in generators:
        room = degree - relation.degree
        if room < 0:
            continue
        for rest in ([room] if homogeneous else range(room + 1)):
            for left_length in range(rest + 1):
                for u in words_of_length(presentation, left_length):
                    left = SuperPolynomial.monomial(u, presentation.parities)
                    for v in words_of_length(presentation, rest - left_length):
                        right = SuperPolynomial.monomial(v, presentation.parities)
                        rows.append((left * relation * right).terms)
    return ModuleEchelon(presentation.word_key).extend(rows)


def oracle_normal_form(word: Word, presentation: Presentation,
                       echelon: ModuleEchelon) -> SuperPolynomial:
    return SuperPolynomial(echelon.reduce({tuple(word): _ONE}), presentation.parities)


def oracle_mismatch(presentation: Presentation, degree: int) -> Optional[str]:
    """First word of at most ``degree`` letters whose normal form the oracle disagrees with.

    Raises:
        OracleUnavailable: If the relations are inhomogeneous and a rule lengthens words
    """
    if presentation.is_homogeneous:
        stages = [(d, [d]) for d in range(1, degree + 1)]
    elif presentation.length_bounded():
        stages = [(degree, list(range(1, degree + 1)))]
    else:
        raise OracleUnavailable(presentation.name, "a rule rewrites to longer words")
    for top, lengths in stages:
        echelon = degree_oracle(presentation, top)
        for length in lengths:
            for word in words_of_length(presentation, length):
                rewritten = normal_form(SuperPolynomial.monomial(word, presentation.parities),
                                        presentation)
                oracle = oracle_normal_form(word, presentation, echelon)
                if rewritten != oracle:
                    return f"{' '.join(word)}: {rewritten} vs {oracle}"
    return None

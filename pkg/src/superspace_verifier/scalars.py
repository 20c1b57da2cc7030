"""Exact coefficient arithmetic.

Coefficients live in a Grassmann algebra over Gaussian rational functions. Even
parameters are generators of the fraction field Q(q, p, hbar1, hbar2, E1, E2, c);
odd parameters anticommute and square to zero. A Gaussian value ``re + I*im`` keeps
both components as canonical reduced sympy fractions, so equality is decidable.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.fields import field

from .errors import MissingImage, NotInvolutive, PoleAtLimit


logger = logging.getLogger(__name__)

EVEN_PARAMS: Tuple[str, ...] = ("q", "p", "hbar1", "hbar2", "E1", "E2", "c")
ODD_PARAMS: Tuple[str, ...] = ("h", "h'", "eps1", "eps2", "eps", "hconj", "hconj'")

FIELD, *_FIELD_GENS = field(",".join(EVEN_PARAMS), QQ)
EVEN_SYMBOLS = dict(zip(EVEN_PARAMS, _FIELD_GENS))
_RING_GENS = dict(zip(EVEN_PARAMS, FIELD.ring.gens))
ODD_INDEX = {name: i for i, name in enumerate(ODD_PARAMS)}

Monomial = Tuple[int, ...]
Number = Union[int, Fraction]

_ATOMIC = re.compile(r"-?[A-Za-z0-9_]+")


@dataclass(frozen=True)
class ParamSignature:
    """Ordered even and odd parameter names plus the imaginary-unit flag."""
    even: Tuple[str, ...] = EVEN_PARAMS
    odd: Tuple[str, ...] = ODD_PARAMS
    imaginary_unit: bool = True

    def __post_init__(self):
        names = self.even + self.odd
        if len(set(names)) != len(names):
            raise ValueError(f"Parameter names must be unique: {names}")


SIGNATURE = ParamSignature()


def _ground(value: Number):
    if isinstance(value, Fraction):
        return FIELD(QQ(value.numerator, value.denominator))
    return FIELD(value)


@dataclass(frozen=True)
class Gaussian:
    """A value ``re + I*im`` with re, im in the rational function field."""
    re: Any
    im: Any

    @classmethod
    def real(cls, value) -> "Gaussian":
        return cls(value, FIELD.zero)

    def __bool__(self) -> bool:
        return bool(self.re.numer) or bool(self.im.numer)

    def __add__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.re, -self.im)

    def __mul__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self) -> "Gaussian":
        norm = self.re * self.re + self.im * self.im
        if not norm.numer:
            raise ZeroDivisionError("Gaussian zero has no inverse")
        return Gaussian(self.re / norm, -self.im / norm)

    def map(self, fn: Callable[[Any], Any]) -> "Gaussian":
        return Gaussian(fn(self.re), fn(self.im))

    def is_ground(self) -> bool:
        return self.re.numer.is_ground and self.re.denom.is_ground and \
            self.im.numer.is_ground and self.im.denom.is_ground

    def __str__(self) -> str:
        if not self.im.numer:
            return str(self.re)
        imag = f"I*({self.im})"
        if not self.re.numer:
            return imag
        return f"({self.re}) + {imag}"


_ZERO_G = Gaussian(FIELD.zero, FIELD.zero)
_ONE_G = Gaussian(FIELD.one, FIELD.zero)


def _merge(m1: Monomial, m2: Monomial) -> Optional[Tuple[int, Monomial]]:
    """Product of two sorted odd monomials as (sign, monomial), or None when zero."""
    if set(m1) & set(m2):
        return None
    swaps = sum(1 for a in m1 for b in m2 if a > b)
    return (-1 if swaps % 2 else 1), tuple(sorted(m1 + m2))


class GrassmannScalar:
    """Element of the Z2-graded coefficient ring.

    Terms map a sorted tuple of odd-parameter indices to a nonzero Gaussian.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Gaussian]] = None):
        self.terms: Dict[Monomial, Gaussian] = {m: g for m, g in (terms or {}).items() if g}

    # constructors

    @classmethod
    def zero(cls) -> "GrassmannScalar":
        return cls()

    @classmethod
    def one(cls) -> "GrassmannScalar":
        return cls({(): _ONE_G})

    @classmethod
    def number(cls, value: Number) -> "GrassmannScalar":
        return cls({(): Gaussian.real(_ground(value))})

    @classmethod
    def from_field(cls, value) -> "GrassmannScalar":
        return cls({(): Gaussian.real(value)})

    @classmethod
    def even(cls, name: str) -> "GrassmannScalar":
        return cls.from_field(EVEN_SYMBOLS[name])

    @classmethod
    def odd(cls, name: str) -> "GrassmannScalar":
        return cls({(ODD_INDEX[name],): _ONE_G})

    @classmethod
    def imaginary(cls) -> "GrassmannScalar":
        return cls({(): Gaussian(FIELD.zero, FIELD.one)})

    @classmethod
    def symbol(cls, name: str) -> "GrassmannScalar":
        if name in ODD_INDEX:
            return cls.odd(name)
        if name in EVEN_SYMBOLS:
            return cls.even(name)
        if name == "I":
            return cls.imaginary()
        raise KeyError(name)

    @classmethod
    def coerce(cls, value) -> Optional["GrassmannScalar"]:
        if isinstance(value, GrassmannScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.number(value)
        if getattr(value, "field", None) == FIELD:
            return cls.from_field(value)
        return None

    # ring operations

    def __add__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, g in other.terms.items():
            out[m] = out[m] + g if m in out else g
        return GrassmannScalar(out)

    __radd__ = __add__

    def __neg__(self) -> "GrassmannScalar":
        return GrassmannScalar({m: -g for m, g in self.terms.items()})

    def __sub__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Monomial, Gaussian] = {}
        for m1, g1 in self.terms.items():
            for m2, g2 in other.terms.items():
                merged = _merge(m1, m2)
                if merged is None:
                    continue
                sign, m = merged
                g = g1 * g2 if sign > 0 else -(g1 * g2)
                out[m] = out[m] + g if m in out else g
        return GrassmannScalar(out)

    def __rmul__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "GrassmannScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GrassmannScalar.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = GrassmannScalar.coerce(other)
        if other is None:
            return NotImplemented
        return not (self - other).terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # structure

    @property
    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous scalars, None for mixed ones."""
        parities = {len(m) % 2 for m in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def body(self) -> Gaussian:
        return self.terms.get((), _ZERO_G)

    @property
    def is_unit(self) -> bool:
        return bool(self.body())

    def is_ground(self) -> bool:
        return all(g.is_ground() for g in self.terms.values())

    def twist(self, parity: int) -> "GrassmannScalar":
        """Sign picked up when this scalar moves past an element of the given parity."""
        if parity % 2 == 0:
            return self
        return GrassmannScalar({m: (-g if len(m) % 2 else g) for m, g in self.terms.items()})

    def inverse(self) -> "GrassmannScalar":
        body = self.body()
        if not body:
            raise ZeroDivisionError(f"{self} is not a unit")
        body_inv = GrassmannScalar({(): body.inverse()})
        step = -(body_inv * (self - GrassmannScalar({(): body})))
        result = GrassmannScalar.one()
        power = GrassmannScalar.one()
        while True:
            power = power * step
            if power.is_zero:
                break
            result = result + power
        return result * body_inv

    def odd_symbols(self) -> set:
        return {ODD_PARAMS[i] for m in self.terms for i in m}

    def even_symbols(self) -> set:
        names = set()
        for g in self.terms.values():
            for component in (g.re, g.im):
                for poly in (component.numer, component.denom):
                    for monom in poly.monoms():
                        names.update(n for n, e in zip(EVEN_PARAMS, monom) if e)
        return names

    def substitute_odd(self, mapping: Mapping[str, "GrassmannScalar"]) -> "GrassmannScalar":
        """Replace odd parameters by scalars, keeping monomial order."""
        out = GrassmannScalar.zero()
        for m, g in self.terms.items():
            term = GrassmannScalar({(): g})
            for index in m:
                name = ODD_PARAMS[index]
                term = term * mapping.get(name, GrassmannScalar.odd(name))
            out = out + term
        return out

    def drop_products(self, names: Iterable[str]) -> "GrassmannScalar":
        """Remove every term divisible by the product of the named odd parameters."""
        indices = {ODD_INDEX[n] for n in names}
        return GrassmannScalar({m: g for m, g in self.terms.items() if not indices <= set(m)})

    def map_components(self, fn: Callable[[Any], Any]) -> "GrassmannScalar":
        return GrassmannScalar({m: g.map(fn) for m, g in self.terms.items()})

    def components(self) -> Iterable[Tuple[Monomial, int, Any]]:
        """Yield (odd monomial, 0 for real or 1 for imaginary, field value)."""
        for m, g in self.terms.items():
            if g.re.numer:
                yield m, 0, g.re
            if g.im.numer:
                yield m, 1, g.im

    def __repr__(self) -> str:
        return f"GrassmannScalar({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda k: (len(k), k)):
            coeff = str(self.terms[m])
            if not m:
                parts.append(coeff if _ATOMIC.fullmatch(coeff) else f"({coeff})")
                continue
            names = "*".join(ODD_PARAMS[i] for i in m)
            if coeff == "1":
                parts.append(names)
            elif coeff == "-1":
                parts.append(f"-{names}")
            elif _ATOMIC.fullmatch(coeff):
                parts.append(f"{coeff}*{names}")
            else:
                parts.append(f"({coeff})*{names}")
        return " + ".join(parts).replace("+ -", "- ")


def smul(a: GrassmannScalar, b: GrassmannScalar) -> GrassmannScalar:
    return a * b


def _compose(poly, images: Mapping[str, Any]):
    total = FIELD.zero
    for monom, coeff in poly.terms():
        term = FIELD(coeff)
        for name, exponent in zip(EVEN_PARAMS, monom):
            if exponent:
                if name not in images:
                    raise MissingImage(name)
                term = term * images[name] ** exponent
        total = total + term
    return total


@dataclass(frozen=True, eq=False)
class ConjugationSpec:
    """Parameter conjugation: rational images for even symbols, scalars for odd ones."""
    even: Mapping[str, Any]
    odd: Mapping[str, GrassmannScalar]
    conjugate_unit: bool = True

    def __post_init__(self):
        for name in self.even:
            self._check(GrassmannScalar.even(name), name)
        for name in self.odd:
            self._check(GrassmannScalar.odd(name), name)

    def _check(self, value: GrassmannScalar, name: str) -> None:
        try:
            twice = sconj(sconj(value, self), self)
        except MissingImage as e:
            raise NotInvolutive(name) from e
        if twice != value:
            raise NotInvolutive(name)

    def conjugate_field(self, value):
        return _compose(value.numer, self.even) / _compose(value.denom, self.even)

    def conjugate_gaussian(self, g: Gaussian) -> Gaussian:
        re_part = self.conjugate_field(g.re)
        im_part = self.conjugate_field(g.im)
        return Gaussian(re_part, -im_part if self.conjugate_unit else im_part)


def sconj(a: GrassmannScalar, spec: ConjugationSpec, reverse: bool = True) -> GrassmannScalar:
    """Conjugate a scalar.

    Args:
        a: Scalar to conjugate
        spec: Images of the parameters
        reverse: Reverse odd monomials (antihomomorphism); False gives the
            multiplicative variant

    Returns:
        The conjugated scalar
    """
    out = GrassmannScalar.zero()
    for m, g in a.terms.items():
        term = GrassmannScalar({(): spec.conjugate_gaussian(g)})
        names = [ODD_PARAMS[i] for i in m]
        if reverse:
            names.reverse()
        for name in names:
            if name not in spec.odd:
                raise MissingImage(name)
            term = term * spec.odd[name]
        out = out + term
    return out


def _point_items(point: Mapping[str, Number]):
    items = []
    for name, value in point.items():
        if isinstance(value, Fraction):
            value = QQ(value.numerator, value.denominator)
        items.append((_RING_GENS[name], value))
    return items


def evaluate_field(value, point: Mapping[str, Number], location: Optional[str] = None):
    """Substitute a point into a reduced fraction; raise PoleAtLimit on a vanishing denominator."""
    numer, denom = value.numer, value.denom
    for gen, number in _point_items(point):
        numer = numer.subs(gen, number)
        denom = denom.subs(gen, number)
    if not denom:
        raise PoleAtLimit(value, value.denom, location)
    return FIELD.new(numer, denom)


def slimit(a: GrassmannScalar, point: Mapping[str, Number],
           location: Optional[str] = None) -> GrassmannScalar:
    """Limit of a scalar at a point of the even parameters."""
    return a.map_components(lambda value: evaluate_field(value, point, location))


def odd_monomials(names: Iterable[str]) -> list:
    """All products of the given odd parameters, including the empty one."""
    indices = sorted(ODD_INDEX[n] for n in names)
    monomials = [()]
    for index in indices:
        monomials += [m + (index,) for m in monomials]
    return [GrassmannScalar({m: _ONE_G}) for m in monomials]

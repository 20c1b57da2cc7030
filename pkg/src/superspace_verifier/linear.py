"""Exact linear algebra shared by the presentation, matrix and ideal layers."""

import logging
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .scalars import FIELD, GrassmannScalar


logger = logging.getLogger(__name__)

Row = Dict[Hashable, GrassmannScalar]


def _axpy(row: Row, coeff: GrassmannScalar, other: Mapping[Hashable, GrassmannScalar]) -> None:
    """row -= coeff * other, in place, dropping zero entries."""
    for col, value in other.items():
        new = row[col] - coeff * value if col in row else -(coeff * value)
        if new.is_zero:
            row.pop(col, None)
        else:
            row[col] = new


class ModuleEchelon:
    """Reduced row echelon form over the Grassmann coefficient ring.

    The pivot of a row is its largest column (under ``key``) whose coefficient is a
    unit. Rows whose remaining coefficients are all nilpotent are kept aside as
    leftovers.
    """

    def __init__(self, key: Callable[[Hashable], Any]):
        self._key = key
        self.pivots: Dict[Hashable, Row] = {}
        self.leftover: List[Row] = []

    def reduce(self, row: Mapping[Hashable, GrassmannScalar]) -> Row:
        out = {k: v for k, v in row.items() if not v.is_zero}
        while True:
            hit = next((k for k in out if k in self.pivots), None)
            if hit is None:
                return out
            _axpy(out, out[hit], self.pivots[hit])

    def add(self, row: Mapping[Hashable, GrassmannScalar]) -> bool:
        """Insert a row; return True when it produced a new pivot."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        units = [k for k, v in reduced.items() if v.is_unit]
        if not units:
            self.leftover.append(reduced)
            return False
        pivot = max(units, key=self._key)
        inverse = reduced[pivot].inverse()
        normalized = {k: inverse * v for k, v in reduced.items()}
        normalized[pivot] = GrassmannScalar.one()
        for other in self.pivots.values():
            if pivot in other:
                _axpy(other, other[pivot], normalized)
        self.pivots[pivot] = normalized
        return True

    def extend(self, rows: Iterable[Mapping[Hashable, GrassmannScalar]]) -> "ModuleEchelon":
        for row in rows:
            self.add(row)
        self.leftover = [r for r in (self.reduce(r) for r in self.leftover) if r]
        return self


def _to_qq(value):
    return value.numer.LC / value.denom.LC


def field_rank(rows: Sequence[Mapping[Hashable, Any]], columns: Sequence[Hashable]) -> int:
    """Rank of sparse rows of fraction-field values over their common field.

    Args:
        rows: Mappings from column to field element (zero entries may be omitted)
        columns: Column keys fixing the matrix layout

    Returns:
        The exact rank
    """
    index = {c: j for j, c in enumerate(columns)}
    ground = all(v.numer.is_ground and v.denom.is_ground for r in rows for v in r.values())
    domain = QQ if ground else FIELD.to_domain()
    convert = _to_qq if ground else (lambda v: v)
    data: Dict[int, Dict[int, Any]] = {}
    for i, row in enumerate(rows):
        entries = {index[c]: convert(v) for c, v in row.items() if v.numer}
        if entries:
            data[i] = entries
    if not data:
        return 0
    matrix = DomainMatrix(data, (len(rows), len(columns)), domain)
    return matrix.rank()


def scalar_rows_to_field(rows: Iterable[Mapping[Hashable, GrassmannScalar]]) -> List[Dict]:
    """Split Grassmann-valued rows into field-valued rows.

    Each column becomes one column per (odd monomial, real/imaginary part).
    """
    out = []
    for row in rows:
        expanded = {}
        for col, value in row.items():
            for monomial, part, component in value.components():
                expanded[(col, monomial, part)] = component
        out.append(expanded)
    return out

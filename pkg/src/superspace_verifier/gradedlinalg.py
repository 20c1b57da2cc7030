"""Supermatrices over Grassmann scalars or polynomials."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Mapping, Optional, Sequence, Tuple

from .errors import Singular
from .linear import field_rank
from .parsing import parse_scalar
from .scalars import GrassmannScalar, evaluate_field


logger = logging.getLogger(__name__)

Parities = Tuple[int, ...]

ROW = "row"
COLUMN = "column"
KRON_CONVENTIONS = (ROW, COLUMN)

STANDARD = "standard"
ALTERNATE = "alternate"
ODD_BLOCK = "odd-block"
TRANSPOSE_CONVENTIONS = (STANDARD, ALTERNATE, ODD_BLOCK)


def _is_zero(value) -> bool:
    return value.is_zero


@dataclass
class GradedMatrix:
    """Dense matrix with parity-graded row and column index sets."""
    row_parities: Parities
    col_parities: Parities
    entries: List[List[Any]]
    even: bool = True

    def __post_init__(self):
        self.row_parities = tuple(self.row_parities)
        self.col_parities = tuple(self.col_parities)
        if len(self.entries) != len(self.row_parities) or any(
            len(row) != len(self.col_parities) for row in self.entries
        ):
            raise ValueError("Entries do not match the parity vectors")

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_parities), len(self.col_parities)

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], parities: Sequence[int],
                  col_parities: Optional[Sequence[int]] = None) -> "GradedMatrix":
        entries = [[_as_entry(v) for v in row] for row in rows]
        return cls(tuple(parities), tuple(col_parities or parities), entries)

    @classmethod
    def from_text(cls, rows: Sequence[Sequence[str]], parities: Sequence[int]) -> "GradedMatrix":
        return cls.from_rows([[parse_scalar(v) for v in row] for row in rows], parities)

    def rows_text(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.entries]

    def map_entries(self, fn: Callable[[Any], Any]) -> "GradedMatrix":
        return GradedMatrix(self.row_parities, self.col_parities,
                            [[fn(v) for v in row] for row in self.entries], self.even)

    def with_entry(self, i: int, j: int, value) -> "GradedMatrix":
        entries = [list(row) for row in self.entries]
        entries[i][j] = _as_entry(value)
        return GradedMatrix(self.row_parities, self.col_parities, entries, self.even)

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.row_parities, self.col_parities, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)
        ], self.even)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return GradedMatrix(self.row_parities, self.col_parities, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)
        ], self.even)

    def __neg__(self) -> "GradedMatrix":
        return self.map_entries(lambda v: -v)

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        return mat_mul(self, other)

    def scale(self, scalar) -> "GradedMatrix":
        """Left multiplication of every entry by a scalar."""
        scalar = GrassmannScalar.coerce(scalar)
        return self.map_entries(lambda v: scalar * v)

    def is_zero(self) -> bool:
        return all(_is_zero(v) for row in self.entries for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix) or self.shape != other.shape:
            return False
        return first_difference(self, other) is None

    __hash__ = None

    def is_even_supermatrix(self) -> bool:
        """Every nonzero entry is homogeneous of parity row + column parity."""
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if not _is_zero(value) and value.parity != (
                    self.row_parities[i] + self.col_parities[j]
                ) % 2:
                    return False
        return True

    def transpose(self) -> "GradedMatrix":
        return GradedMatrix(self.col_parities, self.row_parities,
                            [list(col) for col in zip(*self.entries)], self.even)


def _as_entry(value):
    scalar = GrassmannScalar.coerce(value)
    return scalar if scalar is not None else value


def identity(parities: Sequence[int]) -> GradedMatrix:
    n = len(parities)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return GradedMatrix.from_rows(rows, parities)


def zeros(row_parities: Sequence[int], col_parities: Sequence[int]) -> GradedMatrix:
    return GradedMatrix.from_rows(
        [[0] * len(col_parities) for _ in row_parities], row_parities, col_parities
    )


def mat_mul(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply {a.shape} by {b.shape}")
    columns = list(zip(*b.entries))
    entries = []
    for row in a.entries:
        out_row = []
        for col in columns:
            total = None
            for x, y in zip(row, col):
                if _is_zero(x) or _is_zero(y):
                    continue
                term = x * y
                total = term if total is None else total + term
            out_row.append(total if total is not None else GrassmannScalar.zero())
        entries.append(out_row)
    return GradedMatrix(a.row_parities, b.col_parities, entries, a.even and b.even)


def first_difference(a: GradedMatrix, b: GradedMatrix) -> Optional[Tuple[int, int, Any]]:
    """First (row, column, a - b) where the matrices differ, 0-indexed."""
    for i, (r1, r2) in enumerate(zip(a.entries, b.entries)):
        for j, (x, y) in enumerate(zip(r1, r2)):
            diff = x - y
            if not _is_zero(diff):
                return i, j, diff
    return None


def _nilpotent_part(a: GradedMatrix) -> Optional[GradedMatrix]:
    n = a.shape[0]
    part = a - identity(a.row_parities)
    for row in part.entries:
        for value in row:
            if isinstance(value, GrassmannScalar) and value.body():
                return None
    return part if n else None


def mat_inv(a: GradedMatrix) -> GradedMatrix:
    """Exact inverse.

    Uses the series (I + N)^-1 = sum (-N)^k when the body is the identity, and
    unit-pivot Gauss-Jordan elimination otherwise.

    Raises:
        Singular: If some column has no unit pivot
    """
    n, m = a.shape
    if n != m:
        raise Singular(a.shape, 0)
    nilpotent = _nilpotent_part(a)
    if nilpotent is not None:
        result = identity(a.row_parities)
        power = identity(a.row_parities)
        step = -nilpotent
        while True:
            power = mat_mul(power, step)
            if power.is_zero():
                return result
            result = result + power
    left = [list(row) for row in a.entries]
    right = [list(row) for row in identity(a.row_parities).entries]
    for col in range(n):
        pivot = next((r for r in range(col, n) if left[r][col].is_unit), None)
        if pivot is None:
            raise Singular(a.shape, col)
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        inverse = left[col][col].inverse()
        left[col] = [inverse * v for v in left[col]]
        right[col] = [inverse * v for v in right[col]]
        for r in range(n):
            if r != col and not left[r][col].is_zero:
                factor = left[r][col]
                left[r] = [x - factor * y for x, y in zip(left[r], left[col])]
                right[r] = [x - factor * y for x, y in zip(right[r], right[col])]
    return GradedMatrix(a.col_parities, a.row_parities, right, a.even)


def mat_rank_at(a: GradedMatrix, point: Optional[Mapping[str, Any]] = None) -> int:
    """Rank after sending odd parameters to 0 and even parameters to ``point``.

    Complex entries use the real embedding [[re, -im], [im, re]], so the result is
    the complex rank.
    """
    point = point or {}
    rows = []
    imaginary = False
    for row in a.entries:
        body_row = []
        for value in row:
            body = value.body()
            re_part = evaluate_field(body.re, point) if point else body.re
            im_part = evaluate_field(body.im, point) if point else body.im
            imaginary = imaginary or bool(im_part.numer)
            body_row.append((re_part, im_part))
        rows.append(body_row)
    m = a.shape[1]
    columns = list(range(2 * m if imaginary else m))
    field_rows = []
    for body_row in rows:
        if imaginary:
            field_rows.append({j: re for j, (re, _) in enumerate(body_row)} |
                              {m + j: im for j, (_, im) in enumerate(body_row)})
            field_rows.append({j: -im for j, (_, im) in enumerate(body_row)} |
                              {m + j: re for j, (re, _) in enumerate(body_row)})
        else:
            field_rows.append({j: re for j, (re, _) in enumerate(body_row)})
    rank = field_rank(field_rows, columns)
    return rank // 2 if imaginary else rank


def _kron_sign(convention: str, ti: int, tj: int, tk: int, tl: int) -> int:
    if convention == ROW:
        exponent = tk * (ti + tj)
    elif convention == COLUMN:
        exponent = tj * (tk + tl)
    else:
        raise ValueError(f"Unknown Kronecker convention: {convention}")
    return -1 if exponent % 2 else 1


def graded_kron(a: GradedMatrix, b: GradedMatrix, graded: bool = True,
                convention: str = ROW) -> GradedMatrix:
    """Kronecker product with composite index (i, k) -> i * len(b) + k.

    Args:
        a: Left factor
        b: Right factor
        graded: Apply the Koszul sign; False gives the plain product
        convention: ``row`` uses (-1)^(t(k)(t(i)+t(j))), ``column`` uses
            (-1)^(t(j)(t(k)+t(l)))

    Returns:
        The product on the composite index sets
    """
    rp = tuple((ti + tk) % 2 for ti in a.row_parities for tk in b.row_parities)
    cp = tuple((tj + tl) % 2 for tj in a.col_parities for tl in b.col_parities)
    entries = []
    for i, ti in enumerate(a.row_parities):
        for k, tk in enumerate(b.row_parities):
            row = []
            for j, tj in enumerate(a.col_parities):
                for l, tl in enumerate(b.col_parities):
                    x, y = a.entries[i][j], b.entries[k][l]
                    if _is_zero(x) or _is_zero(y):
                        row.append(GrassmannScalar.zero())
                        continue
                    value = x * y
                    if graded and _kron_sign(convention, ti, tj, tk, tl) < 0:
                        value = -value
                    row.append(value)
            entries.append(row)
    return GradedMatrix(rp, cp, entries, a.even and b.even)


def super_permutation(parities: Sequence[int]) -> GradedMatrix:
    """P_{(i,j),(k,l)} = (-1)^(t(i)t(j)) delta_il delta_jk."""
    n = len(parities)
    composite = [(parities[i] + parities[j]) % 2 for i in range(n) for j in range(n)]
    rows = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            rows[i * n + j][j * n + i] = -1 if parities[i] and parities[j] else 1
    return GradedMatrix.from_rows(rows, composite)


def plain_flip(parities: Sequence[int]) -> GradedMatrix:
    n = len(parities)
    composite = [(parities[i] + parities[j]) % 2 for i in range(n) for j in range(n)]
    rows = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            rows[i * n + j][j * n + i] = 1
    return GradedMatrix.from_rows(rows, composite)


def supertranspose(a: GradedMatrix, convention: str = ODD_BLOCK) -> GradedMatrix:
    """Parity-signed transpose.

    ``standard``: (-1)^((t(i)+1)t(j)); ``alternate``: (-1)^(t(i)(t(j)+1));
    ``odd-block``: (-1)^(t(i)+t(j)). Signs are taken at the source entry (i, j).
    """
    def sign(ti: int, tj: int) -> int:
        if convention == STANDARD:
            exponent = (ti + 1) * tj
        elif convention == ALTERNATE:
            exponent = ti * (tj + 1)
        elif convention == ODD_BLOCK:
            exponent = ti + tj
        else:
            raise ValueError(f"Unknown supertranspose convention: {convention}")
        return -1 if exponent % 2 else 1

    n, m = a.shape
    entries = [[None] * n for _ in range(m)]
    for i in range(n):
        for j in range(m):
            value = a.entries[i][j]
            entries[j][i] = value if sign(a.row_parities[i], a.col_parities[j]) > 0 else -value
    return GradedMatrix(a.col_parities, a.row_parities, entries, a.even)


def body_matrix(a: GradedMatrix) -> GradedMatrix:
    """Drop every nilpotent part of every entry."""
    return a.map_entries(lambda v: GrassmannScalar({(): v.body()}))


def matrix_to_dict(a: GradedMatrix) -> dict:
    return {"row_parities": list(a.row_parities), "col_parities": list(a.col_parities),
            "rows": a.rows_text()}



"""Configuration matrices of CICY threefolds in a product of two projective spaces.

A configuration on ``P^a1 x P^a2`` is a 2 x m matrix of nonnegative integers
``b_ij``; column ``j`` is the bidegree of the j-th defining hypersurface and
``m = a1 + a2 - 3`` is the codimension of the threefold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "ConfigurationError",
    "RowSumViolation",
    "ColumnSumViolation",
    "UnitFactorColumn",
    "CodimMismatch",
    "BoundViolation",
    "FactorDims",
    "Bidegree",
    "TwistDegree",
    "ConfigurationMatrix",
    "validate_configuration",
    "canonical_form",
    "is_degenerate",
    "is_block_diagonal",
    "codimension_bound_check",
]


class ConfigurationError(ValueError):
    """Base class for rejected configuration matrices."""


class RowSumViolation(ConfigurationError):
    """A row does not sum to ``a_i + 1`` (first Chern class is nonzero)."""


class ColumnSumViolation(ConfigurationError):
    """A column has total degree below 2."""


class UnitFactorColumn(ConfigurationError):
    """A column is supported on a single row whose factor is a ``P^1``."""


class CodimMismatch(ConfigurationError):
    """The number of columns differs from ``a1 + a2 - 3``."""


class BoundViolation(ConfigurationError):
    """The ambient violates ``p <= alpha <= 6`` and ``s <= 9``."""


@dataclass(frozen=True, order=True)
class FactorDims:
    """Dimensions ``(a1, a2)`` of the two projective factors."""

    a1: int
    a2: int

    def __post_init__(self):
        for a in (self.a1, self.a2):
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError(f"factor dimensions must be positive integers, got {self.a1, self.a2}")

    @property
    def m(self) -> int:
        """Codimension of a threefold in ``P^a1 x P^a2``."""
        return self.a1 + self.a2 - 3

    @property
    def alpha(self) -> int:
        return self.a1 + self.a2 - 2

    @property
    def p(self) -> int:
        """Number of ``P^1`` factors."""
        return (self.a1 == 1) + (self.a2 == 1)

    @property
    def s(self) -> int:
        return 2 - self.p

    def swapped(self) -> "FactorDims":
        return FactorDims(self.a2, self.a1)

    def __iter__(self):
        yield self.a1
        yield self.a2


class Bidegree(NamedTuple):
    """Bidegree ``(d1, d2)`` of a curve: intersection numbers with the two hyperplane classes."""

    d1: int
    d2: int


class TwistDegree(NamedTuple):
    """Twist ``(b1, b2)`` of the line bundle ``O_X(b1, b2)``."""

    b1: int
    b2: int


def _as_dims(dims) -> FactorDims:
    if isinstance(dims, FactorDims):
        return dims
    a1, a2 = dims
    return FactorDims(int(a1), int(a2))


@dataclass(frozen=True)
class ConfigurationMatrix:
    """A validated configuration matrix.

    Construct through :func:`validate_configuration`; the constructor itself
    only checks the shape.
    """

    dims: FactorDims
    entries: tuple[tuple[int, ...], tuple[int, ...]]
    m: int

    def __post_init__(self):
        if len(self.entries) != 2 or len(self.entries[0]) != self.m or len(self.entries[1]) != self.m:
            raise ValueError("entries must be a 2 x m array with m equal to the stored codimension")

    @property
    def a1(self) -> int:
        return self.dims.a1

    @property
    def a2(self) -> int:
        return self.dims.a2

    @property
    def rows(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.entries

    @property
    def columns(self) -> tuple[TwistDegree, ...]:
        return tuple(TwistDegree(x, y) for x, y in zip(*self.entries))

    def swapped(self) -> "ConfigurationMatrix":
        """The same configuration with the two factors exchanged (not canonicalized)."""
        return ConfigurationMatrix(self.dims.swapped(), (self.entries[1], self.entries[0]), self.m)

    def sort_key(self) -> tuple:
        return (self.m, self.a1, self.a2, self.entries[0] + self.entries[1])

    def to_dict(self) -> dict:
        return {"dims": [self.a1, self.a2], "matrix": [list(self.entries[0]), list(self.entries[1])]}

    def __str__(self) -> str:
        width = max(len(str(b)) for row in self.entries for b in row)
        lab = [f"P^{a}" for a in self.dims]
        lw = max(map(len, lab))
        return "\n".join(
            f"[{l:<{lw}} | " + " ".join(f"{b:>{width}}" for b in row) + " ]" for l, row in zip(lab, self.entries)
        )


def codimension_bound_check(factor_dims: Sequence[int]) -> bool:
    """Check ``p <= alpha <= 6`` and ``s <= 9`` for an arbitrary product of projective spaces.

    Parameters
    ----------
    factor_dims : sequence of int
        Dimensions ``a_i >= 1`` of the factors.

    Examples
    --------
    >>> codimension_bound_check([1, 3])
    True
    >>> codimension_bound_check([1] * 8)
    False
    """
    dims = list(factor_dims)
    if not dims or any(a < 1 for a in dims):
        raise ValueError("factor dimensions must be a nonempty list of positive integers")
    alpha = sum(a - 1 for a in dims)
    p = sum(1 for a in dims if a == 1)
    s = len(dims) - p
    return p <= alpha <= 6 and s <= 9


def validate_configuration(dims, entries: Iterable[Iterable[int]], allow_degenerate: bool = False) -> ConfigurationMatrix:
    """Check the admissibility constraints and return a :class:`ConfigurationMatrix`.

    The result keeps the given row and column order; use :func:`canonical_form`
    to normalize it. With ``allow_degenerate`` columns of total degree 1 (a
    hyperplane section of one factor) are accepted, so that degenerate
    configurations can be represented and tested with :func:`is_degenerate`.

    Raises
    ------
    CodimMismatch, BoundViolation, RowSumViolation, ColumnSumViolation, UnitFactorColumn
    """
    dims = _as_dims(dims)
    rows = tuple(tuple(int(b) for b in row) for row in entries)
    if len(rows) != 2:
        raise ValueError(f"a configuration matrix has exactly 2 rows, got {len(rows)}")
    m = len(rows[0])
    if m < 1 or len(rows[1]) != m:
        raise ValueError("rows must be nonempty and of equal length")
    if any(b < 0 for row in rows for b in row):
        raise ValueError("entries must be nonnegative")

    if m != dims.m:
        raise CodimMismatch(f"{m} columns on P^{dims.a1} x P^{dims.a2}, expected {dims.m}")
    if not codimension_bound_check(list(dims)):
        raise BoundViolation(f"P^{dims.a1} x P^{dims.a2} violates p <= alpha <= 6, s <= 9")
    for i, (a, row) in enumerate(zip(dims, rows), start=1):
        if sum(row) != a + 1:
            raise RowSumViolation(f"row {i} sums to {sum(row)}, expected a_{i} + 1 = {a + 1}")
    for j, (x, y) in enumerate(zip(*rows), start=1):
        if x + y < (1 if allow_degenerate else 2):
            raise ColumnSumViolation(f"column {j} = ({x}, {y}) has degree {x + y} < 2")
        if (y == 0 and dims.a1 == 1) or (x == 0 and dims.a2 == 1):
            raise UnitFactorColumn(f"column {j} = ({x}, {y}) is supported on a P^1 factor")
    return ConfigurationMatrix(dims, rows, m)


def _sorted_columns(dims: FactorDims, rows) -> ConfigurationMatrix:
    cols = sorted(zip(*rows), reverse=True)
    return ConfigurationMatrix(dims, (tuple(c[0] for c in cols), tuple(c[1] for c in cols)), len(cols))


def canonical_form(A: ConfigurationMatrix) -> ConfigurationMatrix:
    """Normal form under column permutations and, when ``a1 == a2``, the row swap.

    Rows are ordered so that ``a1 <= a2``; columns are sorted in decreasing
    lexicographic order of ``(b_1j, b_2j)``. When ``a1 == a2`` both row orders
    are column-sorted and the lexicographically larger matrix is kept.
    """
    if A.a1 > A.a2:
        A = A.swapped()
    best = _sorted_columns(A.dims, A.entries)
    if A.a1 == A.a2:
        other = _sorted_columns(A.dims, (A.entries[1], A.entries[0]))
        if other.entries > best.entries:
            best = other
    return best


def is_degenerate(A: ConfigurationMatrix) -> bool:
    """True iff some column has total degree 1, i.e. cuts a hyperplane of one factor."""
    return any(x + y == 1 for x, y in A.columns)


def is_block_diagonal(A: ConfigurationMatrix) -> bool:
    """True iff no column has both entries positive.

    Such a matrix splits as a direct sum and describes a product of
    lower-dimensional Calabi-Yau varieties (e.g. an elliptic curve times a K3),
    so it is not counted among the threefold configurations.
    """
    return all(x == 0 or y == 0 for x, y in A.columns)

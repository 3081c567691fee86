"""Dimension counts for the incidence correspondence and finiteness certificates.

For a configuration ``A`` on ``X = P^a1 x P^a2`` and a bidegree ``(d1, d2)``:

* ``dim M = d1 (a1+1) + d2 (a2+1) + m`` counts smooth rational curves,
* ``dim U_A = sum_j (C(a1+b_1j, a1) C(a2+b_2j, a2) - 1)`` counts the sections,
* a curve imposes a fiber of dimension ``dim U_A - dim M + sum_j h^1(I_C(b_j))``.

When every ``h^1`` vanishes the incidence variety has the dimension of ``U_A``
and the generic member contains finitely many such curves. Vanishing is
certified through bigraded regularity: a curve with nondegenerate birational
projections is ``(d2 - a2 + 1, d1 - a1 + 1)``-regular, so ``h^1(I_C(b1, b2)) = 0``
once ``b1 >= d2 - a2 + 1 - u`` and ``b2 >= d1 - a1 + 1 - v`` for some
``u + v = 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cohomology import binomial
from .configuration import Bidegree, ConfigurationMatrix, FactorDims, _as_dims, canonical_form

__all__ = [
    "PreconditionViolation",
    "AmbientTooSmall",
    "Vanishing",
    "Verdict",
    "DimensionReport",
    "FinitenessCertificate",
    "UV_CHOICES",
    "LOW_BIDEGREES",
    "TIAN_YAU",
    "dim_moduli_curves",
    "dim_family",
    "fiber_dimension",
    "in_w_set",
    "regularity_witness",
    "h1_vanishing_by_regularity",
    "z_set",
    "zset_bounding_box",
    "finiteness_certificate",
]

# (u, v) with u, v >= 0 and u + v = 1, in the order witnesses are searched
UV_CHOICES = ((1, 0), (0, 1))
LOW_BIDEGREES = frozenset({Bidegree(0, 1), Bidegree(1, 0), Bidegree(1, 1)})
TIAN_YAU = (FactorDims(3, 3), ((3, 1, 0), (0, 1, 3)))

TIAN_YAU_NOTE = (
    "the generic Tian-Yau CICY carries a positive-dimensional family of degenerate rational "
    "curves of bidegree (3, 3); finiteness holds only for curves with nondegenerate "
    "birational projections"
)


class PreconditionViolation(ValueError):
    """Arguments fall outside the regime where the regularity bound applies."""


class AmbientTooSmall(PreconditionViolation):
    """``Z_A`` is only defined when both factors have dimension at least 2."""


class Vanishing(enum.Enum):
    VANISHES = "vanishes"
    UNKNOWN = "unknown"


class Verdict(enum.Enum):
    FINITE_NONDEGENERATE = "finite-nondegenerate"
    EMPTY_NONDEGENERATE = "empty-nondegenerate"
    FINITE_ALL_CURVES = "finite-all-curves"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DimensionReport:
    dim_moduli: int
    dim_family: int
    fiber_dim: int
    h1_sum: int
    dim_incidence: int

    def to_dict(self) -> dict:
        return {
            "dim_moduli": self.dim_moduli,
            "dim_family": self.dim_family,
            "fiber_dim": self.fiber_dim,
            "h1_sum": self.h1_sum,
            "dim_incidence": self.dim_incidence,
        }


@dataclass(frozen=True)
class FinitenessCertificate:
    """Outcome of :func:`finiteness_certificate`.

    ``witness`` lists one ``(u, v)`` per column of the matrix and is only set
    for ``FINITE_NONDEGENERATE``.
    """

    matrix: ConfigurationMatrix
    bidegree: Bidegree
    verdict: Verdict
    witness: tuple[tuple[int, int], ...] | None = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_dict(),
            "bidegree": list(self.bidegree),
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else [list(w) for w in self.witness],
            "notes": list(self.notes),
        }


def _curve(d) -> Bidegree:
    d = Bidegree(*d)
    if d.d1 < 0 or d.d2 < 0:
        raise ValueError(f"bidegree must be nonnegative, got {tuple(d)}")
    if d == (0, 0):
        raise ValueError("bidegree (0, 0) does not denote a curve")
    return d


def dim_moduli_curves(a, d) -> int:
    """Dimension of the space of smooth rational curves of bidegree ``d`` in ``P^a1 x P^a2``."""
    a, d = _as_dims(a), _curve(d)
    return d.d1 * (a.a1 + 1) + d.d2 * (a.a2 + 1) + a.m


def dim_family(A: ConfigurationMatrix) -> int:
    """Dimension of the space of tuples of defining sections (a product of projective spaces)."""
    a1, a2 = A.dims
    return sum(binomial(a1 + x, a1) * binomial(a2 + y, a2) - 1 for x, y in A.columns)


def fiber_dimension(A: ConfigurationMatrix, d, h1_sum: int = 0) -> DimensionReport:
    """Fiber of the incidence correspondence over a single curve.

    ``h1_sum`` is the sum over the columns of ``h^1(I_C(b_1j, b_2j))``; it is
    never computed here and defaults to the value certified by
    :func:`finiteness_certificate` (zero).
    """
    if h1_sum < 0:
        raise ValueError("h1_sum must be nonnegative")
    dm = dim_moduli_curves(A.dims, d)
    du = dim_family(A)
    fib = du - dm + h1_sum
    return DimensionReport(dim_moduli=dm, dim_family=du, fiber_dim=fib, h1_sum=h1_sum, dim_incidence=dm + fib)


def in_w_set(a, d) -> bool:
    """``d_i >= a_i`` for both factors; outside this region no curve has nondegenerate projections."""
    a = _as_dims(a)
    d1, d2 = d
    return d1 >= a.a1 and d2 >= a.a2


def regularity_witness(a, d, b) -> tuple[int, int] | None:
    """First ``(u, v)`` for which ``O(b1, b2)`` clears the regularity threshold, else None."""
    a = _as_dims(a)
    d1, d2 = d
    b1, b2 = b
    if a.a1 < 2 or a.a2 < 2:
        raise PreconditionViolation(f"regularity bound needs a_i >= 2, got P^{a.a1} x P^{a.a2}")
    if d1 < a.a1 or d2 < a.a2:
        raise PreconditionViolation(f"regularity bound needs d_i >= a_i, got d = {(d1, d2)} on {tuple(a)}")
    for u, v in UV_CHOICES:
        if b1 >= d2 - a.a2 + 1 - u and b2 >= d1 - a.a1 + 1 - v:
            return (u, v)
    return None


def h1_vanishing_by_regularity(a, d, b) -> Vanishing:
    """Certify ``h^1(I_C(b1, b2)) = 0`` for every curve of bidegree ``d`` with nondegenerate birational projections.

    ``UNKNOWN`` means only that no certificate exists.
    """
    return Vanishing.UNKNOWN if regularity_witness(a, d, b) is None else Vanishing.VANISHES


def zset_bounding_box(A: ConfigurationMatrix) -> tuple[range, range]:
    """Ranges of ``d1`` and ``d2`` that can possibly lie in ``Z_A``."""
    a1, a2 = A.dims
    return range(a1, a1 + max(A.entries[1]) + 1), range(a2, a2 + max(A.entries[0]) + 1)


def z_set(A: ConfigurationMatrix) -> frozenset[Bidegree]:
    """Bidegrees certified finite for the generic CICY with configuration ``A``.

    ``(d1, d2)`` belongs to the set iff for every column ``j`` some ``u + v = 1``
    gives ``a1 <= d1 <= a1 + b_2j - 1 + v`` and ``a2 <= d2 <= a2 + b_1j - 1 + u``.

    Raises
    ------
    AmbientTooSmall
        If ``a1 < 2`` or ``a2 < 2``.
    """
    a1, a2 = A.dims
    if a1 < 2 or a2 < 2:
        raise AmbientTooSmall(
            f"Z_A needs both factors of dimension >= 2, got P^{a1} x P^{a2}"
        )
    r1, r2 = zset_bounding_box(A)
    out = set()
    for d1 in r1:
        for d2 in r2:
            if all(
                any(d1 <= a1 + y - 1 + v and d2 <= a2 + x - 1 + u for u, v in UV_CHOICES)
                for x, y in A.columns
            ):
                out.add(Bidegree(d1, d2))
    return frozenset(out)


def _is_tian_yau(A: ConfigurationMatrix) -> bool:
    c = canonical_form(A)
    return (c.dims, c.entries) == TIAN_YAU


def finiteness_certificate(A: ConfigurationMatrix, d) -> FinitenessCertificate:
    """Classify ``(A, d)``.

    Order of the checks: the three low bidegrees (finite for all curves), then
    ``d`` outside ``W_A`` (no nondegenerate curves), then membership in ``Z_A``
    when both ``a_i >= 2``. Everything else is ``UNKNOWN``.
    """
    d = _curve(d)
    notes = []
    if _is_tian_yau(A) and d == (3, 3):
        notes.append(TIAN_YAU_NOTE)
    if d in LOW_BIDEGREES:
        return FinitenessCertificate(A, d, Verdict.FINITE_ALL_CURVES, notes=tuple(notes))
    if not in_w_set(A.dims, d):
        return FinitenessCertificate(A, d, Verdict.EMPTY_NONDEGENERATE, notes=tuple(notes))
    if A.a1 >= 2 and A.a2 >= 2 and d in z_set(A):
        witness = tuple(regularity_witness(A.dims, d, b) for b in A.columns)
        return FinitenessCertificate(A, d, Verdict.FINITE_NONDEGENERATE, witness=witness, notes=tuple(notes))
    return FinitenessCertificate(A, d, Verdict.UNKNOWN, notes=tuple(notes))

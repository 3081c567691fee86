"""Dimensions of line-bundle cohomology on projective spaces and their products.

Everything is exact integer arithmetic. Ideal sheaves of curves are never
represented as objects; only the dimension identities they satisfy are.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .configuration import Bidegree, FactorDims, TwistDegree, _as_dims

__all__ = [
    "NegativeResultWarning",
    "CohomologyQuery",
    "IdealSheafQuery",
    "binomial",
    "h_projective_space",
    "h_product",
    "curve_restriction_degree",
    "h0_ideal_sheaf",
    "degenerate_twist_reduction",
]

_INT64_MAX = 2**63 - 1


class NegativeResultWarning(UserWarning):
    """``h0_ideal_sheaf`` came out negative with ``h1 = 0``: the vanishing hypothesis cannot hold."""


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` with ``C(n, k) = 0`` outside ``0 <= k <= n``.

    Raises OverflowError if the value leaves the signed 64-bit range, so
    tables never depend on arbitrary-precision behavior.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
        if out > _INT64_MAX:
            raise OverflowError(f"binomial({n}, {k}) exceeds 64-bit range")
    return out


@dataclass(frozen=True)
class CohomologyQuery:
    """``h^p(P^a1 x P^a2, O(b1, b2))``."""

    ambient: FactorDims
    twist: TwistDegree
    degree_index: int

    def __post_init__(self):
        object.__setattr__(self, "ambient", _as_dims(self.ambient))
        object.__setattr__(self, "twist", TwistDegree(*self.twist))
        if not 0 <= self.degree_index <= self.ambient.a1 + self.ambient.a2:
            raise ValueError(f"degree index {self.degree_index} out of range for {self.ambient}")


@dataclass(frozen=True)
class IdealSheafQuery:
    """``h^0(I_{C/X}(b1, b2))`` for a curve ``C`` of the given bidegree."""

    ambient: FactorDims
    curve_bidegree: Bidegree
    twist: TwistDegree

    def __post_init__(self):
        object.__setattr__(self, "ambient", _as_dims(self.ambient))
        object.__setattr__(self, "curve_bidegree", Bidegree(*self.curve_bidegree))
        object.__setattr__(self, "twist", TwistDegree(*self.twist))
        if min(self.twist) < 0:
            raise ValueError("ideal-sheaf twists must be nonnegative")
        if tuple(self.curve_bidegree) == (0, 0):
            raise ValueError("curve bidegree (0, 0) does not denote a curve")


def h_projective_space(n: int, b: int, p: int) -> int:
    """``h^p(P^n, O(b))``.

    Nonzero only for ``p = 0, b >= 0`` (value ``C(n+b, n)``) and for
    ``p = n, b <= -n-1`` (value ``C(-b-1, n)``).
    """
    if n < 1 or not 0 <= p <= n:
        raise ValueError(f"need n >= 1 and 0 <= p <= n, got n={n}, p={p}")
    if p == 0 and b >= 0:
        return binomial(n + b, n)
    if p == n and b <= -n - 1:
        return binomial(-b - 1, n)
    return 0


def h_product(q: CohomologyQuery) -> int:
    """Kunneth: ``sum over p1 + p2 = p`` of ``h^p1(P^a1, O(b1)) * h^p2(P^a2, O(b2))``."""
    (a1, a2), (b1, b2), p = q.ambient, q.twist, q.degree_index
    total = 0
    for p1 in range(max(0, p - a2), min(a1, p) + 1):
        total += h_projective_space(a1, b1, p1) * h_projective_space(a2, b2, p - p1)
    return total


def curve_restriction_degree(d, b) -> int:
    """Degree of ``O_X(b1, b2)`` restricted to a rational curve of bidegree ``(d1, d2)``."""
    d1, d2 = d
    b1, b2 = b
    return b1 * d1 + b2 * d2


def h0_ideal_sheaf(q: IdealSheafQuery, h1: int = 0) -> int:
    """Sections of ``O_X(b1, b2)`` vanishing on a smooth rational curve.

    Evaluates ``C(a1+b1, b1) C(a2+b2, b2) - 1 - b1 d1 - b2 d2 + h1``, where
    ``h1`` is the (caller-supplied) dimension of ``H^1(I_C(b1, b2))``. A negative
    result is returned unchanged, with a :class:`NegativeResultWarning` when
    ``h1 == 0``.
    """
    if h1 < 0:
        raise ValueError("h1 must be nonnegative")
    (a1, a2), (b1, b2) = q.ambient, q.twist
    value = binomial(a1 + b1, b1) * binomial(a2 + b2, b2) - 1 - curve_restriction_degree(q.curve_bidegree, q.twist) + h1
    if value < 0 and h1 == 0:
        warnings.warn(
            f"h0(I_C({b1},{b2})) = {value} < 0 on P^{a1} x P^{a2} for bidegree {tuple(q.curve_bidegree)}; "
            "h1 cannot vanish here",
            NegativeResultWarning,
            stacklevel=2,
        )
    return value


def degenerate_twist_reduction(b) -> TwistDegree:
    """Twist ``(b1 - 1, b2)`` of ``I_{H/X}(b1, b2) = O_X(b1 - 1, b2)`` for ``H = H_1 x P^a2``."""
    b1, b2 = b
    if b1 < 0 or b2 < 0:
        raise ValueError("twists must be nonnegative")
    return TwistDegree(b1 - 1, b2)

"""Enumeration of nondegenerate CICY configurations in ``P^a1 x P^a2`` up to symmetry."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator

from .configuration import (
    ConfigurationMatrix,
    FactorDims,
    canonical_form,
    is_block_diagonal,
    is_degenerate,
    validate_configuration,
    ConfigurationError,
)
from .finiteness import Bidegree, z_set

__all__ = [
    "MAX_CODIM",
    "CensusEntry",
    "Census",
    "PartitionReport",
    "compositions",
    "ambients",
    "enumerate_census",
    "p1_doubling_partner",
    "duplicate_pairs",
    "census_partition_report",
    "roman",
]

logger = logging.getLogger(__name__)

MAX_CODIM = 5
_ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII")


def roman(k: int) -> str:
    return _ROMAN[k - 1]


@dataclass(frozen=True)
class CensusEntry:
    matrix: ConfigurationMatrix
    duplicate_class: str | None = None
    z_set: frozenset[Bidegree] | None = field(default=None)

    @property
    def codim(self) -> int:
        return self.matrix.m

    @property
    def has_p1_factor(self) -> bool:
        return self.matrix.a1 == 1


@dataclass(frozen=True)
class Census:
    entries: tuple[CensusEntry, ...]

    @property
    def counts_by_codim(self) -> dict[int, int]:
        return dict(sorted(Counter(e.codim for e in self.entries).items()))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CensusEntry]:
        return iter(self.entries)

    def matrices(self) -> frozenset[ConfigurationMatrix]:
        return frozenset(e.matrix for e in self.entries)

    def find(self, A: ConfigurationMatrix) -> CensusEntry | None:
        c = canonical_form(A)
        for e in self.entries:
            if e.matrix == c:
                return e
        return None


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` nonnegative parts, largest first part first."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def ambients(max_codim: int = MAX_CODIM) -> list[FactorDims]:
    """All ``P^a1 x P^a2`` with ``a1 <= a2`` and codimension ``1..max_codim``."""
    return [FactorDims(a1, m + 3 - a1) for m in range(1, max_codim + 1) for a1 in range(1, (m + 3) // 2 + 1)]


def _configurations_on(dims: FactorDims) -> list[ConfigurationMatrix]:
    found = set()
    m = dims.m
    for r1 in compositions(dims.a1 + 1, m):
        for r2 in compositions(dims.a2 + 1, m):
            try:
                A = validate_configuration(dims, (r1, r2))
            except ConfigurationError:
                continue
            if is_degenerate(A) or is_block_diagonal(A):
                continue
            found.add(canonical_form(A))
    return sorted(found, key=ConfigurationMatrix.sort_key)


def p1_doubling_partner(A: ConfigurationMatrix) -> ConfigurationMatrix | None:
    """Partner under ``P^1 [2 c1; c2] ~ P^2 [2 c1; 0 c2]`` with the first factor doubled or halved.

    Examples
    --------
    >>> A = validate_configuration((1, 3), [[2], [4]])
    >>> print(p1_doubling_partner(A))
    [P^2 | 2 1 ]
    [P^3 | 0 4 ]
    """
    A = canonical_form(A)
    for B in (A, A.swapped()) if A.a1 == A.a2 else (A,):
        cols = list(B.columns)
        if B.a1 == 1 and all(x % 2 == 0 for x, _ in cols):
            new = [(x // 2, y) for x, y in cols] + [(2, 0)]
            dims = FactorDims(2, B.a2)
        elif B.a1 == 2 and (2, 0) in cols:
            cols.remove((2, 0))
            new = [(2 * x, y) for x, y in cols]
            dims = FactorDims(1, B.a2)
        else:
            continue
        try:
            C = validate_configuration(dims, (tuple(c[0] for c in new), tuple(c[1] for c in new)))
        except ConfigurationError:
            return None
        return canonical_form(C)
    return None


def _label_duplicates(entries: list[CensusEntry]) -> list[CensusEntry]:
    index = {e.matrix: i for i, e in enumerate(entries)}
    labels: dict[int, str] = {}
    k = 0
    # census order on the P^1 member fixes the numbering
    for i, e in enumerate(entries):
        if not e.has_p1_factor:
            continue
        partner = p1_doubling_partner(e.matrix)
        if partner is None or partner not in index:
            continue
        k += 1
        labels[i] = labels[index[partner]] = roman(k)
    return [replace(e, duplicate_class=labels.get(i)) for i, e in enumerate(entries)]


def _entry(A: ConfigurationMatrix) -> CensusEntry:
    zs = z_set(A) if A.a1 >= 2 and A.a2 >= 2 else None
    return CensusEntry(matrix=A, z_set=zs)


def _chunk(dims: FactorDims) -> list[CensusEntry]:
    return [_entry(A) for A in _configurations_on(dims)]


def enumerate_census(max_codim: int = MAX_CODIM, workers: int | None = None) -> Census:
    """Every valid, nondegenerate, non-block-diagonal configuration with ``m <= max_codim``.

    Parameters
    ----------
    max_codim : int
        Between 1 and 5.
    workers : int, optional
        If greater than 1, ambients are enumerated in that many processes. The
        result does not depend on this.
    """
    if not 1 <= max_codim <= MAX_CODIM:
        raise ValueError(f"max_codim must be between 1 and {MAX_CODIM}, got {max_codim}")
    amb = ambients(max_codim)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_chunk, amb))
    else:
        chunks = [_chunk(d) for d in amb]
    entries = sorted((e for c in chunks for e in c), key=lambda e: e.matrix.sort_key())
    census = Census(tuple(_label_duplicates(entries)))
    logger.debug("census up to codim %d: %s", max_codim, census.counts_by_codim)
    return census


def duplicate_pairs(census: Census) -> list[tuple[CensusEntry, CensusEntry]]:
    """Pairs of census entries related by :func:`p1_doubling_partner`, ``P^1`` member first."""
    by_matrix = {e.matrix: e for e in census}
    pairs = []
    for e in census:
        if not e.has_p1_factor:
            continue
        partner = p1_doubling_partner(e.matrix)
        if partner is not None and partner in by_matrix:
            pairs.append((e, by_matrix[partner]))
    return pairs


@dataclass(frozen=True)
class PartitionReport:
    total: int
    with_p1_factor: int
    both_at_least_2: int
    tabulated: int
    singleton_multi_column: int
    p2xp2_hypersurface: int

    @property
    def untabulated(self) -> int:
        return self.singleton_multi_column + self.p2xp2_hypersurface

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "with_p1_factor": self.with_p1_factor,
            "both_at_least_2": self.both_at_least_2,
            "tabulated": self.tabulated,
            "singleton_multi_column": self.singleton_multi_column,
            "p2xp2_hypersurface": self.p2xp2_hypersurface,
            "untabulated": self.untabulated,
        }


def census_partition_report(census: Census) -> PartitionReport:
    """Split the entries by ambient type and by the size of ``Z_A``.

    ``tabulated`` counts entries with ``a_i >= 2``, ``m >= 2`` and ``|Z_A| >= 2``;
    ``singleton_multi_column`` those with ``m > 1`` and ``Z_A = {(a1, a2)}``.
    """
    big = [e for e in census if e.z_set is not None]
    tab = sum(1 for e in big if e.codim >= 2 and len(e.z_set) >= 2)
    single = sum(1 for e in big if e.codim > 1 and e.z_set == {Bidegree(e.matrix.a1, e.matrix.a2)})
    p2p2 = sum(1 for e in big if e.codim == 1 and tuple(e.matrix.dims) == (2, 2))
    return PartitionReport(
        total=len(census),
        with_p1_factor=sum(1 for e in census if e.has_p1_factor),
        both_at_least_2=len(big),
        tabulated=tab,
        singleton_multi_column=single,
        p2xp2_hypersurface=p2p2,
    )

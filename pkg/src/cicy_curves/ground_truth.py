"""Published census of the 57 configurations and the table of ``Z_A`` sets.

Matrices are transcribed in the printed row and column order, which is not
always the canonical one. A SHA-256 over the serialized data guards against
accidental edits; see :func:`checksum`.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .configuration import FactorDims
from .finiteness import Bidegree

__all__ = [
    "AppendixAEntry",
    "AppendixBEntry",
    "Erratum",
    "PaperGroundTruth",
    "EXPECTED_CHECKSUM",
    "checksum",
    "p2xp2_zset",
    "default_ground_truth",
]


def _m(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    r1, r2 = text.split("/")
    return tuple(int(x) for x in r1.split()), tuple(int(x) for x in r2.split())


@dataclass(frozen=True)
class AppendixAEntry:
    dims: FactorDims
    rows: tuple[tuple[int, ...], tuple[int, ...]]
    label: str | None = None

    @property
    def p1_flag(self) -> bool:
        return min(self.dims.a1, self.dims.a2) == 1


@dataclass(frozen=True)
class AppendixBEntry:
    dims: FactorDims
    rows: tuple[tuple[int, ...], tuple[int, ...]]
    z_set: frozenset[Bidegree]


@dataclass(frozen=True)
class Erratum:
    """A printed ``Z_A`` that contradicts the defining inequalities."""

    dims: FactorDims
    rows: tuple[tuple[int, ...], tuple[int, ...]]
    printed: frozenset[Bidegree]
    corrected: frozenset[Bidegree]
    reason: str


def _a(a1, a2, text, label=None):
    return AppendixAEntry(FactorDims(a1, a2), _m(text), label)


def _b(a1, a2, text, *pairs):
    return AppendixBEntry(FactorDims(a1, a2), _m(text), frozenset(Bidegree(*p) for p in pairs))


APPENDIX_A = (
    # codimension 1
    _a(1, 3, "2/4", "I"),
    _a(2, 2, "3/3"),
    # codimension 2
    _a(1, 4, "1 1/1 4"),
    _a(1, 4, "1 1/2 3"),
    _a(1, 4, "2 0/1 4", "II"),
    _a(1, 4, "2 0/2 3", "III"),
    _a(1, 4, "2 0/3 2", "IV"),
    _a(2, 3, "2 1/0 4", "I"),
    _a(2, 3, "2 1/1 3"),
    _a(2, 3, "2 1/2 2"),
    _a(2, 3, "2 1/3 1"),
    _a(2, 3, "3 0/1 3"),
    _a(2, 3, "3 0/2 2"),
    # codimension 3
    _a(1, 5, "1 1 0/1 1 4"),
    _a(1, 5, "1 1 0/1 2 3"),
    _a(1, 5, "1 1 0/1 3 2"),
    _a(1, 5, "1 1 0/2 2 2"),
    _a(1, 5, "2 0 0/1 2 3", "V"),
    _a(1, 5, "2 0 0/2 2 2", "VI"),
    _a(2, 4, "2 1 0/0 1 4", "II"),
    _a(2, 4, "2 1 0/0 2 3", "III"),
    _a(2, 4, "2 1 0/0 3 2", "IV"),
    _a(2, 4, "1 1 1/1 3 1"),
    _a(2, 4, "1 1 1/2 1 2"),
    _a(2, 4, "2 1 0/1 1 3"),
    _a(2, 4, "2 1 0/1 2 2"),
    _a(2, 4, "2 1 0/2 1 2"),
    _a(3, 3, "2 1 1/0 1 3"),
    _a(3, 3, "2 1 1/1 1 2"),
    _a(3, 3, "2 1 1/2 1 1"),
    _a(3, 3, "2 2 0/1 0 3"),
    _a(3, 3, "2 2 0/1 1 2"),
    _a(3, 3, "2 2 0/2 0 2"),
    _a(2, 4, "3 0 0/1 2 2"),
    _a(3, 3, "3 1 0/0 1 3"),
    # codimension 4
    _a(1, 6, "1 1 0 0/1 1 2 3"),
    _a(1, 6, "1 1 0 0/1 2 2 2"),
    _a(1, 6, "2 0 0 0/1 2 2 2", "VII"),
    _a(2, 5, "2 1 0 0/0 1 2 3", "V"),
    _a(2, 5, "2 1 0 0/0 2 2 2", "VI"),
    _a(2, 5, "2 1 0 0/1 1 2 2"),
    _a(2, 5, "1 1 1 0/1 1 2 2"),
    _a(2, 5, "1 1 1 0/1 1 1 3"),
    _a(3, 4, "1 1 1 1/2 1 1 1"),
    _a(3, 4, "2 1 1 0/0 1 1 3"),
    _a(3, 4, "2 1 1 0/0 1 2 2"),
    _a(3, 4, "2 1 1 0/1 1 1 2"),
    _a(3, 4, "2 2 0 0/0 1 2 2"),
    _a(3, 4, "3 1 0 0/0 1 2 2"),
    # codimension 5
    _a(1, 7, "1 1 0 0 0/1 1 2 2 2"),
    _a(2, 6, "2 1 0 0 0/0 1 2 2 2", "VII"),
    _a(3, 5, "1 1 1 1 0/1 1 1 1 2"),
    _a(4, 4, "1 1 1 1 1/1 1 1 1 1"),
    _a(2, 6, "1 1 1 0 0/1 1 1 2 2"),
    _a(3, 5, "2 1 1 0 0/0 1 1 2 2"),
    _a(4, 4, "2 1 1 1 0/0 1 1 1 2"),
    _a(4, 4, "2 2 1 0 0/0 0 1 2 2"),
)

APPENDIX_B = (
    _b(2, 3, "2 1/0 4", (2, 3), (2, 4)),
    _b(2, 3, "2 1/1 3", (2, 3), (2, 4), (3, 3), (3, 4)),
    _b(2, 3, "2 1/2 2", (2, 3), (2, 4), (3, 4), (4, 3), (3, 3)),
    _b(2, 3, "2 1/3 1", (2, 3), (2, 4), (3, 3)),
    _b(2, 3, "3 0/1 3", (2, 3), (3, 3)),
    _b(2, 3, "3 0/2 2", (2, 3), (3, 3)),
    _b(2, 4, "1 1 1/1 3 1", (2, 4), (2, 5), (3, 4)),
    _b(2, 4, "1 1 1/2 1 2", (2, 4), (2, 5), (3, 4)),
    _b(2, 4, "2 1 0/1 1 3", (2, 4), (3, 4)),
    _b(2, 4, "2 1 0/1 2 2", (2, 4), (3, 4)),
    _b(2, 4, "2 1 0/2 1 2", (2, 4), (3, 4)),
    _b(2, 4, "3 0 0/1 2 2", (2, 4), (3, 4)),
    _b(3, 3, "2 1 1/1 1 2", (3, 3), (3, 4), (4, 3)),
    _b(3, 3, "2 1 1/2 1 1", (3, 3), (3, 4), (4, 3)),
    _b(3, 3, "2 2 0/1 1 2", (3, 3), (4, 3)),
    _b(3, 3, "2 1 1/0 1 3", (3, 3), (3, 4)),
    _b(2, 5, "1 1 1 0/1 1 1 3", (2, 5), (3, 5)),
    _b(2, 5, "1 1 1 0/1 1 2 2", (2, 5), (3, 5)),
    _b(2, 5, "2 1 0 0/1 1 2 2", (2, 5), (3, 5)),
    _b(3, 4, "1 1 1 1/2 1 1 1", (3, 4), (4, 5), (4, 4)),
    _b(3, 4, "2 1 1 0/1 1 1 2", (3, 4), (4, 4)),
    _b(2, 6, "1 1 1 0 0/1 1 1 2 2", (2, 6), (3, 6)),
    _b(3, 5, "1 1 1 1 0/1 1 1 1 2", (3, 5), (4, 5)),
    _b(4, 4, "1 1 1 1 1/1 1 1 1 1", (4, 4), (4, 5), (5, 4)),
)

ERRATA = (
    Erratum(
        FactorDims(3, 4),
        _m("1 1 1 1/2 1 1 1"),
        printed=frozenset({Bidegree(3, 4), Bidegree(4, 5), Bidegree(4, 4)}),
        corrected=frozenset({Bidegree(3, 4), Bidegree(3, 5), Bidegree(4, 4)}),
        reason=(
            "(4,5) fails the (1,1) columns: with d2 = 5 they force u = 1, v = 0 and so d1 <= 3; "
            "(3,5) satisfies every column (d1 <= 3 via (u,v) = (1,0) for the (1,1) columns, "
            "d1 <= 4 for the (1,2) column)"
        ),
    ),
)


def p2xp2_zset() -> frozenset[Bidegree]:
    """``{2 <= d_i <= 5} minus {(5, 5)}`` for the cubic-cubic hypersurface in ``P^2 x P^2``."""
    return frozenset(Bidegree(i, j) for i in range(2, 6) for j in range(2, 6) if (i, j) != (5, 5))


COUNTS = {
    "total": 57,
    "by_codim": {1: 2, 2: 11, 3: 22, 4: 14, 5: 8},
    "tabulated": 24,
    "untabulated_both_at_least_2": 17,
    "singleton_multi_column": 16,
    "p2xp2_hypersurface": 1,
    "duplicate_pairs": 7,
}


@dataclass(frozen=True)
class PaperGroundTruth:
    appendix_a: tuple[AppendixAEntry, ...]
    appendix_b: tuple[AppendixBEntry, ...]
    p2xp2_rule: frozenset[Bidegree]
    counts: dict = field(hash=False)
    errata: tuple[Erratum, ...] = ()

    def to_dict(self) -> dict:
        def rows(r):
            return [list(r[0]), list(r[1])]

        def pairs(zs):
            return [list(d) for d in sorted(zs)]

        return {
            "appendix_a": [
                {"dims": list(e.dims), "matrix": rows(e.rows), "label": e.label, "p1": e.p1_flag} for e in self.appendix_a
            ],
            "appendix_b": [{"dims": list(e.dims), "matrix": rows(e.rows), "z_set": pairs(e.z_set)} for e in self.appendix_b],
            "p2xp2_rule": pairs(self.p2xp2_rule),
            "counts": {k: ({str(m): n for m, n in v.items()} if isinstance(v, dict) else v) for k, v in self.counts.items()},
            "errata": [
                {"dims": list(e.dims), "matrix": rows(e.rows), "printed": pairs(e.printed), "corrected": pairs(e.corrected)}
                for e in self.errata
            ],
        }


    @classmethod
    def from_dict(cls, obj: dict) -> "PaperGroundTruth":
        """Inverse of :meth:`to_dict`; erratum reasons are not serialized and come back empty."""

        def rows(r):
            return tuple(r[0]), tuple(r[1])

        def pairs(zs):
            return frozenset(Bidegree(*d) for d in zs)

        counts = {k: ({int(m): n for m, n in v.items()} if isinstance(v, dict) else v) for k, v in obj["counts"].items()}
        return cls(
            appendix_a=tuple(AppendixAEntry(FactorDims(*e["dims"]), rows(e["matrix"]), e.get("label")) for e in obj["appendix_a"]),
            appendix_b=tuple(AppendixBEntry(FactorDims(*e["dims"]), rows(e["matrix"]), pairs(e["z_set"])) for e in obj["appendix_b"]),
            p2xp2_rule=pairs(obj["p2xp2_rule"]),
            counts=counts,
            errata=tuple(
                Erratum(FactorDims(*e["dims"]), rows(e["matrix"]), pairs(e["printed"]), pairs(e["corrected"]), "")
                for e in obj.get("errata", ())
            ),
        )


def checksum(truth: PaperGroundTruth) -> str:
    blob = json.dumps(truth.to_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def default_ground_truth() -> PaperGroundTruth:
    return PaperGroundTruth(
        appendix_a=APPENDIX_A,
        appendix_b=APPENDIX_B,
        p2xp2_rule=p2xp2_zset(),
        counts={k: (dict(v) if isinstance(v, dict) else v) for k, v in COUNTS.items()},
        errata=ERRATA,
    )


# sha256 of the canonical JSON of default_ground_truth(); update only together with the data
EXPECTED_CHECKSUM = "1f7ac88d545c05440e8f7d55686797cb0b7bae7fc1b5eae731b29cca6732e220"

"""JSON, CSV and text renderings of matrices, census entries and certificates.

JSON is the lossless interchange format. CSV flattens each matrix row-major
with ``;`` between entries and ``/`` between the two rows. Text output is for
reading, though a rendered matrix can be parsed back.
"""

from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path

from .census import Census, CensusEntry
from .configuration import ConfigurationMatrix, canonical_form, validate_configuration
from .finiteness import Bidegree, FinitenessCertificate

__all__ = [
    "MatrixSpecError",
    "matrix_to_dict",
    "matrix_from_dict",
    "parse_matrix_spec",
    "render_matrix_text",
    "parse_matrix_text",
    "format_zset",
    "census_to_dicts",
    "census_to_json",
    "census_from_json",
    "census_to_csv",
    "census_to_text",
    "certificate_to_json",
    "zset_table_csv",
]

STAR = "★"


class MatrixSpecError(ValueError):
    """A matrix specification could not be read."""


def matrix_to_dict(A: ConfigurationMatrix) -> dict:
    return A.to_dict()


def matrix_from_dict(obj) -> ConfigurationMatrix:
    """Validate ``{"dims": [a1, a2], "matrix": [[...], [...]]}``."""
    try:
        dims = obj["dims"]
        rows = obj["matrix"]
    except (TypeError, KeyError) as exc:
        raise MatrixSpecError(f"expected an object with 'dims' and 'matrix', got {obj!r}") from exc
    if not (isinstance(dims, list) and len(dims) == 2 and all(type(a) is int for a in dims)):
        raise MatrixSpecError(f"'dims' must be two integers, got {dims!r}")
    if not (isinstance(rows, list) and all(isinstance(r, list) and all(type(b) is int for b in r) for r in rows)):
        raise MatrixSpecError(f"'matrix' must be a list of integer rows, got {rows!r}")
    return validate_configuration(tuple(dims), rows)


def parse_matrix_spec(spec: str) -> ConfigurationMatrix:
    """Read a matrix from inline JSON, ``@path`` to a JSON file, or the text layout.

    Validation errors from :func:`validate_configuration` propagate unchanged;
    anything unreadable raises :class:`MatrixSpecError`.
    """
    text = spec
    if spec.startswith("@"):
        try:
            text = Path(spec[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise MatrixSpecError(f"cannot read {spec[1:]}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return parse_matrix_text(text)
    return matrix_from_dict(obj)


def render_matrix_text(A: ConfigurationMatrix, star: bool = False, label: str | None = None) -> str:
    """Bracket layout with the ``P^a`` prefix column, e.g.::

        [P^2 | 2 1 ]
        [P^3 | 0 4 ]
    """
    body = str(A).split("\n")
    pad = STAR + " " if star else "  "
    lines = [pad + body[0], "  " + body[1]]
    if label:
        lines[0] += f" ({label})"
    return "\n".join(lines)


_ROW = re.compile(r"\[\s*P\^?(\d+)\s*\|\s*([\d\s]+?)\s*\]")


def parse_matrix_text(text: str) -> ConfigurationMatrix:
    rows = _ROW.findall(text)
    if len(rows) != 2:
        raise MatrixSpecError(f"expected two '[P^a | b ... ]' rows, found {len(rows)}")
    dims = tuple(int(a) for a, _ in rows)
    return validate_configuration(dims, [[int(b) for b in r.split()] for _, r in rows])


def format_zset(zs) -> str:
    return ", ".join(f"({d1},{d2})" for d1, d2 in sorted(zs))


def _entry_dict(e: CensusEntry) -> dict:
    return {
        **e.matrix.to_dict(),
        "codim": e.codim,
        "has_p1_factor": e.has_p1_factor,
        "duplicate_class": e.duplicate_class,
        "z_set": None if e.z_set is None else [list(d) for d in sorted(e.z_set)],
    }


def census_to_dicts(census: Census) -> list[dict]:
    return [_entry_dict(e) for e in census]


def census_to_json(census: Census) -> str:
    return json.dumps(census_to_dicts(census), indent=2) + "\n"


def census_from_json(text: str) -> Census:
    """Inverse of :func:`census_to_json`; checks that each stored field agrees with the matrix."""
    entries = []
    for obj in json.loads(text):
        A = matrix_from_dict(obj)
        if canonical_form(A) != A:
            raise MatrixSpecError(f"census entry {obj['matrix']} is not in canonical form")
        if obj["codim"] != A.m or obj["has_p1_factor"] != (A.a1 == 1):
            raise MatrixSpecError(f"inconsistent codim or P^1 flag for {obj['matrix']}")
        zs = obj.get("z_set")
        entries.append(
            CensusEntry(
                matrix=A,
                duplicate_class=obj.get("duplicate_class"),
                z_set=None if zs is None else frozenset(Bidegree(*d) for d in zs),
            )
        )
    return Census(tuple(entries))


def _flat(A: ConfigurationMatrix) -> str:
    return "/".join(";".join(map(str, row)) for row in A.entries)


def census_to_csv(census: Census) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a1", "a2", "matrix", "codim", "has_p1_factor", "duplicate_class", "z_set"])
    for e in census:
        w.writerow(
            [
                e.matrix.a1,
                e.matrix.a2,
                _flat(e.matrix),
                e.codim,
                int(e.has_p1_factor),
                e.duplicate_class or "",
                "" if e.z_set is None else format_zset(e.z_set),
            ]
        )
    return buf.getvalue()


def census_to_text(census: Census) -> str:
    out = []
    for m, n in census.counts_by_codim.items():
        out.append(f"Codimension {m}: {n} configuration{'s' if n != 1 else ''}")
        out.append("")
        for e in census:
            if e.codim == m:
                out.append(render_matrix_text(e.matrix, star=e.has_p1_factor, label=e.duplicate_class))
                out.append("")
    return "\n".join(out)


def certificate_to_json(cert: FinitenessCertificate) -> str:
    return json.dumps(cert.to_dict(), indent=2) + "\n"


def zset_table_csv(rows) -> str:
    """CSV with columns ``m, a1, a2, matrix, z_set`` for ``(matrix, z_set)`` pairs."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "a1", "a2", "matrix", "z_set"])
    for A, zs in rows:
        w.writerow([A.m, A.a1, A.a2, _flat(A), format_zset(zs)])
    return buf.getvalue()

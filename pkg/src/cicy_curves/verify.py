"""Recompute the census and ``Z_A`` table and diff them against the published data."""

from __future__ import annotations

from dataclasses import dataclass, field

from .census import Census, census_partition_report, duplicate_pairs, enumerate_census
from .configuration import ConfigurationMatrix, canonical_form, validate_configuration
from .finiteness import Bidegree, z_set
from .ground_truth import EXPECTED_CHECKSUM, PaperGroundTruth, checksum, default_ground_truth

__all__ = ["VerificationReport", "verify_paper"]


def _key(A: ConfigurationMatrix) -> str:
    return f"P^{A.a1}xP^{A.a2} {[list(r) for r in A.entries]}"


def _pairs(zs) -> list[list[int]]:
    return [list(d) for d in sorted(zs)]


@dataclass
class VerificationReport:
    per_codim_diffs: list = field(default_factory=list)
    zset_mismatches: list = field(default_factory=list)
    duplicate_pair_diffs: list = field(default_factory=list)
    count_diffs: list = field(default_factory=list)
    integrity_diffs: list = field(default_factory=list)
    errata_applied: list = field(default_factory=list)
    summary_counts: dict = field(default_factory=dict)

    @property
    def census_match(self) -> bool:
        return not (
            self.per_codim_diffs
            or self.zset_mismatches
            or self.duplicate_pair_diffs
            or self.count_diffs
            or self.integrity_diffs
        )

    def to_dict(self) -> dict:
        return {
            "census_match": self.census_match,
            "per_codim_diffs": self.per_codim_diffs,
            "zset_mismatches": self.zset_mismatches,
            "duplicate_pair_diffs": self.duplicate_pair_diffs,
            "count_diffs": self.count_diffs,
            "integrity_diffs": self.integrity_diffs,
            "errata_applied": self.errata_applied,
            "summary_counts": self.summary_counts,
        }

    def render(self) -> str:
        def mark(ok):
            return "ok  " if ok else "FAIL"

        lines = [
            f"[{mark(not self.integrity_diffs)}] ground-truth checksum",
            f"[{mark(not self.per_codim_diffs)}] census by codimension {self.summary_counts.get('by_codim')}",
            f"[{mark(not self.zset_mismatches)}] Z_A sets",
            f"[{mark(not self.duplicate_pair_diffs)}] duplicate pairs ({self.summary_counts.get('duplicate_pairs')})",
            f"[{mark(not self.count_diffs)}] partition counts",
        ]
        for name in ("integrity_diffs", "per_codim_diffs", "zset_mismatches", "duplicate_pair_diffs", "count_diffs"):
            for d in getattr(self, name):
                lines.append(f"  {name}: {d}")
        for e in self.errata_applied:
            lines.append(f"  erratum applied: {e['matrix']} printed {e['printed']} -> {e['corrected']}")
        lines.append("verify-paper: " + ("all results match" if self.census_match else "MISMATCH"))
        return "\n".join(lines)


def _check_census(census: Census, truth: PaperGroundTruth, rep: VerificationReport) -> None:
    expected: dict[int, set] = {}
    for e in truth.appendix_a:
        A = canonical_form(validate_configuration(e.dims, e.rows))
        expected.setdefault(A.m, set()).add(A)
    computed: dict[int, set] = {}
    for e in census:
        computed.setdefault(e.codim, set()).add(e.matrix)
    declared = truth.counts.get("by_codim", {})
    for m in sorted(set(expected) | set(computed) | set(declared)):
        exp, got = expected.get(m, set()), computed.get(m, set())
        if exp != got or declared.get(m) != len(got) or declared.get(m) != len(exp):
            rep.per_codim_diffs.append(
                {
                    "codim": m,
                    "declared": declared.get(m),
                    "transcribed": len(exp),
                    "computed": len(got),
                    "missing": sorted(_key(A) for A in exp - got),
                    "extra": sorted(_key(A) for A in got - exp),
                }
            )


def _check_zsets(census: Census, truth: PaperGroundTruth, apply_errata: bool, rep: VerificationReport) -> None:
    errata = {}
    if apply_errata:
        errata = {canonical_form(validate_configuration(e.dims, e.rows)): e for e in truth.errata}
    tabulated = set()
    for e in truth.appendix_b:
        A = validate_configuration(e.dims, e.rows)
        c = canonical_form(A)
        tabulated.add(c)
        expected = e.z_set
        fix = errata.get(c)
        if fix is not None and fix.printed == e.z_set:
            expected = fix.corrected
            rep.errata_applied.append(
                {"matrix": _key(A), "printed": _pairs(fix.printed), "corrected": _pairs(fix.corrected), "reason": fix.reason}
            )
        got = z_set(A)
        if got != expected:
            rep.zset_mismatches.append({"matrix": _key(A), "expected": _pairs(expected), "computed": _pairs(got)})
    # entries absent from the table: singleton, or the P^2 x P^2 rule
    for e in census:
        A = e.matrix
        if e.z_set is None or A in tabulated:
            continue
        expected = truth.p2xp2_rule if tuple(A.dims) == (2, 2) else frozenset({Bidegree(A.a1, A.a2)})
        if e.z_set != expected:
            rep.zset_mismatches.append({"matrix": _key(A), "expected": _pairs(expected), "computed": _pairs(e.z_set)})


def _check_duplicates(census: Census, truth: PaperGroundTruth, rep: VerificationReport) -> None:
    expected: dict[str, set] = {}
    for e in truth.appendix_a:
        if e.label:
            expected.setdefault(e.label, set()).add(_key(canonical_form(validate_configuration(e.dims, e.rows))))
    computed: dict[str, set] = {}
    for p, q in duplicate_pairs(census):
        computed.setdefault(p.duplicate_class or "?", set()).update({_key(p.matrix), _key(q.matrix)})
    for label in sorted(set(expected) | set(computed)):
        if expected.get(label) != computed.get(label):
            rep.duplicate_pair_diffs.append(
                {"label": label, "expected": sorted(expected.get(label, ())), "computed": sorted(computed.get(label, ()))}
            )


def verify_paper(
    truth: PaperGroundTruth | None = None, *, apply_errata: bool = True, census: Census | None = None
) -> VerificationReport:
    """Diff the recomputed results against ``truth`` (the embedded data by default).

    With ``apply_errata`` a tabulated ``Z_A`` listed in ``truth.errata`` is
    compared against its corrected value, and each substitution is reported in
    ``errata_applied``.
    """
    truth = truth or default_ground_truth()
    census = census or enumerate_census(5)
    rep = VerificationReport()

    digest = checksum(truth)
    if digest != EXPECTED_CHECKSUM:
        rep.integrity_diffs.append({"expected_checksum": EXPECTED_CHECKSUM, "computed_checksum": digest})

    _check_census(census, truth, rep)
    _check_zsets(census, truth, apply_errata, rep)
    _check_duplicates(census, truth, rep)

    part = census_partition_report(census)
    pairs = duplicate_pairs(census)
    rep.summary_counts = {**part.to_dict(), "by_codim": census.counts_by_codim, "duplicate_pairs": len(pairs)}
    observed = {
        "total": part.total,
        "tabulated": part.tabulated,
        "untabulated_both_at_least_2": part.untabulated,
        "singleton_multi_column": part.singleton_multi_column,
        "p2xp2_hypersurface": part.p2xp2_hypersurface,
        "duplicate_pairs": len(pairs),
    }
    for k, v in observed.items():
        if truth.counts.get(k) != v:
            rep.count_diffs.append({"count": k, "expected": truth.counts.get(k), "computed": v})
    if len(truth.appendix_b) != truth.counts.get("tabulated"):
        rep.count_diffs.append(
            {"count": "appendix_b rows", "expected": truth.counts.get("tabulated"), "computed": len(truth.appendix_b)}
        )
    return rep

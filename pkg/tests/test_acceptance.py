"""Acceptance criteria C1-C10.

Each test records one PASS/FAIL line in ``RESULTS`` (shown in the pytest
terminal summary) before asserting. Run directly with
``python tests/test_acceptance.py`` for the same lines without pytest.
"""

import json
import random
import subprocess
import sys
import time
import warnings
from fractions import Fraction
from functools import lru_cache
from math import prod
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from cicy_curves import enumerate_census  # noqa: E402
from cicy_curves.census import census_partition_report, duplicate_pairs  # noqa: E402
from cicy_curves.cohomology import (  # noqa: E402
    CohomologyQuery,
    IdealSheafQuery,
    NegativeResultWarning,
    h0_ideal_sheaf,
    h_product,
    h_projective_space,
)
from cicy_curves.configuration import canonical_form, is_degenerate, validate_configuration  # noqa: E402
from cicy_curves.finiteness import (  # noqa: E402
    Vanishing,
    dim_family,
    dim_moduli_curves,
    fiber_dimension,
    h1_vanishing_by_regularity,
    in_w_set,
    z_set,
    zset_bounding_box,
)
from cicy_curves.ground_truth import APPENDIX_A, APPENDIX_B, default_ground_truth  # noqa: E402
from oracles import dim_moduli_unsimplified, h_cech, h_serre, monomials  # noqa: E402

RESULTS: dict[str, tuple[bool, str]] = {}


def record(key: str, ok: bool, detail: str) -> bool:
    RESULTS[key] = (bool(ok), detail)
    print(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
    return ok


@lru_cache(maxsize=None)
def census():
    return enumerate_census(5)


def _pairs(zs):
    return sorted(tuple(d) for d in zs)


def test_c1_census_counts():
    t0 = time.perf_counter()
    c = enumerate_census(5)
    elapsed = time.perf_counter() - t0
    ok_shape = all(canonical_form(e.matrix) == e.matrix and not is_degenerate(e.matrix) for e in c)
    by = c.counts_by_codim
    ok = len(c) == 57 and [by[m] for m in range(1, 6)] == [2, 11, 22, 14, 8] and ok_shape and elapsed < 5
    assert record("C1", ok, f"{len(c)} configurations, by codim {[by.get(m) for m in range(1, 6)]}, {elapsed:.2f}s")


def test_c2_census_content():
    expected = {canonical_form(validate_configuration(e.dims, e.rows)) for e in APPENDIX_A}
    got = census().matrices()
    ok = got == expected and len(expected) == 57
    assert record("C2", ok, f"missing {len(expected - got)}, extra {len(got - expected)}")


def test_c3_duplicate_pairs():
    pairs = duplicate_pairs(census())
    A = validate_configuration((1, 3), [[2], [4]])
    partner = [q.matrix for p, q in pairs if p.matrix == A]
    B = validate_configuration((2, 3), [[2, 1], [0, 4]])
    label = [p.duplicate_class for p, _ in pairs if p.matrix == A]
    ok = len(pairs) == 7 and partner == [B] and label == ["I"]
    assert record("C3", ok, f"{len(pairs)} pairs; partner of [2;4] on P1xP3 is {partner[0].entries if partner else None} ({label})")


SPOT_ROWS = [
    ((2, 3), [[2, 1], [0, 4]], {(2, 3), (2, 4)}),
    ((2, 3), [[3, 0], [1, 3]], {(2, 3), (3, 3)}),
    ((3, 3), [[2, 1, 1], [2, 1, 1]], {(3, 3), (3, 4), (4, 3)}),
    ((4, 4), [[1, 1, 1, 1, 1], [1, 1, 1, 1, 1]], {(4, 4), (4, 5), (5, 4)}),
]


def test_c4_spot_rows():
    bad = [(rows, _pairs(z_set(validate_configuration(dims, rows)))) for dims, rows, zs in SPOT_ROWS
           if z_set(validate_configuration(dims, rows)) != zs]
    assert record("C4.spot", not bad, f"{len(SPOT_ROWS) - len(bad)}/{len(SPOT_ROWS)} spot rows match" + (f"; {bad}" if bad else ""))


def test_c4_zset_table():
    # compared against the table as printed; see the ledger for the one row whose printed set is wrong
    t0 = time.perf_counter()
    computed = [(e, z_set(validate_configuration(e.dims, e.rows))) for e in APPENDIX_B]
    elapsed = time.perf_counter() - t0
    bad = [(tuple(e.dims), e.rows, _pairs(e.z_set), _pairs(zs)) for e, zs in computed if zs != e.z_set]
    detail = f"{len(APPENDIX_B) - len(bad)}/{len(APPENDIX_B)} rows equal the printed set, {elapsed * 1000:.0f}ms"
    for dims, rows, printed, got in bad:
        detail += f"; P^{dims[0]}xP^{dims[1]} {[list(r) for r in rows]} printed {printed} computed {got}"
    ok = not bad and len(APPENDIX_B) == 24 and elapsed < 1
    assert record("C4", ok, detail)


def test_c5_p2xp2():
    zs = z_set(validate_configuration((2, 2), [[3], [3]]))
    expected = {(a, b) for a in range(2, 6) for b in range(2, 6)} - {(5, 5)}
    ok = zs == expected and len(zs) == 15 and zs == default_ground_truth().p2xp2_rule
    assert record("C5", ok, f"|Z_A| = {len(zs)}")


def test_c6_partition_counts():
    r = census_partition_report(census())
    ok = (r.both_at_least_2, r.singleton_multi_column, r.tabulated, r.p2xp2_hypersurface, r.untabulated) == (41, 16, 24, 1, 17)
    assert record(
        "C6",
        ok,
        f"both>=2 {r.both_at_least_2}, singleton {r.singleton_multi_column}, tabulated {r.tabulated}, "
        f"P2xP2 {r.p2xp2_hypersurface}, untabulated {r.untabulated}",
    )


def test_c7_theorem_invariants():
    violations = []
    for e in census():
        A = e.matrix
        if A.a1 < 2:
            continue
        zs = z_set(A)
        if (A.a1, A.a2) not in zs:
            violations.append(("nonempty", A.entries))
        if not all(in_w_set(A.dims, d) for d in zs):
            violations.append(("W", A.entries))
        r1, r2 = zset_bounding_box(A)
        for d1 in range(r1.start, r1.stop + 2):
            for d2 in range(r2.start, r2.stop + 2):
                cert = all(h1_vanishing_by_regularity(A.dims, (d1, d2), b) is Vanishing.VANISHES for b in A.columns)
                if cert != ((d1, d2) in zs):
                    violations.append(("certificate", A.entries, (d1, d2)))
    rng = random.Random(20261014)
    for _ in range(1000):
        a = (rng.randint(2, 6), rng.randint(2, 6))
        d = (a[0] + rng.randint(0, 8), a[1] + rng.randint(0, 8))
        b = (rng.randint(0, 8), rng.randint(0, 8))
        b2 = (b[0] + rng.randint(0, 6), b[1] + rng.randint(0, 6))
        if h1_vanishing_by_regularity(a, d, b) is Vanishing.VANISHES:
            if h1_vanishing_by_regularity(a, d, b2) is not Vanishing.VANISHES:
                violations.append(("monotone", a, d, b, b2))
            if h0_ideal_sheaf(IdealSheafQuery(a, d, b2)) < h0_ideal_sheaf(IdealSheafQuery(a, d, b)):
                violations.append(("monotone h0", a, d, b, b2))
    assert record("C7", not violations, f"{len(violations)} violations" + (f": {violations[:3]}" if violations else ""))


def test_c8_dimension_identities():
    rng = random.Random(8)
    entries = list(census())
    bad = []
    for _ in range(1000):
        A = rng.choice(entries).matrix
        d = (rng.randint(0, 9), rng.randint(0, 9))
        if d == (0, 0):
            d = (1, 0)
        h1 = [rng.randint(0, 5) for _ in A.columns]
        r = fiber_dimension(A, d, sum(h1))
        with warnings.catch_warnings():
            # negative h0 is expected here: h1 is drawn at random, not computed
            warnings.simplefilter("ignore", NegativeResultWarning)
            direct_fiber = sum(h0_ideal_sheaf(IdealSheafQuery(A.dims, d, b), h1=h) - 1 for b, h in zip(A.columns, h1))
        family = sum(monomials(A.a1, x) * monomials(A.a2, y) - 1 for x, y in A.columns)
        checks = (
            r.dim_moduli == dim_moduli_curves(A.dims, d) == dim_moduli_unsimplified(A.a1, A.a2, *d),
            r.dim_family == dim_family(A) == family,
            r.fiber_dim == r.dim_family - r.dim_moduli + sum(h1) == direct_fiber,
            r.dim_incidence == r.dim_family + sum(h1) == r.dim_moduli + r.fiber_dim,
        )
        if not all(checks):
            bad.append((A.entries, d, h1, checks))
    ex = fiber_dimension(validate_configuration((2, 2), [[3], [3]]), (2, 2))
    worked = (ex.dim_family, ex.dim_moduli, ex.fiber_dim) == (99, 13, 86)
    assert record("C8", not bad and worked, f"{len(bad)} failures in 1000 cases; worked example {ex.dim_family}/{ex.dim_moduli}/{ex.fiber_dim}")


def _hilbert(n, b):
    return prod(Fraction(b + k, k) for k in range(1, n + 1))


def test_c9_cohomology_oracle():
    bad = []
    for n in range(1, 8):
        for b in range(-12, 13):
            for p in range(n + 1):
                v = h_projective_space(n, b, p)
                if not v == h_cech(n, b, p) == h_serre(n, b, p):
                    bad.append((n, b, p, v))
    ambients = {tuple(e.matrix.dims) for e in census()}
    for a1, a2 in sorted(ambients):
        for b1 in range(9):
            for b2 in range(9):
                chi = sum((-1) ** p * h_product(CohomologyQuery((a1, a2), (b1, b2), p)) for p in range(a1 + a2 + 1))
                if chi != _hilbert(a1, b1) * _hilbert(a2, b2):
                    bad.append(("chi", a1, a2, b1, b2, chi))
    assert record("C9", not bad, f"{len(bad)} disagreements over n <= 7, |b| <= 12 and {len(ambients)} ambients")


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "cicy_curves", *argv], capture_output=True, text=True)


def test_c10_cli_gate(tmp_path=None):
    import tempfile

    base = Path(tmp_path or tempfile.mkdtemp())
    truth = default_ground_truth().to_dict()
    zfix = json.loads(json.dumps(truth))
    zfix["appendix_b"][0]["z_set"].append([9, 9])
    afix = json.loads(json.dumps(truth))
    afix["appendix_a"].pop()
    (base / "zset.json").write_text(json.dumps(zfix))
    (base / "short.json").write_text(json.dumps(afix))
    codes = {
        "pristine": _cli("verify-paper").returncode,
        "perturbed Z_A pair": _cli("verify-paper", "--ground-truth", str(base / "zset.json")).returncode,
        "56 entries": _cli("verify-paper", "--ground-truth", str(base / "short.json")).returncode,
    }
    ok = codes == {"pristine": 0, "perturbed Z_A pair": 1, "56 entries": 1}
    assert record("C10", ok, ", ".join(f"{k} -> exit {v}" for k, v in codes.items()))


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

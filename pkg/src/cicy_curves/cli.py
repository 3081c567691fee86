"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 input outside the hypotheses of the finiteness theorem.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from .census import enumerate_census, p1_doubling_partner
from .configuration import ConfigurationError
from .finiteness import (
    AmbientTooSmall,
    finiteness_certificate,
    fiber_dimension,
    z_set,
    zset_bounding_box,
)
from .formats import (
    MatrixSpecError,
    census_to_csv,
    census_to_json,
    census_to_text,
    format_zset,
    parse_matrix_spec,
    render_matrix_text,
    zset_table_csv,
)
from .ground_truth import PaperGroundTruth
from .verify import verify_paper

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _codim(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= m <= 5:
        raise argparse.ArgumentTypeError(f"codimension must be between 1 and 5, got {m}")
    return m


def _matrix(spec: str):
    try:
        return parse_matrix_spec(spec)
    except (MatrixSpecError, ConfigurationError) as exc:
        raise _Fail(EXIT_USAGE, f"cannot use matrix {spec!r}: {exc}")


def _cmd_enumerate(args, out) -> int:
    census = enumerate_census(args.max_codim, workers=args.workers)
    render = {"json": census_to_json, "csv": census_to_csv, "text": census_to_text}[args.format]
    out.write(render(census))
    return EXIT_OK


def _too_small(A, exc) -> _Fail:
    msg = f"{exc}. The regularity argument needs a1, a2 >= 2."
    partner = p1_doubling_partner(A)
    if partner is not None and partner.a1 >= 2:
        msg += (
            " The same family is also described on "
            f"P^{partner.a1} x P^{partner.a2} by {json.dumps(partner.to_dict(), separators=(',', ':'))}; try that."
        )
    return _Fail(EXIT_HYPOTHESIS, msg)


def _cmd_zset(args, out) -> int:
    A = _matrix(args.matrix)
    try:
        zs = z_set(A)
    except AmbientTooSmall as exc:
        raise _too_small(A, exc)
    r1, r2 = zset_bounding_box(A)
    certs = [finiteness_certificate(A, (d1, d2)) for d1 in range(r1.start, r1.stop + 1) for d2 in range(r2.start, r2.stop + 1)]
    notes = sorted({n for c in certs for n in c.notes})
    if args.format == "json":
        obj = {
            **A.to_dict(),
            "z_set": [list(d) for d in sorted(zs)],
            "w_lower_bounds": [A.a1, A.a2],
            "certificates": [
                {"bidegree": list(c.bidegree), "verdict": c.verdict.value, "witness": c.to_dict()["witness"]} for c in certs
            ],
            "notes": notes,
        }
        out.write(json.dumps(obj, indent=2) + "\n")
    elif args.format == "csv":
        out.write(zset_table_csv([(A, zs)]))
    else:
        out.write(render_matrix_text(A) + "\n")
        out.write(f"Z_A ({len(zs)} bidegrees): {format_zset(zs)}\n")
        out.write(f"W_A: d1 >= {A.a1}, d2 >= {A.a2}\n")
        out.write("bidegree  verdict               witness (u,v) per column\n")
        for c in certs:
            wit = " ".join(f"({u},{v})" for u, v in c.witness) if c.witness else "-"
            out.write(f"({c.bidegree.d1},{c.bidegree.d2}){'':<4}{c.verdict.value:<22}{wit}\n")
        for n in notes:
            out.write(f"note: {n}\n")
    return EXIT_OK


def _bidegree(args):
    d = (args.d1, args.d2)
    if min(d) < 0 or d == (0, 0):
        raise _Fail(EXIT_USAGE, f"bidegree must be nonnegative and not (0, 0), got {d}")
    return d


def _cmd_dims(args, out) -> int:
    A = _matrix(args.matrix)
    d = _bidegree(args)
    if args.h1_sum < 0:
        raise _Fail(EXIT_USAGE, "--h1-sum must be nonnegative")
    rep = fiber_dimension(A, d, args.h1_sum)
    if args.format == "json":
        out.write(json.dumps({**A.to_dict(), "bidegree": list(d), **rep.to_dict()}, indent=2) + "\n")
    else:
        out.write(
            f"dim M     = {rep.dim_moduli}\n"
            f"dim U_A   = {rep.dim_family}\n"
            f"fiber dim = {rep.fiber_dim}\n"
            f"h1 sum    = {rep.h1_sum}\n"
            f"dim J     = {rep.dim_incidence}\n"
        )
    return EXIT_OK


def _cmd_certificate(args, out) -> int:
    A = _matrix(args.matrix)
    cert = finiteness_certificate(A, _bidegree(args))
    if args.format == "json":
        out.write(json.dumps(cert.to_dict(), indent=2) + "\n")
    else:
        out.write(render_matrix_text(A) + "\n")
        out.write(f"bidegree {tuple(cert.bidegree)}: {cert.verdict.value}\n")
        if cert.witness:
            out.write("witness (u,v) per column: " + " ".join(f"({u},{v})" for u, v in cert.witness) + "\n")
        for n in cert.notes:
            out.write(f"note: {n}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    truth = None
    if args.ground_truth is not None:
        try:
            truth = PaperGroundTruth.from_dict(json.loads(args.ground_truth.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise _Fail(EXIT_USAGE, f"cannot load ground truth {args.ground_truth}: {exc}")
    rep = verify_paper(truth, apply_errata=not args.strict)
    if args.format == "json":
        out.write(json.dumps(rep.to_dict(), indent=2, default=str) + "\n")
    else:
        out.write(rep.render() + "\n")
    return EXIT_OK if rep.census_match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cicy-curves",
        description="CICY configurations in P^a1 x P^a2 and finiteness of rational curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", type=Path, help="write to this file instead of stdout")

    p = sub.add_parser("enumerate", parents=[common], help="list the census of configurations")
    p.add_argument("--max-codim", type=_codim, default=5)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--workers", type=int, default=None, help="enumerate ambients in this many processes")
    p.set_defaults(func=_cmd_enumerate)

    matrix_help = "inline JSON {\"dims\":[a1,a2],\"matrix\":[[...],[...]]} or @file.json"

    p = sub.add_parser("zset", parents=[common], help="the set Z_A and per-bidegree certificates")
    p.add_argument("matrix", help=matrix_help)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(func=_cmd_zset)

    p = sub.add_parser("dims", parents=[common], help="dimension counts of the incidence correspondence")
    p.add_argument("matrix", help=matrix_help)
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("--h1-sum", type=int, default=0, help="sum over columns of h^1(I_C(b_j)) (default 0)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("certificate", parents=[common], help="finiteness verdict for one bidegree")
    p.add_argument("matrix", help=matrix_help)
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("verify-paper", parents=[common], help="recompute everything and diff against the published tables")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--strict", action="store_true", help="compare against the tables as printed, without errata")
    p.add_argument("--ground-truth", type=Path, help="JSON file replacing the embedded tables (for testing the check itself)")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _sink(args.output) as out:
            return args.func(args, out)
    except _Fail as exc:
        print(f"cicy-curves {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"cicy-curves {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: invariant (one query through chosen pipelines), table (a
genus-one G(2,k) table over all exponent splits), ring (potential, relations
and Hessian class), critical (critical-point listing), verify (self-check
suites).  Exit codes: 0 success, 1 usage, 2 ill-posed request (dimension or
applicability), 3 failed cross-check or verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .critical import enumerate_critical_points
from .errors import (
    CrossCheckMismatch,
    DimensionMismatch,
    GwgrError,
    InvalidGrassmannian,
    NonIntegerResult,
    PipelineNotApplicable,
    PrecisionBudgetExceeded,
    ValidationFailure,
)
from .invariants import InvariantQuery, PipelineResult, invariant
from .sympoly import hessian_class, lg_potential, relation_polys
from .verify import SUITES, VerifyConfig, run_verify

USAGE_EXIT, REQUEST_EXIT, CHECK_EXIT = 1, 2, 3

PIPELINE_NOTES = {
    "vi": "residue sum over critical points of the deformed potential",
    "oracle": "direct sum over ordered pairs of distinct k-th roots of unity",
    "closed": "binomial closed form for the genus-one G(2,k) series",
    "flip": "projective-bundle initial term plus wall-crossing corrections",
    "projective": "exact top power k^g on projective space",
}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _default_tol() -> float:
    try:
        return float(os.environ.get("GWGR_TOL", "1e-9"))
    except ValueError:
        return 1e-9


@dataclass(frozen=True, slots=True)
class OutputRecord:
    query: InvariantQuery
    results: list[PipelineResult]
    agree: bool
    formal_value: bool
    tol: float

    def to_json(self) -> str:
        payload = {
            "query": {
                "g": self.query.g,
                "d": self.query.d,
                "r": self.query.r,
                "k": self.query.k,
                "s": list(self.query.s),
            },
            "results": [
                {
                    "pipeline": res.pipeline,
                    "value": str(res.value),
                    "residual": res.residual,
                    "exact": res.exact,
                }
                for res in self.results
            ],
            "agree": self.agree,
            "formal_value": self.formal_value,
        }
        return json.dumps(payload)

    def to_text(self) -> str:
        q = self.query
        lines = [f"query: g={q.g} d={q.d} r={q.r} k={q.k} s={','.join(map(str, q.s))}"]
        width = max(len(res.pipeline) for res in self.results)
        for res in self.results:
            residual = "exact" if res.exact else f"residual={res.residual:.3e}"
            lines.append(f"  {res.pipeline:<{width}}  {res.value}  {residual}")
        lines.append(
            f"agree: {'yes' if self.agree else 'no'}   "
            f"formal_value: {'yes' if self.formal_value else 'no'}   tol={self.tol:g}"
        )
        return "\n".join(lines)

    def to_csv(self) -> str:
        rows = ["pipeline,value,residual,exact,agree,formal_value"]
        for res in self.results:
            rows.append(
                f"{res.pipeline},{res.value},{res.residual!r},"
                f"{int(res.exact)},{int(self.agree)},{int(self.formal_value)}"
            )
        return "\n".join(rows)


def _emit(text: str):
    sys.stdout.write(text + "\n")


def cmd_invariant(args) -> int:
    try:
        query = InvariantQuery(
            g=args.genus, d=args.degree, r=args.r, k=args.k,
            s=tuple(args.exponents),
        )
        pipelines = "all" if args.pipeline == "all" else (args.pipeline,)
        results = invariant(query, pipelines, tol=args.tol)
    except (DimensionMismatch, InvalidGrassmannian, PipelineNotApplicable,
            PrecisionBudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return REQUEST_EXIT
    except (CrossCheckMismatch, NonIntegerResult, ValidationFailure) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return CHECK_EXIT
    record = OutputRecord(
        query=query,
        results=results,
        agree=len({res.value for res in results}) == 1,
        formal_value=query.is_formal(),
        tol=args.tol,
    )
    _emit({"json": record.to_json, "csv": record.to_csv, "text": record.to_text}[args.format]())
    return 0


def cmd_table(args) -> int:
    if args.genus != 1 or args.r != 2:
        sys.stderr.write("error: tables are defined for --genus 1 --r 2 only\n")
        return REQUEST_EXIT
    try:
        rows = []
        for n in range(0, args.k * args.degree // 2 + 1):
            m = args.k * args.degree - 2 * n
            query = InvariantQuery(g=1, d=args.degree, r=2, k=args.k, s=(m, n))
            results = invariant(query, "all", tol=args.tol)
            values = {res.pipeline: res.value for res in results}
            rows.append((n, m, values, len(set(values.values())) == 1))
    except (DimensionMismatch, InvalidGrassmannian, PrecisionBudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return REQUEST_EXIT
    except (CrossCheckMismatch, NonIntegerResult) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return CHECK_EXIT

    cols = ("vi", "oracle", "closed", "flip")
    if args.format == "csv":
        lines = ["n,m,vi,oracle,closed,flip,agree"]
        for n, m, values, agree in rows:
            lines.append(
                f"{n},{m},{values['vi']},{values['oracle']},{values['closed']},"
                f"{values['flip']},{int(agree)}"
            )
        _emit("\n".join(lines))
    elif args.format == "json":
        payload = {
            "query": {"g": 1, "d": args.degree, "r": 2, "k": args.k},
            "rows": [
                {"n": n, "m": m, "values": {c: str(values[c]) for c in cols},
                 "agree": agree}
                for n, m, values, agree in rows
            ],
        }
        _emit(json.dumps(payload))
    else:
        widths = {c: max(len(c), max((len(str(v[2][c])) for v in rows), default=1)) for c in cols}
        header = f"{'n':>3} {'m':>3}  " + "  ".join(f"{c:>{widths[c]}}" for c in cols) + "  agree"
        lines = [f"genus-one table for G(2,{args.k}), degree {args.degree}", header]
        for n, m, values, agree in rows:
            lines.append(
                f"{n:>3} {m:>3}  "
                + "  ".join(f"{values[c]:>{widths[c]}}" for c in cols)
                + f"  {'yes' if agree else 'NO'}"
            )
        lines.append("")
        for c in cols:
            lines.append(f"{c}: {PIPELINE_NOTES[c]}")
        _emit("\n".join(lines))
    return 0


def cmd_ring(args) -> int:
    try:
        w = lg_potential(args.r, args.k)
        ys = relation_polys(args.r, args.k)
        h = hessian_class(args.r, args.k)
    except InvalidGrassmannian as exc:
        sys.stderr.write(f"error: {exc}\n")
        return REQUEST_EXIT
    lines = [f"W = {w}"]
    for i in range(args.k - args.r + 1, args.k + 1):
        lines.append(f"Y{i} = {ys[i - 1]}")
    lines.append(f"h = {h}")
    _emit("\n".join(lines))
    return 0


def cmd_critical(args) -> int:
    try:
        points = enumerate_critical_points(args.r, args.k)
    except InvalidGrassmannian as exc:
        sys.stderr.write(f"error: {exc}\n")
        return REQUEST_EXIT
    lines = [f"{len(points)} critical points for r={args.r} k={args.k}"]
    for idx, pt in enumerate(points):
        angles = ", ".join(str(q.turns) for q in pt.q)
        zs = ", ".join(f"{z.re:+.12f}{z.im:+.12f}j" for z in pt.z)
        lines.append(f"point {idx}: q turns = [{angles}]  Z = [{zs}]")
    _emit("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    cfg = VerifyConfig(max_k=args.max_k, max_d=args.max_d, tol=args.tol)
    results = run_verify(suites, cfg)
    failed = [res for res in results if not res.passed]
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} [{res.suite}] {res.name}: {res.detail}"
        if not res.passed:
            line += f"  (repro: {res.repro})"
        _emit(line)
    _emit(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else CHECK_EXIT


def _exponents(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}") from exc


def build_parser() -> _Parser:
    parser = _Parser(prog="gwgr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="evaluate one intersection number")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exponents", type=_exponents, required=True,
                   help="comma-separated s1,...,sr")
    p.add_argument("--pipeline", choices=("vi", "oracle", "closed", "flip", "all"),
                   default="all")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--tol", type=float, default=_default_tol())
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("table", help="genus-one table over all exponent splits")
    p.add_argument("--genus", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--tol", type=float, default=_default_tol())
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("ring", help="print potential, relations, Hessian class")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("critical", help="list critical points")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-k", type=int, default=8)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--tol", type=float, default=_default_tol())
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GwgrError as exc:  # uncaught domain error: treat as failed check
        sys.stderr.write(f"error: {exc}\n")
        return CHECK_EXIT


if __name__ == "__main__":
    sys.exit(main())

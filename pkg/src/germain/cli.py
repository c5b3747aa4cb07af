"""Command-line interface.

Exit codes: 0 success (for ``check``: both hypotheses hold), 1 hypotheses
fail or a table row could not be certified, 2 usage or precondition error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from functools import lru_cache

from . import __version__
from .bounds import size_lower_bound
from .records import OutputRecord
from .residues import certify_sgt, residues_subgroup
from .search import DEFAULT_N_MAX, NoAuxiliaryFound, legendre_table, scan_nc

FORMATS = ("text", "csv", "json")


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _join(values, sep=", ") -> str:
    return sep.join(str(v) for v in values)


def _listing(values) -> str:
    return _join(values) or "(none)"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _render_members(rs, paired: bool) -> str:
    if paired:
        return _join(f"±{r}" for r in rs.paired())
    return _join(rs.members)


def _residues(args) -> tuple[str, int]:
    rs = residues_subgroup(args.p, args.theta)
    params = {"p": args.p, "theta": args.theta}
    if args.format == "json":
        return OutputRecord("residues", params, rs).to_json() + "\n", 0
    if args.format == "csv":
        return _csv(["p", "theta", "residue_count", "residues"],
                    [[args.p, args.theta, len(rs), _join(rs.members, ";")]]), 0
    return _render_members(rs, args.paired) + "\n", 0


def _check(args) -> tuple[str, int]:
    cert = certify_sgt(args.p, args.theta)
    code = 0 if cert.holds else 1
    params = {"p": args.p, "theta": args.theta}
    if args.format == "json":
        return OutputRecord("check", params, cert).to_json() + "\n", code
    witness = cert.nc_witness and f"{cert.nc_witness[0]};{cert.nc_witness[1]}"
    if args.format == "csv":
        row = [args.p, args.theta, _bool(cert.nc_holds), _bool(cert.p_not_residue_holds),
               witness or "", "" if cert.p_witness is None else cert.p_witness,
               cert.consequence or ""]
        return _csv(["p", "theta", "nc", "p_not_residue", "nc_witness", "p_witness",
                     "consequence"], [row]), code
    rs = residues_subgroup(args.p, args.theta)
    lines = [
        f"p = {args.p}, theta = {args.theta}",
        f"residues: {_render_members(rs, args.paired)}",
    ]
    if cert.nc_holds:
        lines.append("no consecutive nonzero residues: holds")
    else:
        a, b = cert.nc_witness
        lines.append(f"no consecutive nonzero residues: fails, witness ({a}, {b})")
    if cert.p_not_residue_holds:
        lines.append(f"{args.p} is not a residue: holds")
    else:
        lines.append(f"{args.p} is not a residue: fails, {cert.p_witness} is a residue")
    if cert.holds:
        lines.append(f"consequence: {cert.consequence}")
    return "\n".join(lines) + "\n", code


def _table(args) -> tuple[str, int]:
    try:
        rows = legendre_table(args.p_max, args.n_max)
    except NoAuxiliaryFound as exc:
        sys.stderr.write(f"error: {exc}\n")
        return "", 1
    bad = [r.p for r in rows if not (r.certificate.holds and r.certificate.recheck())]
    if bad:
        sys.stderr.write(f"error: rows for p={bad} failed certification\n")
        return "", 1
    if args.format == "json":
        params = {"p_max": args.p_max, "n_max": args.n_max}
        return OutputRecord("table", params, rows).to_json() + "\n", 0
    cells = [
        [r.p, r.N, r.theta, len(r.residues),
         _join(r.residues.members, ";"),
         _bool(r.certificate.nc_holds), _bool(r.certificate.p_not_residue_holds)]
        for r in rows
    ]
    if args.format == "csv":
        return _csv(["p", "N", "theta", "residue_count", "residues", "nc", "p_not_residue"], cells), 0
    out = [f"{'p':>4} {'N':>4} {'theta':>6}  residues"]
    for r in rows:
        out.append(f"{r.p:>4} {r.N:>4} {r.theta:>6}  {_render_members(r.residues, args.paired)}")
    return "\n".join(out) + "\n", 0


def _scan(args):
    t0 = time.perf_counter()
    report = scan_nc(args.p, args.bound, args.include_p_condition, threads=args.threads)
    # elapsed time goes to stderr so stdout stays byte-identical between runs
    sys.stderr.write(f"elapsed: {time.perf_counter() - t0:.3f} s\n")
    return report


def _cmd_scan(args) -> tuple[str, int]:
    report = _scan(args)
    if args.format == "json":
        params = {"p": args.p, "bound": args.bound, "include_p_condition": args.include_p_condition}
        return OutputRecord("scan", params, report).to_json() + "\n", 0
    if args.format == "csv":
        row = [report.p, report.bound, report.condition, _bool(report.exhaustive),
               len(report.qualifying), _join(report.qualifying, ";")]
        return _csv(["p", "bound", "condition", "exhaustive", "count", "qualifying"], [row]), 0
    lines = [
        f"p = {report.p}, bound = {report.bound}, condition = {report.condition}",
        f"qualifying: {_listing(report.qualifying)}",
        f"count: {len(report.qualifying)}",
        f"candidates tested: {report.candidates_tested}",
        f"exhaustive: {_bool(report.exhaustive)}",
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_bound(args) -> tuple[str, int]:
    args.bound = args.scan_bound
    args.include_p_condition = False
    sb = size_lower_bound(args.p, _scan(args))
    if args.format == "json":
        params = {"p": args.p, "scan_bound": args.scan_bound}
        return OutputRecord("bound", params, sb).to_json() + "\n", 0
    if args.format == "csv":
        row = [sb.p, args.scan_bound, _join(sb.auxiliaries, ";"), sb.product,
               sb.min_max_solution, sb.decimal_digits]
        return _csv(["p", "scan_bound", "auxiliaries", "product", "min_max_solution",
                     "decimal_digits"], [row]), 0
    lines = [
        f"p = {sb.p}, scan bound = {args.scan_bound}",
        f"auxiliaries: {_listing(sb.auxiliaries)}",
        f"product: {sb.product}",
        f"max(x, y, z) >= {sb.min_max_solution}",
        f"decimal digits: {sb.decimal_digits}",
    ]
    return "\n".join(lines) + "\n", 0


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        default=argparse.SUPPRESS, help="shorthand for --format json")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes for scans (0 = one per CPU)")

    parser = argparse.ArgumentParser(prog="germain", description="Power residues and auxiliary primes for Sophie Germain's Theorem.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--threads", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("residues", "list the nonzero p-th power residues mod theta"),
                           ("check", "test both hypotheses of Sophie Germain's Theorem")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("-p", type=int, required=True, help="odd prime exponent")
        sp.add_argument("-t", "--theta", type=int, required=True, help="auxiliary prime")
        sp.add_argument("--paired", action="store_true", help="show residues as +-r pairs")

    sp = sub.add_parser("table", parents=[common], help="smallest auxiliary for every odd prime p")
    sp.add_argument("--p-max", type=int, default=100)
    sp.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    sp.add_argument("--paired", action="store_true")

    sp = sub.add_parser("scan", parents=[common], help="all auxiliaries with Condition NC up to a bound")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--include-p-condition", action="store_true",
                    help="also require that p is not a p-th power residue")

    sp = sub.add_parser("bound", parents=[common], help="lower bound on a Fermat solution's size")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--scan-bound", type=int, required=True)
    return parser


_COMMANDS = {
    "residues": _residues,
    "check": _check,
    "table": _table,
    "scan": _cmd_scan,
    "bound": _cmd_bound,
}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 0:
        sys.stderr.write("error: --threads must be >= 0\n")
        return 2
    try:
        text, code = _COMMANDS[args.command](args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Machine-readable output (JSON or CSV) goes to stdout or ``--out``; human
notes go to stderr.  Exit codes: 0 ok / holds, 1 violated, 2 domain error,
64 usage, 65 unparseable input, 74 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import analysis, radii, suites
from .errors import DomainError, NotInU, VanishingA2
from .series import DEFAULT_ORDER, NormalizedFunction, from_literal, to_literal
from .verify import DiskGrid, Quantity, Spacing, check_on_disk

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_IOERR = 74

THEOREMS = ("thm1", "thm2", "thm3", "thmA")
HYPOTHESES = {
    "thm1": "f in U with 5/4 <= |a2| <= 2",
    "thm2": "f in S+ with 0 < |a2| <= 2",
    "thm3": "f in S with 0 < |a2| <= 2",
    "thmA": "f in U with 0 < |a2| <= 2 (class-U conclusion needs |a2| <= 1)",
}
CSV_COLUMNS = ("a2", "theorem", "radius", "method", "tol")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common_flags(parser: argparse.ArgumentParser) -> None:
    s = argparse.SUPPRESS
    parser.add_argument("--order", type=int, default=s, help=f"series truncation order (default {DEFAULT_ORDER})")
    parser.add_argument("--seed", type=int, default=s, help="seed for randomized suites (default 0)")
    parser.add_argument("--tol", type=float, default=s, help=f"bisection tolerance (default {radii.DEFAULT_TOL})")
    parser.add_argument("--format", choices=("json", "csv"), default=s)
    parser.add_argument("--out", default=s, help="write output to PATH instead of stdout")


def _series_flags(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--series", help="JSON literal [[re, im], ...] of f")
    src.add_argument("--series-file", help="file holding the JSON literal of f")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="univalence", description=__doc__.splitlines()[0])
    _common_flags(parser)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("radius", help="radius of class-U membership of g for one |a2|")
    _common_flags(p)
    p.add_argument("--a2", type=float, required=True, help="|a2|")
    p.add_argument("--theorem", choices=THEOREMS, required=True)

    p = sub.add_parser("verify", help="sample |U|, |f'-1| or |zf'/f-1| on a disk")
    _common_flags(p)
    _series_flags(p)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--quantity", choices=[q.value for q in Quantity], default=Quantity.U.value)
    p.add_argument("--transform", action="store_true", help="check g = (z/f - 1)/(-a2) instead of f")
    p.add_argument("--n-radii", type=int, default=64)
    p.add_argument("--n-angles", type=int, default=128)
    p.add_argument("--spacing", choices=[s.value for s in Spacing], default=Spacing.UNIFORM_R_SQUARED.value)

    p = sub.add_parser("sweep", help="tabulate radii over a range of |a2|")
    _common_flags(p)
    p.add_argument("--a2", dest="a2_values", help="comma-separated |a2| values")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--theorems", default=",".join(THEOREMS), help="comma-separated subset of " + ",".join(THEOREMS))

    p = sub.add_parser("transform", help="emit g, omega or the U-series of f")
    _common_flags(p)
    _series_flags(p)
    p.add_argument("--emit", choices=("g", "omega", "u-series"), required=True)

    p = sub.add_parser("suite", help="run seeded end-to-end theorem checks")
    _common_flags(p)
    p.add_argument("--name", choices=(*suites.SUITES, "all"), default="all")
    p.add_argument("-n", "--members", type=int, default=None, help="members per suite")
    return parser


def _opt(args, name, default):
    return getattr(args, name, default)


def _load_function(args) -> NormalizedFunction:
    try:
        text = args.series if args.series is not None else Path(args.series_file).read_text()
    except OSError as exc:
        raise InputError(f"cannot read series file: {exc}") from exc
    try:
        series = from_literal(text, order=_opt(args, "order", DEFAULT_ORDER))
        return NormalizedFunction(series)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad series literal: {exc}") from exc


def compute_radius(a2_mod: float, theorem: str, tol: float = radii.DEFAULT_TOL) -> radii.RadiusResult:
    if theorem == "thm1":
        return radii.radius_theorem1(a2_mod)
    if theorem in ("thm2", "thmA"):
        return radii.radius_half_a2(a2_mod)
    if theorem == "thm3":
        return radii.radius_theorem3(a2_mod, tol)
    raise UsageError(f"unknown theorem {theorem!r}")


def _csv_text(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _radius_row(a2_mod: float, theorem: str, tol: float) -> dict:
    try:
        res = compute_radius(a2_mod, theorem, tol)
    except DomainError:
        return {"a2": a2_mod, "theorem": theorem, "radius": "", "method": "domain_error", "tol": ""}
    return {"a2": a2_mod, "theorem": theorem, "radius": repr(res.value),
            "method": res.method.value, "tol": repr(res.tol)}


def cmd_radius(args) -> tuple[str, int]:
    tol = _opt(args, "tol", radii.DEFAULT_TOL)
    try:
        res = compute_radius(args.a2, args.theorem, tol)
    except DomainError as exc:
        print(f"domain error: {exc} (hypothesis of {args.theorem}: {HYPOTHESES[args.theorem]})", file=sys.stderr)
        return "", EXIT_DOMAIN
    if args.theorem in ("thm2", "thmA"):
        print(f"|a2|/2 radius justified for: {radii.half_a2_justification(args.a2)}", file=sys.stderr)
    if _opt(args, "format", "json") == "csv":
        return _csv_text([_radius_row(args.a2, args.theorem, tol)]), EXIT_OK
    return json.dumps(res.to_dict()) + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    f = _load_function(args)
    try:
        if args.transform:
            f = analysis.g_transform(f)
        if not 0 < args.radius < 1:
            raise DomainError(f"radius must lie in (0, 1), got {args.radius}")
        grid = DiskGrid(args.radius, args.n_radii, args.n_angles, Spacing(args.spacing))
        report = check_on_disk(f, Quantity(args.quantity), grid)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return "", EXIT_DOMAIN
    print(f"{report.quantity.value}: sup {report.sup_modulus:.6g} at {report.witness:.6g} -> "
          f"{report.verdict.value}", file=sys.stderr)
    code = EXIT_OK if report.holds else EXIT_VIOLATED
    return json.dumps(report.to_dict()) + "\n", code


def sweep_values(args) -> list[float]:
    if args.a2_values:
        try:
            values = [float(v) for v in args.a2_values.split(",") if v.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --a2 list: {exc}") from exc
    elif None not in (args.start, args.stop, args.step):
        if args.step <= 0 or args.stop < args.start:
            raise UsageError("need step > 0 and stop >= start")
        n = int(math.floor((args.stop - args.start) / args.step + 1e-9)) + 1
        values = [round(args.start + k * args.step, 12) for k in range(n)]
    else:
        raise UsageError("sweep needs --a2 or all of --start/--stop/--step")
    bad = [v for v in values if not 0 < v <= 2]
    if not values or bad:
        raise UsageError(f"every |a2| must lie in (0, 2]; got {bad or 'nothing'}")
    return values


def cmd_sweep(args) -> tuple[str, int]:
    values = sweep_values(args)
    theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    unknown = [t for t in theorems if t not in THEOREMS]
    if unknown or not theorems:
        raise UsageError(f"unknown theorem tags {unknown}")
    tol = _opt(args, "tol", radii.DEFAULT_TOL)
    rows = [_radius_row(a, t, tol) for a in values for t in theorems]
    failed = sum(r["method"] == "domain_error" for r in rows)
    print(f"{len(rows)} rows, {failed} outside the theorem hypotheses", file=sys.stderr)
    if _opt(args, "format", "csv") == "json":
        return json.dumps(rows, indent=1) + "\n", EXIT_OK
    return _csv_text(rows), EXIT_OK


def cmd_transform(args) -> tuple[str, int]:
    f = _load_function(args)
    try:
        if args.emit == "g":
            out = analysis.g_transform(f).series
        elif args.emit == "omega":
            out = analysis.extract_omega(f).omega
        else:
            out = analysis.u_functional(f)
    except (VanishingA2, NotInU) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return "", EXIT_DOMAIN
    return json.dumps(to_literal(out)) + "\n", EXIT_OK


def cmd_suite(args) -> tuple[str, int]:
    seed = _opt(args, "seed", 0)
    names = list(suites.SUITES) if args.name == "all" else [args.name]
    results = []
    for name in names:
        kwargs = {"seed": seed}
        if args.members is not None:
            kwargs["n"] = args.members
        res = suites.SUITES[name](**kwargs)
        print(f"{res.name}: {res.members} members, {res.violations} violations, "
              f"worst sup {res.worst_sup:.6f}", file=sys.stderr)
        results.append(res.to_dict())
    code = EXIT_OK if all(r["passed"] for r in results) else EXIT_VIOLATED
    return json.dumps(results, indent=1) + "\n", code


COMMANDS = {
    "radius": cmd_radius,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "transform": cmd_transform,
    "suite": cmd_suite,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    order = _opt(args, "order", DEFAULT_ORDER)
    tol = _opt(args, "tol", radii.DEFAULT_TOL)
    if order < 2 or tol <= 0:
        print("error: --order must be >= 2 and --tol positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    out = _opt(args, "out", None)
    try:
        if out is not None and text:
            Path(out).write_text(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IOERR
    return code


if __name__ == "__main__":
    sys.exit(main())

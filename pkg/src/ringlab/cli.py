"""``ringlab`` command-line front end.

Exit codes: 0 when every check passes, 1 for usage or parse errors, 2 when a
check finds a counterexample to a proven statement.  Each invocation writes a
single JSON document (or CSV with ``--format csv``) to stdout.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import __version__
from .errors import ParseError, RingLabError, TheoremViolation
from .expr import DEFAULT_CAP
from .identities import THEOREMS, run_sweep
from .inverses import InverseKind, gzhou_constructive, inverse_bruteforce, inverse_table, verify_certificate
from .rational import (
    RationalMatrix,
    certificate_checks,
    drazin_index,
    drazin_matrix,
    period_bound,
    scan_gzhou_n,
)
from .ring import build_ring
from .structure import (
    idempotent_mask,
    nilpotent_mask,
    radical_mask,
    radical_root_mask,
    unit_mask,
)
from .suite import run_desk_suite

SETS = {"U": unit_mask, "N": nilpotent_mask, "J": radical_mask, "sqrtJ": radical_root_mask,
        "idem": idempotent_mask}
_Q_RING = re.compile(r"\s*Q\s*(\d+)\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest ring size accepted")
    common.add_argument("--no-timing", action="store_true", help="report duration_ms as null")

    parser = _Parser(prog="ringlab", description="Generalized inverses in finite and rational matrix rings.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="list a structural subset")
    p.add_argument("ring")
    p.add_argument("--set", dest="which", choices=tuple(SETS), required=True)

    p = sub.add_parser("inverse", parents=[common], help="compute one inverse with its certificate")
    p.add_argument("ring")
    p.add_argument("element")
    p.add_argument("--kind", choices=[k.value for k in InverseKind], default="gzhou")
    p.add_argument("--method", choices=("brute", "constructive"), default="brute")
    p.add_argument("--bound", type=int, help="override the exponent search bound")

    p = sub.add_parser("classify", parents=[common], help="per-element inverse table")
    p.add_argument("ring")

    p = sub.add_parser("verify", parents=[common], help="run a theorem sweep")
    p.add_argument("theorem", choices=sorted(THEOREMS))
    p.add_argument("ring")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("report", parents=[common], help="run an acceptance suite")
    p.add_argument("--suite", choices=("desk",), required=True)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _emit(out, payload, fmt, rows=None):
    if fmt == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(payload, indent=2) + "\n")


def _finite_ring(args):
    if _Q_RING.match(args.ring):
        raise UsageError(f"{args.verb} needs an enumerable ring, not the matrix backend {args.ring.strip()}")
    return build_ring(args.ring, cap=args.cap)


def cmd_table(args, out):
    R = _finite_ring(args)
    mask = SETS[args.which](R)
    items = [R.format(c) for c in range(len(R)) if mask[c]]
    _emit(out, items, args.format, [[x] for x in items])
    return 0


def _matrix_inverse(args, out):
    k = int(_Q_RING.match(args.ring).group(1))
    A = RationalMatrix.parse(args.element)
    if A.k != k:
        raise UsageError(f"element is {A.k}x{A.k}, ring is Q{k}")
    bound = args.bound or period_bound(k)
    kind = InverseKind(args.kind)
    payload = {"kind": kind.value, "ring": f"Q{k}", "a": str(A), "bound": bound}
    if kind in (InverseKind.DRAZIN, InverseKind.P_DRAZIN):
        x = drazin_matrix(A)
        n = drazin_index(A) if kind is InverseKind.DRAZIN else 1
        checks = {"xax=x": x * A * x == x, "ax=xa": A * x == x * A}
        payload.update({"b": str(x), "n": n, "conclusive": True, "checks": checks})
    else:
        n = scan_gzhou_n(A, bound)
        payload["conclusive"] = bound >= period_bound(k) or n is not None
        if n is None:
            payload.update({"b": None, "n": None, "checks": {}})
        else:
            x = drazin_matrix(A)
            checks = certificate_checks(A, x, n)
            payload.update({"b": str(x), "n": n, "checks": checks})
    _emit(out, payload, args.format,
          [["kind", "a", "b", "n", "bound"],
           [payload["kind"], payload["a"], payload["b"], payload["n"], bound]])
    return 0 if all(payload["checks"].values()) else 2


def cmd_inverse(args, out):
    if _Q_RING.match(args.ring):
        return _matrix_inverse(args, out)
    R = build_ring(args.ring, cap=args.cap)
    a = R.parse(args.element)
    kind = InverseKind(args.kind)
    if args.method == "constructive":
        if kind is not InverseKind.G_ZHOU:
            raise UsageError("--method constructive is only available for --kind gzhou")
        cert = gzhou_constructive(R, a)
    else:
        cert = inverse_bruteforce(R, a, kind, bound=args.bound)
    bound = args.bound or R.orbit_codes(a.code)[0] + R.orbit_codes(a.code)[1]
    if cert is None:
        payload = {"kind": kind.value, "a": str(a), "b": None, "bound": bound}
        ok = True
    else:
        check = verify_certificate(R, cert)
        payload = cert.to_dict(check.checks)
        payload["bound"] = bound
        ok = check.ok
    _emit(out, payload, args.format,
          [["kind", "a", "b", "n", "p", "bound"],
           [payload["kind"], payload["a"], payload["b"], payload.get("n"), payload.get("p"), bound]])
    return 0 if ok else 2


CLASSIFY_COLUMNS = ("a", "drazin", "pdrazin", "zhou", "gzhou", "n", "p",
                    "unit", "nilpotent", "J", "sqrtJ", "idempotent")


def classify(R) -> list:
    """One row per element: the four inverses, n and p of the gZhou
    certificate, and membership flags."""
    tables = {k: inverse_table(R, k) for k in InverseKind}
    flags = {"unit": unit_mask(R), "nilpotent": nilpotent_mask(R), "J": radical_mask(R),
             "sqrtJ": radical_root_mask(R), "idempotent": idempotent_mask(R)}
    rows = []
    for x in range(len(R)):
        row = {"a": R.format(x)}
        for k in InverseKind:
            cert = tables[k][x]
            row[k.value] = None if cert is None else str(cert.b)
        g = tables[InverseKind.G_ZHOU][x]
        row["n"] = None if g is None else g.n
        row["p"] = None if g is None else str(g.p)
        row.update({name: bool(mask[x]) for name, mask in flags.items()})
        rows.append(row)
    return rows


def cmd_classify(args, out):
    R = _finite_ring(args)
    rows = classify(R)
    csv_rows = [list(CLASSIFY_COLUMNS)] + [[r[c] for c in CLASSIFY_COLUMNS] for r in rows]
    _emit(out, {"ring": R.name, "rows": rows}, args.format, csv_rows)
    return 0


def cmd_verify(args, out):
    R = _finite_ring(args)
    exhaustive = args.samples is None
    report = run_sweep(args.theorem, R, exhaustive=exhaustive, samples=args.samples or 0,
                       seed=args.seed, jobs=args.jobs)
    payload = report.to_dict(timing=not args.no_timing)
    _emit(out, payload, args.format,
          [["theorem", "ring", "population", "passes", "fails"],
           [report.theorem, report.ring, report.population, report.passes, report.fails]])
    return 0 if report.ok else 2


def cmd_report(args, out):
    results = run_desk_suite(jobs=args.jobs)
    payload = {"suite": args.suite, "passed": all(r.ok for r in results),
               "criteria": [r.to_dict() for r in results]}
    if args.no_timing:
        for c in payload["criteria"]:
            c["seconds"] = None
    _emit(out, payload, args.format,
          [["criterion", "title", "passed", "detail"]]
          + [[r.number, r.title, r.ok, r.detail] for r in results])
    return 0 if payload["passed"] else 2


COMMANDS = {"table": cmd_table, "inverse": cmd_inverse, "classify": cmd_classify,
            "verify": cmd_verify, "report": cmd_report}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except TheoremViolation as exc:
        _emit(out, {"error": str(exc), "transcript": exc.transcript}, "json")
        return 2
    except ParseError as exc:
        _emit(out, {"error": str(exc), "offset": exc.offset}, "json")
        return 1
    except (UsageError, RingLabError, ValueError) as exc:
        _emit(out, {"error": str(exc)}, "json")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

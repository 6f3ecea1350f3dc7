"""Command-line interface: solve, verify and batch subcommands.

Angles are degrees everywhere on this surface. Text reports round parts to
two decimals; json-lines output carries full precision (one JSON object per
line, period decimal separator, no localization).

Exit codes: 0 success, 1 no solution (solve only), 2 input error,
3 verification failure (verify only).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ._backend import backend_name
from .core import AAS, ASA, SAS, SSA, SSS, Triangle, TriangleSpec, relabeled
from .errors import InputError, TrisolveError
from .solver import NoSolution, solve
from .verifier import DEFAULT_TOLERANCE, ResidualReport, verify

ANGLE_NAMES = ("alpha", "beta", "gamma")
SIDE_NAMES = ("a", "b", "c")
PART_NAMES = ANGLE_NAMES + SIDE_NAMES
SOLVE_CASES = ("asa", "aas", "ssa", "sas", "sss")
BATCH_CASES = SOLVE_CASES + ("verify",)

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INPUT_ERROR = 2
EXIT_VERIFY_FAILED = 3

# pair index shared by an angle and its opposite side
_PAIR = {"alpha": 0, "beta": 1, "gamma": 2, "a": 0, "b": 1, "c": 2}


@dataclass(frozen=True)
class BatchRecord:
    """One parsed batch entry: id, case, named parts, optional tolerance.

    malformed carries the parse-level reason when the entry could not even be
    read; such records are reported with outcome "error" without aborting the
    rest of the batch.
    """

    id: str
    case: str
    angles: dict
    sides: dict
    tol: Optional[float] = None
    malformed: Optional[str] = None


@dataclass(frozen=True)
class SolveReport:
    """Per-record result: outcome in {none, unique, two, error}, the solved
    triangles with one verification report each, and a reason when there is
    nothing to show."""

    id: str
    outcome: str
    triangles: tuple = ()
    verification: tuple = ()
    reason: Optional[str] = None


def _plan(case: str, angles: dict, sides: dict) -> tuple[TriangleSpec, tuple]:
    """Map named parts onto a canonical spec.

    Returns (spec, perm) where perm[p] is the caller's pair index feeding
    canonical position p; solved triangles are relabeled back through the
    inverse permutation so reports keep the caller's labels.
    """
    have_a = sorted(_PAIR[n] for n in angles)
    have_s = sorted(_PAIR[n] for n in sides)

    if case == "sss":
        if have_s != [0, 1, 2] or have_a:
            raise InputError("case sss needs sides a, b and c and no angles")
        return (
            SSS(sides["a"], sides["b"], sides["c"]),
            (0, 1, 2),
        )

    if case in ("asa", "aas"):
        # two angles and any one named side; asa and aas are synonyms here
        if len(have_a) != 2 or len(have_s) != 1:
            raise InputError(f"case {case} needs exactly two angles and one side")
        i, j = have_a
        k = 3 - i - j
        s = have_s[0]
        angle_of = {0: "alpha", 1: "beta", 2: "gamma"}
        side_of = {0: "a", 1: "b", 2: "c"}
        if s == k:
            spec = ASA(angles[angle_of[i]], sides[side_of[k]], angles[angle_of[j]])
            return spec, (i, j, k)
        other = j if s == i else i
        spec = AAS(angles[angle_of[s]], angles[angle_of[other]], sides[side_of[s]])
        return spec, (s, other, k)

    if case == "ssa":
        if len(have_s) != 2 or len(have_a) != 1:
            raise InputError("case ssa needs exactly two sides and one angle")
        i = have_a[0]
        if i not in have_s:
            raise InputError(
                "case ssa needs the angle opposite one of the given sides; "
                "an included angle is case sas"
            )
        j = have_s[0] if have_s[1] == i else have_s[1]
        k = 3 - i - j
        side_of = {0: "a", 1: "b", 2: "c"}
        angle_of = {0: "alpha", 1: "beta", 2: "gamma"}
        spec = SSA(sides[side_of[i]], sides[side_of[j]], angles[angle_of[i]])
        return spec, (i, j, k)

    if case == "sas":
        if len(have_s) != 2 or len(have_a) != 1:
            raise InputError("case sas needs exactly two sides and one angle")
        k = have_a[0]
        if k in have_s:
            raise InputError(
                "case sas needs the angle included between the given sides; "
                "an opposite angle is case ssa"
            )
        i, j = have_s
        side_of = {0: "a", 1: "b", 2: "c"}
        angle_of = {0: "alpha", 1: "beta", 2: "gamma"}
        spec = SAS(sides[side_of[i]], angles[angle_of[k]], sides[side_of[j]])
        return spec, (i, j, k)

    raise InputError(f"unknown case {case!r}")


def _inverse(perm: tuple) -> tuple:
    inv = [0, 0, 0]
    for pos, src in enumerate(perm):
        inv[src] = pos
    return tuple(inv)


def _solve_record(rid: str, case: str, angles: dict, sides: dict, tol: float) -> SolveReport:
    """Solve (or verify) one record; raises TrisolveError on malformed parts."""
    if case == "verify":
        missing = [n for n in PART_NAMES if n not in {**angles, **sides}]
        if missing:
            raise InputError(f"case verify needs all six parts; missing {', '.join(missing)}")
        t = Triangle(
            angles["alpha"], angles["beta"], angles["gamma"],
            sides["a"], sides["b"], sides["c"],
        )
        return SolveReport(rid, "unique", (t,), (verify(t, tol),))
    spec, perm = _plan(case, angles, sides)
    outcome = solve(spec)
    if isinstance(outcome, NoSolution):
        return SolveReport(rid, "none", reason=outcome.reason)
    inv = _inverse(perm)
    triangles = tuple(relabeled(t, inv) for t in outcome.triangles)
    reports = tuple(verify(t, tol) for t in triangles)
    kind = "unique" if len(triangles) == 1 else "two"
    return SolveReport(rid, kind, triangles, reports)


# ---------------------------------------------------------------------------
# report rendering


def _triangle_dict(t: Triangle) -> dict:
    al, be, ga, a, b, c = t.parts
    return {"alpha": al, "beta": be, "gamma": ga, "a": a, "b": b, "c": c}


def _residual_dict(r: ResidualReport) -> dict:
    return {
        "mollweide_sin": list(r.mollweide_sin),
        "mollweide_cos": list(r.mollweide_cos),
        "law_of_tangents": list(r.law_of_tangents),
        "cosines": list(r.cosines),
        "sines_spread": r.sines_spread,
        "max_normalized_residual": r.max_normalized_residual,
        "tolerance": r.tolerance,
        "passed": r.passed,
    }


def _report_json(rep: SolveReport) -> str:
    return json.dumps(
        {
            "id": rep.id,
            "outcome": rep.outcome,
            "triangles": [_triangle_dict(t) for t in rep.triangles],
            "verification": [_residual_dict(r) for r in rep.verification],
            "reason": rep.reason,
        }
    )


def _triangle_text(t: Triangle) -> str:
    al, be, ga, a, b, c = t.parts
    return (
        f"alpha={al:.2f} beta={be:.2f} gamma={ga:.2f} "
        f"a={a:.2f} b={b:.2f} c={c:.2f}"
    )


def _verdict_text(r: ResidualReport) -> str:
    word = "passed" if r.passed else "FAILED"
    return (
        f"verification {word} (max normalized residual "
        f"{r.max_normalized_residual:.3e}, tolerance {r.tolerance:g})"
    )


def _report_text(rep: SolveReport) -> str:
    if rep.outcome == "none":
        return f"{rep.id}: no solution -- {rep.reason}"
    if rep.outcome == "error":
        return f"{rep.id}: error -- {rep.reason}"
    lines = [f"{rep.id}: {rep.outcome}"]
    for n, (t, r) in enumerate(zip(rep.triangles, rep.verification), start=1):
        lines.append(f"  triangle {n}: {_triangle_text(t)}")
        lines.append(f"    {_verdict_text(r)}")
    return "\n".join(lines)


def _emit_report(rep: SolveReport, output: str) -> None:
    if output == "json-lines":
        print(_report_json(rep))
    else:
        print(_report_text(rep))


def _residual_text(r: ResidualReport) -> str:
    def triple(vals):
        return " ".join(f"{v: .3e}" for v in vals)

    return "\n".join(
        [
            _verdict_text(r),
            f"  mollweide sin residuals:   {triple(r.mollweide_sin)}",
            f"  mollweide cos residuals:   {triple(r.mollweide_cos)}",
            f"  law of tangents residuals: {triple(r.law_of_tangents)}",
            f"  law of cosines / c^2:      {triple(r.cosines)}",
            f"  sines spread:              {r.sines_spread:.3e}",
        ]
    )


# ---------------------------------------------------------------------------
# batch input parsing


def _parse_record(raw: dict, line_no: int, seen_ids: set) -> BatchRecord:
    rid = "" if raw.get("id") is None else str(raw["id"]).strip()
    fallback = f"line-{line_no}"
    if not rid:
        return BatchRecord(fallback, "", {}, {}, malformed="missing id")
    if rid in seen_ids:
        return BatchRecord(rid, "", {}, {}, malformed=f"duplicate id {rid!r}")
    case = str(raw.get("case") or "").strip().lower()
    if case not in BATCH_CASES:
        return BatchRecord(rid, "", {}, {}, malformed=f"unknown case {case!r}")
    angles, sides = {}, {}
    tol = None
    for key, value in raw.items():
        if key in ("id", "case") or value is None or value == "":
            continue
        name = key.strip().lower()
        try:
            number = float(value)
        except (TypeError, ValueError):
            return BatchRecord(rid, case, {}, {}, malformed=f"field {name!r} is not numeric: {value!r}")
        if name in ANGLE_NAMES:
            angles[name] = number
        elif name in SIDE_NAMES:
            sides[name] = number
        elif name == "tol":
            tol = number
        else:
            return BatchRecord(rid, case, {}, {}, malformed=f"unexpected field {name!r}")
    return BatchRecord(rid, case, angles, sides, tol)


def _read_batch(path: str) -> list:
    """Parse a batch file into records, never aborting on a bad record.

    .csv reads as a comma-separated table with a header row; .jsonl/.ndjson
    (and anything else, with a warning) read as one JSON object per line.
    """
    suffix = Path(path).suffix.lower()
    text = Path(path).read_text(encoding="utf-8")
    records: list[BatchRecord] = []
    seen: set[str] = set()
    if suffix == ".csv":
        rows = list(csv.DictReader(text.splitlines()))
        if rows:
            header = [h for h in rows[0].keys() if h is not None]
            unknown = [h for h in header if h.strip().lower() not in ("id", "case", "tol") + PART_NAMES]
            if unknown:
                raise InputError(f"unknown batch column(s): {', '.join(unknown)}")
        for line_no, row in enumerate(rows, start=2):
            if row.get(None):
                records.append(
                    BatchRecord(f"line-{line_no}", "", {}, {}, malformed="row has more cells than the header")
                )
                continue
            row = {k: v for k, v in row.items() if k is not None}
            rec = _parse_record(row, line_no, seen)
            seen.add(rec.id)
            records.append(rec)
        return records
    if suffix not in (".jsonl", ".ndjson", ".json"):
        print(
            f"warning: unrecognized batch extension {suffix or '(none)'}; "
            "assuming json-lines",
            file=sys.stderr,
        )
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
            if not isinstance(raw, dict):
                raise ValueError("not a JSON object")
        except ValueError as exc:
            records.append(
                BatchRecord(f"line-{line_no}", "", {}, {}, malformed=f"unparsable record: {exc}")
            )
            continue
        rec = _parse_record(raw, line_no, seen)
        seen.add(rec.id)
        records.append(rec)
    return records


# ---------------------------------------------------------------------------
# subcommands


def _collect_parts(args) -> tuple[dict, dict]:
    angles = {n: getattr(args, n) for n in ANGLE_NAMES if getattr(args, n) is not None}
    sides = {n: getattr(args, n) for n in SIDE_NAMES if getattr(args, n) is not None}
    return angles, sides


def run_solve(args) -> int:
    """Solve one triangle given on the command line; report and verify it."""
    angles, sides = _collect_parts(args)
    tol = DEFAULT_TOLERANCE if args.tol is None else args.tol
    try:
        report = _solve_record("-", args.case, angles, sides, tol)
    except TrisolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _emit_report(report, args.output)
    return EXIT_OK if report.outcome in ("unique", "two") else EXIT_NO_SOLUTION


def run_verify(args) -> int:
    """Check all six user-supplied parts against every identity."""
    angles, sides = _collect_parts(args)
    tol = DEFAULT_TOLERANCE if args.tol is None else args.tol
    missing = [n for n in PART_NAMES if n not in {**angles, **sides}]
    if missing:
        print(f"error: verify needs all six parts; missing {', '.join(missing)}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        t = Triangle(
            angles["alpha"], angles["beta"], angles["gamma"],
            sides["a"], sides["b"], sides["c"],
        )
        rep = verify(t, tol)
    except TrisolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.output == "json-lines":
        print(json.dumps(_residual_dict(rep)))
    else:
        print(_residual_text(rep))
    return EXIT_OK if rep.passed else EXIT_VERIFY_FAILED


def run_batch(args) -> int:
    """Process every record of a batch file.

    Records are independent (the solvers and verifier are pure functions) and
    the reports come out in input order regardless of how the work is done;
    this implementation simply walks the file sequentially.
    """
    tol_default = DEFAULT_TOLERANCE if args.tol is None else args.tol
    try:
        records = _read_batch(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except TrisolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    counts = {"unique": 0, "two": 0, "none": 0, "error": 0}
    for rec in records:
        if rec.malformed is not None:
            report = SolveReport(rec.id, "error", reason=rec.malformed)
        else:
            tol = tol_default if rec.tol is None else rec.tol
            try:
                report = _solve_record(rec.id, rec.case, rec.angles, rec.sides, tol)
            except TrisolveError as exc:
                report = SolveReport(rec.id, "error", reason=str(exc))
        counts[report.outcome] += 1
        _emit_report(report, args.output)
    if args.output == "json-lines":
        print(json.dumps({"summary": counts}))
    else:
        print(
            "summary: {unique} unique, {two} two, {none} none, {error} error".format(**counts)
        )
    return EXIT_OK if counts["error"] == 0 else EXIT_INPUT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisolve",
        description="Solve oblique triangles and certify the results with "
        "Mollweide, law-of-tangents and law-of-cosines residuals.",
    )
    from . import __version__

    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__} ({backend_name()} kernels)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_case: bool):
        if with_case:
            p.add_argument("--case", required=True, choices=SOLVE_CASES,
                           help="which parts are given")
        for name in ANGLE_NAMES:
            p.add_argument(f"--{name}", type=float, help=f"angle {name} in degrees")
        for name in SIDE_NAMES:
            p.add_argument(f"--{name}", type=float, help=f"side {name}")
        p.add_argument("--tol", type=float, default=None,
                       help="verification tolerance (default 1e-9)")
        p.add_argument("--output", choices=("text", "json-lines"), default="text",
                       help="report format")

    ps = sub.add_parser("solve", help="solve a triangle from one given-data case")
    add_common(ps, with_case=True)
    ps.set_defaults(func=run_solve)

    pv = sub.add_parser("verify", help="check six user-supplied parts")
    add_common(pv, with_case=False)
    pv.set_defaults(func=run_verify)

    pb = sub.add_parser("batch", help="process a csv or json-lines batch file")
    pb.add_argument("--input", required=True, help="path to the batch file")
    pb.add_argument("--tol", type=float, default=None,
                    help="default verification tolerance for records without tol")
    pb.add_argument("--output", choices=("text", "json-lines"), default="text",
                    help="report format")
    pb.set_defaults(func=run_batch)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

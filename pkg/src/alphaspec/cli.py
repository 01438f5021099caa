"""Command-line front end.

    alphaspec spectrum --gen cycle:5 --alpha 0,0.5
    alphaspec bounds --in graphs.g6 --alpha 0.3 --format csv
    alphaspec srg 10 3 0 1 --alpha 0 --check
    alphaspec verify --n-max 5 --csv violations.csv

Records go to stdout (JSON by default, CSV on request), diagnostics and the
verify summary table to stderr.  Floats are printed with 12 significant
digits.

Exit codes: 0 success, 1 verification violations, 2 usage / configuration /
parse errors, 3 infeasible SRG parameters, 4 degenerate SRG discriminant,
5 non-integral SRG multiplicities.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Iterator

import numpy as np

from . import bounds as bd
from . import closed_forms as cf
from . import verify as vf
from .graph import Graph, GraphError, complete_bipartite, cycle, generate, petersen
from .graph6 import Graph6Error, read_graph6, write_graph6
from .spectra import distinct_eigenvalues, spectrum

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_SRG = {
    cf.InfeasibleParameters: 3,
    cf.DegenerateDiscriminant: 4,
    cf.NonIntegralMultiplicity: 5,
}

SIG_DIGITS = 12

# SRG parameter sets we can also build, for --check
_CONSTRUCTIBLE = {
    (5, 2, 0, 1): lambda: cycle(5),
    (10, 3, 0, 1): petersen,
    (6, 3, 0, 3): lambda: complete_bipartite(3, 3),
}


class UsageError(Exception):
    pass


def fmt(x: float) -> float:
    """Round to 12 significant digits (shortest repr survives a JSON round trip)."""
    return float(f"{x:.{SIG_DIGITS}g}")


def rounded(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, np.floating)):
        return fmt(float(obj))
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [rounded(v) for v in obj]
    return str(obj)


def dump_json(payload, out) -> None:
    json.dump(rounded(payload), out, indent=2, allow_nan=False)
    out.write("\n")


def dump_csv(header: list[str], rows: Iterable[list], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else v for v in rounded(list(row))])


def parse_alphas(text: str, upper_open: bool = False) -> tuple[float, ...]:
    try:
        values = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad --alpha list {text!r}") from None
    if not values:
        raise UsageError("--alpha list is empty")
    for a in values:
        if not (0.0 <= a < 1.0 if upper_open else 0.0 <= a <= 1.0):
            rng = "[0, 1)" if upper_open else "[0, 1]"
            raise UsageError(f"alpha {a} outside {rng}")
    return values


def iter_inputs(args) -> Iterator[tuple[str, Graph]]:
    """(label, graph) for every --gen spec, then every record of every --in file."""
    if not args.gen and not args.inputs:
        raise UsageError("give at least one --gen or --in")
    for spec in args.gen or ():
        try:
            yield spec, generate(spec)
        except GraphError as exc:
            raise UsageError(f"--gen {spec}: {exc}") from None
    for path in args.inputs or ():
        try:
            for lineno, g in read_graph6(path):
                yield f"{path}:{lineno}", g
        except Graph6Error as exc:
            raise UsageError(f"{path}: {exc}") from None
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# --- spectrum ------------------------------------------------------------------------

def spectrum_record(label: str, g: Graph, alpha: float) -> dict:
    sp = spectrum(g, alpha)
    return {
        "source": label,
        "graph6": write_graph6(g).decode(),
        "alpha": alpha,
        "n": g.n,
        "m": g.m,
        "eigenvalues": sp.p.tolist(),
        "eta": sp.eta.tolist(),
        "s": sp.s.tolist(),
        "energy": sp.energy,
        "distinct": [{"value": v, "multiplicity": k} for v, k in distinct_eigenvalues(sp)],
    }


def cmd_spectrum(args, out) -> int:
    alphas = parse_alphas(args.alpha)
    records = [spectrum_record(label, g, a) for label, g in iter_inputs(args) for a in alphas]
    if args.format == "json":
        dump_json(records, out)
    else:
        join = lambda xs: " ".join(f"{fmt(x)!r}" for x in xs)
        dump_csv(
            ["source", "graph6", "alpha", "n", "m", "energy", "eigenvalues", "distinct_count"],
            ([r["source"], r["graph6"], r["alpha"], r["n"], r["m"], r["energy"],
              join(r["eigenvalues"]), len(r["distinct"])] for r in records),
            out,
        )
    return EXIT_OK


# --- bounds --------------------------------------------------------------------------

def cmd_bounds(args, out) -> int:
    alphas = parse_alphas(args.alpha)
    records = []
    for label, g in iter_inputs(args):
        for a in alphas:
            rep = bd.full_report(g, a).to_dict()
            records.append({"source": label, "graph6": write_graph6(g).decode(), **rep})
    if args.format == "json":
        dump_json(records, out)
    else:
        cols = ["name", "value", "applicable", "satisfied", "slack", "equality", "reason"]
        dump_csv(
            ["source", "graph6", "alpha", "energy", "classification", *cols],
            ([r["source"], r["graph6"], r["alpha"], r["energy"], r["classification"],
              *(b[c] for c in cols)] for r in records for b in r["bounds"]),
            out,
        )
    return EXIT_OK


# --- srg -----------------------------------------------------------------------------

def srg_record(params: cf.SrgParams, alpha: float, check: bool) -> dict:
    res = cf.srg_alpha_spectrum(params, alpha)
    rec = {
        "params": {"n": params.n, "r": params.r, "a": params.a, "c": params.c},
        "alpha": alpha,
        "discriminant": res.d,
        "eigenvalues": [{"value": v, "multiplicity": k} for v, k in res.eigenvalues()],
    }
    if check:
        key = (params.n, params.r, params.a, params.c)
        numeric = spectrum(_CONSTRUCTIBLE[key](), alpha).p
        rec["max_deviation"] = float(np.max(np.abs(np.asarray(res.multiset()) - numeric)))
    return rec


def cmd_srg(args, out) -> int:
    alphas = parse_alphas(args.alpha, upper_open=True)
    params = cf.SrgParams(args.n, args.r, args.a, args.c)
    if args.check and (params.n, params.r, params.a, params.c) not in _CONSTRUCTIBLE:
        known = ", ".join(str(k) for k in _CONSTRUCTIBLE)
        raise UsageError(f"--check needs a constructible parameter set: {known}")
    records = [srg_record(params, a, args.check) for a in alphas]
    if args.format == "json":
        dump_json(records, out)
    else:
        dump_csv(
            ["n", "r", "a", "c", "alpha", "value", "multiplicity", "max_deviation"],
            ([params.n, params.r, params.a, params.c, rec["alpha"], e["value"], e["multiplicity"],
              rec.get("max_deviation")] for rec in records for e in rec["eigenvalues"]),
            out,
        )
    return EXIT_OK


# --- verify --------------------------------------------------------------------------

def summary_table(report: vf.VerificationReport) -> str:
    head = ("theorem", "tested", "applicable", "violations", "known", "witnesses")
    rows = [head, *report.summary_rows()]
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(head))]
    lines = []
    for r in rows:
        cells = [str(r[0]).ljust(widths[0])] + [str(v).rjust(w) for v, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells))
    lines.append("PASSED" if report.passed else "FAILED")
    return "\n".join(lines) + "\n"


def write_violations_csv(report: vf.VerificationReport, path: str) -> None:
    rows = [
        [tid, v["graph6"], v["alpha"], json.dumps(rounded(v.get("measured", {})), sort_keys=True)]
        for tid, res in report.theorems.items()
        for v in res.violations
    ]
    buf = io.StringIO()
    dump_csv(["theorem", "graph6", "alpha", "measured"], rows, buf)
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(buf.getvalue())


def cmd_verify(args, out, err) -> int:
    try:
        theorems = None
        if args.theorems:
            theorems = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
        cfg = vf.SweepConfig(
            n_max=args.n_max,
            alpha_grid=parse_alphas(args.alpha, upper_open=True) if args.alpha else vf.DEFAULT_ALPHAS,
            connected_only=args.connected_only,
            theorem_ids=theorems,
            jobs=args.jobs,
        )
    except vf.ConfigError as exc:
        raise UsageError(str(exc)) from None
    report = vf.run_suite(cfg)
    if args.format == "json":
        dump_json(report.to_dict(), out)
    else:
        dump_csv(["theorem", "graphs_tested", "applicable", "violations", "known_exceptions", "witnesses"],
                 report.summary_rows(), out)
    if args.csv:
        write_violations_csv(report, args.csv)
    if not args.quiet:
        err.write(summary_table(report))
    return report.exit_status


# --- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alphaspec", description="A_alpha spectra, energies and energy bounds of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_inputs(sp):
        sp.add_argument("--gen", action="append", metavar="NAME:PARAMS",
                        help="generated graph, e.g. complete:4, bipartite:2:3, cycle:5, petersen (repeatable)")
        sp.add_argument("--in", dest="inputs", action="append", metavar="FILE",
                        help="graph6 file, one graph per line (repeatable)")
        sp.add_argument("--alpha", default="0", help="comma separated alpha values in [0, 1] (default 0)")

    def add_format(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    s = sub.add_parser("spectrum", help="eigenvalues, auxiliary eigenvalues and energy")
    add_inputs(s)
    add_format(s)

    b = sub.add_parser("bounds", help="every energy bound with applicability and slack")
    add_inputs(b)
    add_format(b)

    r = sub.add_parser("srg", help="closed-form spectrum of a strongly regular graph")
    for name in ("n", "r", "a", "c"):
        r.add_argument(name, type=int)
    r.add_argument("--alpha", default="0", help="comma separated alpha values in [0, 1)")
    r.add_argument("--check", action="store_true",
                   help="compare with the numeric spectrum (C5, Petersen, K3,3 only)")
    add_format(r)

    v = sub.add_parser("verify", help="exhaustive check over all labeled graphs up to --n-max")
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--alpha", default=None, help="alpha grid (default 0,0.1,...,0.9)")
    v.add_argument("--theorems", default=None, help="comma separated check ids (default: all)")
    v.add_argument("--connected-only", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--csv", default=None, metavar="FILE", help="also write violations as CSV")
    v.add_argument("--quiet", action="store_true", help="no summary table on stderr")
    add_format(v)

    sub.add_parser("list-theorems", help="print the registered check ids")
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args, out)
        if args.command == "bounds":
            return cmd_bounds(args, out)
        if args.command == "srg":
            return cmd_srg(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        for tid, th in vf.THEOREMS.items():
            out.write(f"{tid}\t{th.description}\n")
        return EXIT_OK
    except UsageError as exc:
        err.write(f"alphaspec: error: {exc}\n")
        return EXIT_USAGE
    except cf.SrgError as exc:
        err.write(f"alphaspec: srg: {exc}\n")
        return EXIT_SRG.get(type(exc), EXIT_USAGE)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

"""Command-line front end: verify, tables, solve, sample.

Exit codes: 0 pass, 1 check failure or chart precondition, 2 usage error.
All JSON is emitted with sorted check names and fixed key order, so two runs
with the same arguments produce identical bytes (timings only with --timing).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .report import Check, Report
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _workers() -> int:
    raw = os.environ.get("EIII_ATLAS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# verify -----------------------------------------------------------------------

def _run_one(args):
    name, seed, trials, jacobi = args
    return run_suite(name, seed, trials, jacobi)


def cmd_verify(suite: str, seed: int = 0, trials: int = 50, jacobi: str = "exhaustive",
               workers: Optional[int] = None):
    """Run one suite (or all of them) and return (Report, exit code)."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    workers = min(workers or _workers(), len(names))
    start = time.perf_counter()
    jobs = [(n, seed, trials, jacobi) for n in names]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    checks: List[Check] = [c for r in results for c in r]
    report = Report(suite, checks, seed=seed)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report, EXIT_OK if report.passed else EXIT_FAIL


# tables -----------------------------------------------------------------------

def cmd_tables(kind: str, dim: Optional[int] = None, algebra: Optional[str] = None,
               fmt: str = "json") -> str:
    if kind == "fierz":
        from .fierz import derive_table, sectors_for
        dims = [dim] if dim else [8, 10, 16]
        tables = [derive_table(d, s) for d in dims for s in sectors_for(d)]
        if fmt == "text":
            return "\n\n".join(t.to_text() for t in tables)
        return _dump([t.to_json() for t in tables])
    if kind == "octonion":
        from .octonion import star_table, table_text
        if fmt == "text":
            return table_text()
        return _dump({"table": [[list(e) for e in row] for row in star_table()]})
    if kind == "structure":
        from .liealg import ALGEBRAS, build_structure_constants
        if algebra not in ALGEBRAS:
            raise ValueError(f"--algebra must be one of {', '.join(ALGEBRAS)}")
        sc = build_structure_constants(algebra)
        if fmt == "text":
            lines = [f"{algebra} dim={sc.dim}"]
            for (i, j) in sorted(sc.table):
                terms = " ".join(f"({v})*X{k}" for k, v in sorted(sc.table[(i, j)].items()))
                lines.append(f"[X{i},X{j}] = {terms}")
            return "\n".join(lines)
        return json.dumps(sc.to_json(), separators=(",", ":"))
    raise ValueError(f"unknown table kind {kind!r}")


# solve ------------------------------------------------------------------------

def cmd_solve(chart: str, params: dict) -> dict:
    """Assemble a chart point and confirm its residual; raises NotInChart/ValueError."""
    from .eiii import ChartPoint, TypeConstraintWarning, chart_xinfty, plucker_residual
    cp = ChartPoint.from_json({"chart": chart, "params": params})
    flags = []
    if chart == "xinfty":
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            p = cp.params
            point = chart_xinfty(cp.frame, p["f"], p["K"], p["ubar"], p["s"], project=True)
        if any(issubclass(w.category, TypeConstraintWarning) for w in caught):
            flags.append("projected")
    elif chart in ("s", "tplus", "tminus"):
        from .eiii import assemble
        point = assemble(cp)
    else:
        raise ValueError(f"unknown chart {chart!r}")
    residual = plucker_residual(point)
    nonzero = sum(1 for r in residual if r)
    return {"chart": chart, "point": point.to_json(), "flags": flags,
            "residual": {"components": len(residual), "nonzero": nonzero}}


# sample -----------------------------------------------------------------------

def cmd_sample(seed: int, steps: int, count: int) -> list:
    from .eiii import orbit_sample, residual_is_zero
    from .rep27 import PSI0
    from .rng import Rng
    rng = Rng(seed)
    out = []
    for k in range(count):
        sub = rng.next_u64()
        point = PSI0 if steps == 0 else orbit_sample(sub, steps)
        out.append({"index": k, "seed": sub, "point": point.to_json(),
                    "residual_zero": residual_is_zero(point)})
    return out


# argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eiii-atlas",
                                     description="Exact checks for the EIII Plücker atlas.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run invariant suites and print a JSON report")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--jacobi", choices=("exhaustive", "sampled"), default="exhaustive")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")

    t = sub.add_parser("tables", help="print a Fierz, octonion or structure-constant table")
    t.add_argument("kind", choices=("fierz", "octonion", "structure"))
    t.add_argument("--dim", type=int, choices=(8, 10, 16))
    t.add_argument("--algebra", choices=("g2", "f4", "e6", "e8"))
    t.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    s = sub.add_parser("solve", help="assemble a point from chart parameters")
    s.add_argument("chart", choices=("s", "tplus", "tminus", "xinfty"))
    s.add_argument("--input", required=True, help="JSON file with the chart parameters")

    m = sub.add_parser("sample", help="deterministic orbit samples of Psi0")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--steps", type=int, default=5)
    m.add_argument("--count", type=int, default=1)
    return parser


def _error(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "verify":
        if args.trials < 1:
            return _error("--trials must be positive", EXIT_USAGE)
        report, code = cmd_verify(args.suite, args.seed, args.trials, args.jacobi)
        print(report.dumps(timing=args.timing))
        return code

    if args.command == "tables":
        if args.kind == "structure" and not args.algebra:
            return _error("tables structure needs --algebra", EXIT_USAGE)
        print(cmd_tables(args.kind, args.dim, args.algebra, args.fmt))
        return EXIT_OK

    if args.command == "solve":
        from .eiii import NotInChart
        try:
            with open(args.input) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            return _error(f"cannot read {args.input}: {exc}", EXIT_USAGE)
        params = raw.get("params", raw) if isinstance(raw, dict) else raw
        try:
            result = cmd_solve(args.chart, params)
        except NotInChart as exc:
            return _error(str(exc), EXIT_FAIL)
        except (KeyError, TypeError, ValueError) as exc:
            return _error(f"invalid chart parameters: {exc}", EXIT_FAIL)
        print(_dump(result))
        return EXIT_OK if result["residual"]["nonzero"] == 0 else EXIT_FAIL

    if args.command == "sample":
        if args.steps < 0 or args.count < 0:
            return _error("--steps and --count must be non-negative", EXIT_USAGE)
        result = cmd_sample(args.seed, args.steps, args.count)
        print(_dump(result))
        return EXIT_OK if all(r["residual_zero"] for r in result) else EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

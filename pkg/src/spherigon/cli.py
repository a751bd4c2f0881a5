"""``spherigon`` command line.

Exit codes: 0 success, 1 a check failed, 2 usage or domain error, 3 the
solver could not produce a polygon.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import io as docs
from .core import (
    area_oracle_montecarlo,
    area_oracle_triangulated,
    girard_area,
    interior_angles,
    is_spherically_convex,
    thickness,
)
from .errors import RelativeInteriorViolated, SolverDiverged, SpherigonError
from .reduced import decompose, is_reduced, perturbed_reduced_polygon, regular_odd_gon
from .svg import render_svg
from .verify import SUITES, SweepGrid, run_verification

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_SOLVER = 0, 1, 2, 3


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x.strip())


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _reduced_decomposition(poly, hint):
    """Reducedness verdict plus the decomposition when there is one."""
    ok, diag = is_reduced(poly, omega=hint)
    dec = None
    if ok:
        try:
            dec = decompose(poly, diag.reference)
        except SpherigonError as exc:
            diag.reasons.append(f"decomposition failed: {exc}")
            ok = False
    return ok, diag, dec


# -- commands ------------------------------------------------------------------

def cmd_gen_regular(args) -> int:
    poly = regular_odd_gon(args.n, args.thickness)
    docs.save_polygon(args.output, poly, args.thickness)
    return EXIT_OK


def cmd_gen_perturbed(args) -> int:
    poly = perturbed_reduced_polygon(args.n, args.thickness, args.seed, args.delta)
    docs.save_polygon(args.output, poly, args.thickness)
    return EXIT_OK


def measure(poly, hint=None, samples: int = 100_000, seed: int = 0) -> dict:
    """Everything ``measure`` prints, as a plain dict."""
    convex = is_spherically_convex(poly)
    out = {"n": poly.n, "convex": convex}
    if convex:
        est, se = area_oracle_montecarlo(poly, samples, seed)
        th = thickness(poly)
        out.update(
            girard_area=girard_area(poly),
            triangulated_area=area_oracle_triangulated(poly),
            montecarlo_area={"value": est, "stderr": se, "samples": samples, "seed": seed},
            thickness={"value": th.value, "error": th.error},
        )
    ok, diag, dec = _reduced_decomposition(poly, hint)
    out["reduced"] = ok
    out["reduced_diagnostics"] = diag.to_dict()
    out["phi_sum"] = float(dec.phi.sum()) if dec is not None else None
    angles = interior_angles(poly) if convex else np.full(poly.n, np.nan)
    rows = []
    for i in range(poly.n):
        row = {
            "i": i + 1,
            "vertex": [float(c) for c in poly.vertices[i]],
            "interior_angle": None if math.isnan(angles[i]) else float(angles[i]),
            "side_length": float(poly.side_lengths[i]),
        }
        if dec is not None:
            row.update(phi=float(dec.phi[i]), alpha=float(dec.alpha[i]), beta=float(dec.beta[i]))
        rows.append(row)
    out["vertices"] = rows
    return out


def _pretty(report: dict) -> str:
    lines = [f"vertices      {report['n']}", f"convex        {report['convex']}"]
    if report["convex"]:
        mc = report["montecarlo_area"]
        th = report["thickness"]
        lines += [
            f"area (girard) {report['girard_area']:.12f}",
            f"area (triang) {report['triangulated_area']:.12f}",
            f"area (mc)     {mc['value']:.6f} +- {mc['stderr']:.6f}",
            f"thickness     {th['value']:.12f} +- {th['error']:.1e}",
        ]
    lines.append(f"reduced       {report['reduced']}")
    for reason in report["reduced_diagnostics"]["reasons"]:
        lines.append(f"  - {reason}")
    if report["phi_sum"] is not None:
        lines.append(f"sum of phi    {report['phi_sum']:.12f}  (pi = {math.pi:.12f})")
    lines.append("")
    head = f"{'i':>4} {'angle':>14} {'side':>14}"
    if report["phi_sum"] is not None:
        head += f" {'phi':>14} {'alpha':>14} {'beta':>14}"
    lines.append(head)
    for row in report["vertices"]:
        angle = row["interior_angle"]
        line = f"{row['i']:>4} {('-' if angle is None else f'{angle:.10f}'):>14} {row['side_length']:>14.10f}"
        if "phi" in row:
            line += f" {row['phi']:>14.10f} {row['alpha']:>14.10f} {row['beta']:>14.10f}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_measure(args) -> int:
    poly, hint = docs.load_polygon(args.input)
    report = measure(poly, hint, args.samples, args.seed)
    if args.decomp:
        _, _, dec = _reduced_decomposition(poly, hint)
        if dec is None:
            print("no decomposition: polygon is not reduced", file=sys.stderr)
        else:
            docs.save_decomposition(args.decomp, dec)
    if args.pretty:
        sys.stdout.write(_pretty(report))
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_check_reduced(args) -> int:
    poly, hint = docs.load_polygon(args.input)
    omega = args.thickness if args.thickness is not None else hint
    ok, diag = is_reduced(poly, args.tol, omega)
    doc = {"reduced": ok, **diag.to_dict()}
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2 if args.pretty else None) + "\n")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args) -> int:
    base = SweepGrid()
    lambdas = args.lambdas if args.lambdas is not None else base.lambda_values
    omegas = args.omegas
    if omegas is None:
        omegas = tuple(math.atan(x) for x in lambdas) if args.lambdas is not None else base.omega_values
    grid = SweepGrid(
        lambda_values=lambdas,
        n_values=args.n_values if args.n_values is not None else base.n_values,
        omega_values=omegas,
        seeds=args.seeds if args.seeds is not None else base.seeds,
        mc_samples=args.mc_samples if args.mc_samples is not None else base.mc_samples,
    )
    t0 = time.perf_counter()
    report = run_verification(args.suite, grid, args.sabotage)
    elapsed = time.perf_counter() - t0
    if args.report:
        path = Path(args.report)
        path.write_text(report.to_json() + "\n", encoding="utf-8")
        path.with_suffix(".csv").write_text(report.to_csv(), encoding="utf-8")
    for r in report.records:
        mark = "pass" if r.status else "FAIL"
        print(f"{mark}  {r.claim_id:<52} margin {r.margin:+.3e}  tol {r.tolerance:.1e}")
    failed = report.failed()
    print(f"{len(report.records) - len(failed)}/{len(report.records)} checks passed in {elapsed:.1f} s")
    return EXIT_OK if not failed else EXIT_FAILED


def cmd_plot(args) -> int:
    poly, hint = docs.load_polygon(args.input)
    dec = None
    if poly.n % 2 == 1:
        _, _, dec = _reduced_decomposition(poly, hint)
    _write(args.output, render_svg(poly, dec))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spherigon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-regular", help="write a regular odd-gon of given thickness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--thickness", type=float, required=True, help="radians, in (0, pi/2)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen_regular)

    p = sub.add_parser("gen-perturbed", help="write a non-regular reduced odd-gon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--thickness", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=float, default=0.03, help="noise amplitude, at most 0.05")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen_perturbed)

    p = sub.add_parser("measure", help="areas, thickness and reducedness of a polygon file")
    p.add_argument("input")
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    p.add_argument("--samples", type=int, default=100_000, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--decomp", metavar="PATH", help="also write the decomposition JSON")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("check-reduced", help="reducedness test with per-vertex diagnostics")
    p.add_argument("input")
    p.add_argument("--thickness", type=float, help="expected thickness (default: file hint)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_check_reduced)

    p = sub.add_parser("verify", help="run the numerical claim checks")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--lambdas", type=_floats, help="comma-separated tan(thickness) values")
    p.add_argument("--omegas", type=_floats, help="comma-separated thickness values")
    p.add_argument("--n-values", type=_ints, help="comma-separated odd vertex counts")
    p.add_argument("--seeds", type=_ints)
    p.add_argument("--mc-samples", type=int)
    p.add_argument("--report", metavar="PATH", help="JSON report; a CSV summary goes next to it")
    p.add_argument("--sabotage", choices=("girard",), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="SVG figure with projection feet and chords")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SolverDiverged, RelativeInteriorViolated) as exc:
        print(f"spherigon: solver failed: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (SpherigonError, OSError) as exc:
        print(f"spherigon: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

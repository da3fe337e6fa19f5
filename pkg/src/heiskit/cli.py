"""Command-line front end.

Subcommands:

* ``density`` -- small-ball measures over a radius ladder with the ratio
  measure/r^dim and its extrapolated limit;
* ``expand``  -- least-squares expansion coefficients next to their
  formula-predicted values;
* ``verify``  -- named invariant suites with a JSON report; the exit code
  is the number of failed suites (capped);
* ``table``   -- closed-form monomial ball integrals, optionally checked
  against 2D quadrature.

Output is CSV by default ('.' decimal separator, '\\n' line endings, one
header row; floats are printed with shortest round-trip repr), or a JSON
mirror with ``--format json``.  Runs with identical arguments and seed
produce bit-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import koranyi, measure, surfaces, verify
from .core import HPoint
from .curves import classify_degree, load_curve
from .measure import MeasureSample
from .surfaces import load_surface

EXIT_SPEC_ERROR = 2
EXIT_QUADRATURE_ERROR = 3
MAX_VERIFY_EXIT = 100


def _fmt(x) -> str:
    return repr(float(x))


def _parse_radii(text: str):
    try:
        r0, count, factor = text.split(",")
        return measure.radius_ladder(float(r0), int(count), float(factor))
    except ValueError as exc:
        raise ValueError(f"bad --radii {text!r}; expected r0,count,factor") from exc


def _parse_center(text):
    if text is None:
        return None
    try:
        a, b, c = (float(t) for t in text.split(","))
        return HPoint(a, b, c)
    except ValueError as exc:
        raise ValueError(f"bad --center {text!r}; expected x1,x2,x3") from exc


def _load_spec(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read spec {path}: {exc}") from exc


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    try:
        return int(os.environ.get("HEIS_THREADS", "1"))
    except ValueError:
        return 1


class _MeasureTarget:
    """A spec file resolved to a measure function plus its dimension."""

    def __init__(self, spec: dict, center, order: int):
        self.kind = "curve" if "x1" in spec and "type" not in spec else "surface"
        if self.kind == "curve":
            self.curve = load_curve(spec, order=max(order, 16)).as_float()
            if center is not None and any(
                abs(a - b) > 1e-9 for a, b in zip(center, self.curve.base)
            ):
                raise ValueError("--center must be the curve base point")
            self.dim = classify_degree(self.curve, tol=1e-9)
            base = self.curve.base
            self.measure = lambda r: measure.curve_ball_measure(self.curve, base, r)
            return
        obj = load_surface(spec)
        self.dim = 3
        if isinstance(obj, surfaces.GraphSurface):
            if center is not None and max(abs(v) for v in center) > 1e-12:
                raise ValueError("graph surfaces are measured at the origin")
            self.measure = lambda r: measure.surface_ball_measure(obj, r)
            return
        center = center if center is not None else HPoint(0.0, 0.0, 0.0)
        data = surfaces.horizontal_data(obj, center)
        if data.is_characteristic:
            if spec.get("type") not in ("paraboloid", "quadric"):
                raise ValueError(
                    "characteristic center is only supported for x3-graph "
                    "surfaces (paraboloid / quadric)"
                )
            if max(abs(v) for v in center) > 1e-12:
                raise ValueError("characteristic measurement expects the origin")
            if spec["type"] == "paraboloid":
                t = math.tan(float(spec["alpha"]))
                s_mat = np.array([[t, 0.0], [0.0, t]])
            else:
                s_mat = np.asarray(spec["S"], dtype=float)
            f = lambda z1, z2: s_mat[0, 0] * z1 * z1 + 2 * s_mat[0, 1] * z1 * z2 + s_mat[1, 1] * z2 * z2
            fg = lambda z1, z2: (
                2 * s_mat[0, 0] * z1 + 2 * s_mat[0, 1] * z2,
                2 * s_mat[0, 1] * z1 + 2 * s_mat[1, 1] * z2,
            )
            self.measure = lambda r: measure.xgraph_ball_measure(f, fg, r)
        else:
            graph = surfaces.normalize_at_point(obj, center)
            self.measure = lambda r: measure.surface_ball_measure(graph, r)

    def predicted(self):
        """(exponents, predictions, fit_exponents) for the expand command."""
        if self.kind == "curve":
            from . import curves as cv

            if self.dim == 1:
                a1 = cv.horizontal_expansion_coeff(self.curve, tol=1e-9)
                return [1, 3], [2.0, float(a1)], [1, 3, 5]
            coeffs = [
                float(cv.nonhorizontal_expansion_coeff(self.curve, m, tol=1e-9))
                for m in (1, 2, 3)
            ]
            return [2, 6, 10, 14], [2.0] + coeffs, [2, 6, 10, 14]
        beta1 = surfaces.surface_expansion_beta1()
        quintic = getattr(self, "_quintic", None)
        if quintic is None:
            return [3], [koranyi.omega_h()], [3, 5, 6, 7]
        return [3, 5], [koranyi.omega_h(), beta1 * quintic], [3, 5, 6, 7]


def cmd_density(args) -> int:
    spec = _load_spec(args.spec)
    target = _MeasureTarget(spec, _parse_center(args.center), args.order)
    radii = _parse_radii(args.radii)
    samples = measure.measure_batch(target.measure, radii, _threads(args))
    ratios = [s.value / s.r**target.dim for s in samples]
    limit = measure.richardson_limit(radii[0] / radii[1], ratios)
    if args.format == "json":
        payload = {
            "dimension": target.dim,
            "rows": [
                {"r": s.r, "measure": s.value, "err_estimate": s.err, "ratio": rho}
                for s, rho in zip(samples, ratios)
            ],
            "limit": limit,
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = ["r,measure,err_estimate,ratio,limit"]
    for s, rho in zip(samples, ratios):
        lines.append(
            ",".join([_fmt(s.r), _fmt(s.value), _fmt(s.err), _fmt(rho), _fmt(limit)])
        )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_expand(args) -> int:
    spec = _load_spec(args.spec)
    center = _parse_center(args.center)
    target = _MeasureTarget(spec, center, args.order)
    if target.kind == "surface" and "type" in spec:
        obj = load_surface(spec)
        if isinstance(obj, surfaces.GraphSurface):
            target._quintic = surfaces.graph_quintic_quantity(obj)
        else:
            data = surfaces.horizontal_data(obj, center or HPoint(0.0, 0.0, 0.0))
            if not data.is_characteristic:
                target._quintic = surfaces.pde_residual(
                    obj, center or HPoint(0.0, 0.0, 0.0)
                )
    exps, preds, fit_exps = target.predicted()
    radii = _parse_radii(args.radii)
    samples = measure.measure_batch(target.measure, radii, _threads(args))
    fit = measure.fit_expansion(samples, fit_exps)
    rows = []
    for e, c in zip(fit.exponents, fit.coefficients):
        if e in exps:
            p = preds[exps.index(e)]
            rel = abs(c - p) / max(abs(p), 1e-300)
            rows.append((e, c, p, rel))
        else:
            rows.append((e, c, None, None))
    if args.format == "json":
        payload = {
            "fit": fit.to_dict(),
            "rows": [
                {
                    "exponent": e,
                    "fitted": c,
                    "predicted": p,
                    "rel_err": rel,
                }
                for e, c, p, rel in rows
            ],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = ["exponent,fitted,predicted,rel_err"]
    for e, c, p, rel in rows:
        lines.append(
            ",".join(
                [
                    _fmt(e),
                    _fmt(c),
                    "" if p is None else _fmt(p),
                    "" if rel is None else _fmt(rel),
                ]
            )
        )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    report = verify.run_suites(names, seed=args.seed)
    if args.format == "csv":
        lines = ["suite,invariant,status,detail"]
        for s in report["suites"]:
            for inv in s["invariants"]:
                lines.append(
                    ",".join(
                        [s["suite"], inv["name"], inv["status"], inv["detail"].replace(",", ";")]
                    )
                )
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(report, indent=2) + "\n")
    return min(report["failed_groups"], MAX_VERIFY_EXIT)


def cmd_table(args) -> int:
    rows = []
    for a in range(args.max_half_degree + 1):
        for b in range(args.max_half_degree + 1 - a):
            closed = koranyi.monomial_ball_integral(a, b)
            if args.quad:
                quad = koranyi.ball_integral(
                    lambda e1, e2, a=a, b=b: e1 ** (2 * a) * e2 ** (2 * b)
                )
                rows.append((a, b, closed, quad, abs(closed - quad) / closed))
            else:
                rows.append((a, b, closed, None, None))
    if args.format == "json":
        payload = [
            {
                "a": a,
                "b": b,
                "closed_form": c,
                "quadrature": q,
                "rel_err": rel,
            }
            for a, b, c, q, rel in rows
        ]
        _emit(args, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = ["a,b,closed_form,quadrature,rel_err"]
    for a, b, c, q, rel in rows:
        lines.append(
            ",".join(
                [
                    str(a),
                    str(b),
                    _fmt(c),
                    "" if q is None else _fmt(q),
                    "" if rel is None else _fmt(rel),
                ]
            )
        )
    _emit(args, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heiskit",
        description="Small-ball measures and curvature checks in the "
        "Heisenberg group with the Koranyi metric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--threads", type=int, default=None,
                       help="worker threads (default: HEIS_THREADS or 1)")
        p.add_argument("--tol", type=float, default=None,
                       help="override tolerance where applicable")
        p.add_argument("--order", type=int, default=16, help="jet truncation order")

    p = sub.add_parser("density", help="measure/r^dim table over a radius ladder")
    p.add_argument("--spec", required=True, help="curve or surface JSON file")
    p.add_argument("--center", default=None, help="x1,x2,x3 (default: natural base)")
    p.add_argument("--radii", default="0.4,8,2", help="r0,count,factor")
    common(p)
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("expand", help="fit expansion coefficients vs predictions")
    p.add_argument("--spec", required=True)
    p.add_argument("--center", default=None)
    p.add_argument("--radii", default="0.2,8,2")
    common(p)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("verify", help="run named invariant suites")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=tuple(verify.SUITES) + ("all",),
    )
    common(p)
    p.set_defaults(fn=cmd_verify, format="json")

    p = sub.add_parser("table", help="monomial ball integrals")
    p.add_argument("--max-half-degree", type=int, default=4)
    p.add_argument("--quad", action="store_true", help="cross-check with 2D quadrature")
    common(p)
    p.set_defaults(fn=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC_ERROR
    except (ArithmeticError, measure.BracketError, surfaces.NewtonDivergenceError) as exc:
        print(f"quadrature error: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE_ERROR


if __name__ == "__main__":
    sys.exit(main())

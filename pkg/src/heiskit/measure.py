"""Numerical small-ball measures on curves and surfaces, and expansion fits.

Curve measures integrate the area density over the parameter window cut out
by the metric ball; the window endpoints come from bisection on the
strictly monotone norm function.  Surface measures use the anisotropic
polar decomposition: for each sphere node the polar exit radius solves a
monotone quartic by bisection and the radial integral is Gauss-Legendre.
Quadrature choices: adaptive Gauss-Kronrod (absolute tolerance 1e-11) for
one-dimensional curve integrals, bisection to 1e-13 in the parameter, and
spectral sphere nodes from :mod:`heiskit.koranyi`.

Batches over radii are embarrassingly parallel; results are reduced in
input order so runs are reproducible at the bit level.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy import integrate

from . import core
from .curves import CurveJet, classify_degree
from .koranyi import DEFAULT_SPHERE_NODES, sphere_nodes

QUAD_ABS_TOL = 1e-11
BISECT_TOL = 1e-13
# Bracket expansion for boundary roots is capped at this multiple of the
# homogeneous scale r^degree.
BRACKET_CAP = 4.0


class MeasureSample(NamedTuple):
    r: float
    value: float
    err: float


class BracketError(RuntimeError):
    """The ball/curve intersection is not a single arc around the center."""


class IllConditionedFitError(RuntimeError):
    pass


# ------------------------------------------------------------------- curves
def area_density(obj, param, degree: int):
    """Area density of the stated degree at one parameter value.

    Degree 1 is the planar speed, degree 2 the contact form on the
    velocity, degree 3 the graph wedge density.
    """
    if degree == 1:
        d1, d2 = obj.planar.x1.deriv(), obj.planar.x2.deriv()
        return float(np.hypot(float(d1(param)), float(d2(param))))
    if degree == 2:
        return abs(_theta_speed(obj, param))
    if degree == 3:
        return float(obj.density(param[0], param[1]))
    raise ValueError(f"no area density of degree {degree}")


def _theta_speed(curve: CurveJet, s: float) -> float:
    x1, x2, x3 = curve.components()
    return float(x3.deriv()(s)) + 2.0 * (
        float(x1(s)) * float(x2.deriv()(s)) - float(x2(s)) * float(x1.deriv()(s))
    )


def _norm_gap(curve: CurveJet, center, s: float, r: float) -> float:
    return core.koranyi_dist(center, curve.point_at(s)) ** 4 - r**4


def _boundary_param(curve, center, r, degree, direction) -> float:
    scale = r**degree
    cap = BRACKET_CAP * scale
    lo, hi = 0.0, 0.5 * scale
    while _norm_gap(curve, center, direction * hi, r) < 0.0:
        lo = hi
        hi *= 2.0
        if hi > cap:
            raise BracketError(
                "no ball exit within the bracket cap; intersection may "
                "have several components"
            )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= BISECT_TOL:
            break
        if _norm_gap(curve, center, direction * mid, r) < 0.0:
            lo = mid
        else:
            hi = mid
    s = direction * 0.5 * (lo + hi)
    return s


def curve_intersection_params(curve: CurveJet, center, r: float):
    """Parameter window (s_minus, s_plus) of the ball around the center.

    The bracket scale follows the pointwise degree of the base point, so
    windows of size ~r and ~r^2 are both found quickly.
    """
    if core.koranyi_dist(center, curve.point_at(0.0)) > 1e-9 * (1.0 + r):
        raise ValueError("center must lie on the curve at parameter 0")
    base_degree = classify_degree(curve.as_float(), tol=1e-9)
    s_plus = _boundary_param(curve, center, r, base_degree, +1.0)
    s_minus = _boundary_param(curve, center, r, base_degree, -1.0)
    return s_minus, s_plus


def curve_ball_measure(
    curve: CurveJet, center, r: float, degree: int | None = None
) -> MeasureSample:
    """Spherical measure of ball(center, r) intersected with the curve.

    ``degree`` selects the dimension being measured (1 or 2) and thus the
    area density; it defaults to the degree of the base point.  Passing 2
    explicitly measures the 2-dimensional mass around an isolated
    horizontal point of a nonhorizontal curve.
    """
    curve = curve.as_float()
    if degree is None:
        degree = classify_degree(curve, tol=1e-9)
    s_minus, s_plus = curve_intersection_params(curve, center, r)
    val, err = integrate.quad(
        lambda s: area_density(curve, s, degree),
        s_minus,
        s_plus,
        epsabs=QUAD_ABS_TOL,
        epsrel=1e-12,
        limit=200,
    )
    edge = area_density(curve, s_plus, degree) + area_density(curve, s_minus, degree)
    return MeasureSample(r, val, err + edge * BISECT_TOL)


# ----------------------------------------------------------------- surfaces
def polar_exit_radius(graph, xi, r: float, iters: int = 60):
    """Solve phi(dilated xi)^4 + 2 rho^2 xi1^2 phi^2 + rho^4 = r^4 in rho.

    The left side is strictly increasing in rho on [0, r] and already
    exceeds r^4 at rho = r, so bisection on [0, r] always brackets; the
    unique root is <= r.  Vectorizes over arrays of sphere nodes.
    """
    xi1, xi2 = np.asarray(xi[0], dtype=float), np.asarray(xi[1], dtype=float)

    def excess(rho):
        f = np.asarray(graph.phi(rho * xi1, rho * rho * xi2), dtype=float)
        f2 = f * f
        return f2 * f2 + 2.0 * rho * rho * xi1 * xi1 * f2 + rho**4 - r**4

    lo = np.zeros_like(xi1, dtype=float)
    hi = np.full_like(lo, float(r))
    if np.any(excess(hi) < 0.0):
        raise ArithmeticError("polar solve: upper bracket failed")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        low = excess(mid) < 0.0
        lo = np.where(low, mid, lo)
        hi = np.where(low, hi, mid)
    out = 0.5 * (lo + hi)
    return out if out.shape else float(out)


def surface_ball_measure(
    graph,
    r: float,
    nodes: int = DEFAULT_SPHERE_NODES,
    radial_nodes: int = 32,
    estimate_error: bool = True,
) -> MeasureSample:
    """Measure of the r-ball about the origin on a normalized graph."""
    val = _surface_measure_raw(graph, r, nodes, radial_nodes)
    err = 0.0
    if estimate_error:
        coarse = _surface_measure_raw(graph, r, nodes // 2, radial_nodes)
        err = abs(val - coarse)
    return MeasureSample(r, val, err)


def _surface_measure_raw(graph, r, nodes, radial_nodes):
    xi1, xi2, w = sphere_nodes(nodes)
    rho0 = polar_exit_radius(graph, (xi1, xi2), r)
    t, wt = np.polynomial.legendre.leggauss(radial_nodes)
    t = 0.5 * (t + 1.0)
    wt = 0.5 * wt
    # integral_0^rho0 density(delta_rho xi) rho^2 d rho, one Gauss rule per
    # sphere node, all nodes at once.
    rho = rho0[None, :] * t[:, None]
    dens = np.asarray(
        graph.density(rho * xi1[None, :], rho * rho * xi2[None, :]), dtype=float
    )
    radial = np.einsum("i,ij->j", wt, dens * rho * rho) * rho0
    return float(np.dot(w, radial))


def xgraph_ball_measure(
    f, f_grad, r: float, angular_nodes: int = 512, radial_nodes: int = 64
) -> MeasureSample:
    """Direct planar quadrature for an x3-graph surface at the origin.

    ``f`` maps planar arrays (z1, z2) to heights and ``f_grad`` to the pair
    of partials.  The ball section must be star-shaped about the origin
    (true for weighted-homogeneous graphs such as quadrics); each ray's
    exit radius is solved by bisection and the density

        sqrt((f_2 + 2 z1)^2 + (f_1 - 2 z2)^2)

    is integrated in Euclidean polar coordinates.  This path is the
    independent check used at characteristic centers, where the polar
    graph machinery does not apply.
    """
    ang = (np.arange(angular_nodes) + 0.5) * (2.0 * np.pi / angular_nodes)
    c, s = np.cos(ang), np.sin(ang)

    def gap(t):
        z1, z2 = t * c, t * s
        h = np.asarray(f(z1, z2), dtype=float)
        w = z1 * z1 + z2 * z2
        return w * w + h * h - r**4

    lo = np.zeros_like(c)
    hi = np.full_like(c, r)
    grow = gap(hi) < 0.0
    tries = 0
    while np.any(grow):
        hi = np.where(grow, 2.0 * hi, hi)
        grow = gap(hi) < 0.0
        tries += 1
        if tries > 60:
            raise ArithmeticError("ray solve: no bracket")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        low = gap(mid) < 0.0
        lo = np.where(low, mid, lo)
        hi = np.where(low, hi, mid)
    tstar = 0.5 * (lo + hi)

    tq, wq = np.polynomial.legendre.leggauss(radial_nodes)
    tq = 0.5 * (tq + 1.0)
    wq = 0.5 * wq
    tt = tstar[None, :] * tq[:, None]
    z1, z2 = tt * c[None, :], tt * s[None, :]
    f1, f2 = f_grad(z1, z2)
    dens = np.sqrt((f2 + 2.0 * z1) ** 2 + (f1 - 2.0 * z2) ** 2)
    radial = np.einsum("i,ij->j", wq, dens * tt) * tstar
    val = float(radial.sum() * (2.0 * np.pi / angular_nodes))
    coarse = float(
        np.einsum("i,ij->j", wq, (dens * tt)[:, ::2]).dot(tstar[::2])
        * (2.0 * np.pi / (angular_nodes // 2))
    )
    return MeasureSample(r, val, abs(val - coarse))


# ------------------------------------------------------------ ratios / fits
def radius_ladder(r0: float, count: int = 8, factor: float = 2.0):
    """Geometric ladder r0, r0/factor, ..., length ``count``."""
    if r0 <= 0 or count < 1 or factor <= 1:
        raise ValueError("need r0 > 0, count >= 1, factor > 1")
    return [r0 / factor**k for k in range(count)]


def richardson_limit(step_ratio: float, values: Sequence[float]) -> float:
    """Iterated Richardson extrapolation of a sequence on a geometric ladder.

    ``values[k]`` is the quantity at step h0 / step_ratio^k; successive
    passes eliminate the h, h^2, ... error terms.
    """
    level = list(values)
    n = len(level)
    for m in range(1, n):
        nxt = []
        mult = step_ratio**m
        for i in range(n - m):
            nxt.append((mult * level[i + 1] - level[i]) / (mult - 1.0))
        level = nxt
    return level[0]


def density_ratio(measure_fn, radii: Sequence[float], exponent: float):
    """Ratios measure(r)/r^exponent over a ladder plus their extrapolation.

    Returns (samples, ratios, limit); the ladder must be geometric for the
    extrapolation step.
    """
    radii = list(radii)
    if len(radii) < 2:
        raise ValueError("need at least two radii")
    step = radii[0] / radii[1]
    samples = [measure_fn(r) for r in radii]
    ratios = [s.value / s.r**exponent for s in samples]
    limit = richardson_limit(step, ratios)
    return samples, ratios, limit


@dataclass
class FitResult:
    exponents: list
    coefficients: list
    residual: float
    pointwise: list = field(default_factory=list)

    def to_dict(self):
        return {
            "exponents": list(self.exponents),
            "coefficients": [float(c) for c in self.coefficients],
            "residual": float(self.residual),
            "pointwise": [float(p) for p in self.pointwise],
        }


def fit_expansion(samples: Sequence[MeasureSample], exponents: Sequence[float]) -> FitResult:
    """Least squares fit of value ~ sum c_k r^(e_k) over the samples.

    Columns are normalized before solving; a design matrix with condition
    number beyond 1e12 (radii too clustered for the requested exponents)
    raises :class:`IllConditionedFitError`.  ``pointwise`` holds the
    Richardson-style estimates (value - c_0 r^(e_0)) / r^(e_1).
    """
    if len(samples) < len(exponents):
        raise ValueError("need at least as many samples as exponents")
    r = np.array([s.r for s in samples], dtype=float)
    y = np.array([s.value for s in samples], dtype=float)
    design = np.column_stack([r**e for e in exponents])
    scale = np.linalg.norm(design, axis=0)
    if np.any(scale == 0.0):
        raise IllConditionedFitError("degenerate design column")
    scaled = design / scale
    if np.linalg.cond(scaled) > 1e12:
        raise IllConditionedFitError("radii too clustered for these exponents")
    sol, *_ = np.linalg.lstsq(scaled, y, rcond=None)
    coeffs = sol / scale
    resid = float(np.linalg.norm(design @ coeffs - y))
    pointwise = []
    if len(exponents) > 1:
        lead = coeffs[0] * r ** exponents[0]
        pointwise = list((y - lead) / r ** exponents[1])
    return FitResult(list(exponents), list(coeffs), resid, pointwise)


def auto_fit(measure_fn, r0: float, exponents, count: int = 8, factor: float = 2.0,
             max_shrink: int = 6):
    """Fit on a ladder, shrinking r0 until the subleading term is small.

    The starting radius is halved while the fitted first correction at r0
    exceeds 10 percent of the fitted leading term there.
    """
    for _ in range(max_shrink + 1):
        samples = [measure_fn(r) for r in radius_ladder(r0, count, factor)]
        fit = fit_expansion(samples, exponents)
        lead = abs(fit.coefficients[0]) * r0 ** exponents[0]
        sub = (
            abs(fit.coefficients[1]) * r0 ** exponents[1]
            if len(exponents) > 1
            else 0.0
        )
        if sub <= 0.1 * lead:
            return samples, fit
        r0 *= 0.5
    return samples, fit


def measure_batch(measure_fn, radii: Sequence[float], threads: int = 1):
    """Evaluate measures over radii, optionally in a thread pool.

    Results always come back in ladder order, independent of scheduling.
    """
    radii = list(radii)
    if threads <= 1:
        return [measure_fn(r) for r in radii]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(measure_fn, radii))

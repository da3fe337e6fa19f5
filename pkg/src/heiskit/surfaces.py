"""Level-set and graph surfaces: curvatures, the structure PDE, quadrics.

A surface enters either as a level set {u = 0} with exact partial
derivatives up to order two (polynomial defining functions, or callables
with user-supplied partials; nothing is differentiated numerically), or as
a normalized local graph x1 = phi(x2, x3) used by the measure engine.

At a noncharacteristic point the horizontal normal, the characteristic
direction, the horizontal mean curvature H, the imaginary curvature P and
the derivative e1(P) of P along the characteristic direction are all
rational expressions in the first and second partials of u; the structure
PDE residual is H^2 + (3/2) P^2 + 4 e1(P).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .core import HPoint
from .koranyi import gamma_fn

# A point is flagged characteristic when the horizontal gradient is this
# small relative to the full gradient.
CHAR_TOL = 1e-8


class CharacteristicPointError(ValueError):
    """Raised when a curvature quantity is requested at a characteristic
    point; there is no meaningful value to return there."""


class NewtonDivergenceError(RuntimeError):
    pass


# ------------------------------------------------------------ level surfaces
class PolynomialSurface:
    """Defining function u as a polynomial in (x1, x2, x3).

    ``monomials`` maps exponent triples (i, j, k) to coefficients.  All
    partials are formed symbolically, so evaluations are exact up to float
    rounding and vectorize over numpy arrays.
    """

    def __init__(self, monomials: dict):
        self.monomials = {
            tuple(k): float(v) for k, v in monomials.items() if float(v) != 0.0
        }
        self._partials = {}

    def _poly(self, di: int, dj: int, dk: int) -> dict:
        key = (di, dj, dk)
        if key not in self._partials:
            out = {}
            for (i, j, k), c in self.monomials.items():
                if i < di or j < dj or k < dk:
                    continue
                f = c
                for step in range(di):
                    f *= i - step
                for step in range(dj):
                    f *= j - step
                for step in range(dk):
                    f *= k - step
                out[(i - di, j - dj, k - dk)] = out.get((i - di, j - dj, k - dk), 0.0) + f
            self._partials[key] = out
        return self._partials[key]

    @staticmethod
    def _eval(poly: dict, x1, x2, x3):
        acc = 0.0
        for (i, j, k), c in poly.items():
            acc = acc + c * x1**i * x2**j * x3**k
        return acc

    def value(self, x):
        return self._eval(self._poly(0, 0, 0), x[0], x[1], x[2])

    def gradient(self, x):
        return tuple(
            self._eval(self._poly(*e), x[0], x[1], x[2])
            for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        )

    def hessian(self, x):
        h = {}
        for e, key in (
            ((2, 0, 0), (0, 0)),
            ((1, 1, 0), (0, 1)),
            ((1, 0, 1), (0, 2)),
            ((0, 2, 0), (1, 1)),
            ((0, 1, 1), (1, 2)),
            ((0, 0, 2), (2, 2)),
        ):
            h[key] = self._eval(self._poly(*e), x[0], x[1], x[2])
        return (
            (h[(0, 0)], h[(0, 1)], h[(0, 2)]),
            (h[(0, 1)], h[(1, 1)], h[(1, 2)]),
            (h[(0, 2)], h[(1, 2)], h[(2, 2)]),
        )


class CallableSurface:
    """Closed-form defining function with user-supplied partials."""

    def __init__(self, value: Callable, gradient: Callable, hessian: Callable):
        self.value = value
        self.gradient = gradient
        self.hessian = hessian


def paraboloid_surface(alpha: float) -> PolynomialSurface:
    """Circular paraboloid x3 = tan(alpha) (x1^2 + x2^2)."""
    t = math.tan(alpha)
    return PolynomialSurface({(2, 0, 0): t, (0, 2, 0): t, (0, 0, 1): -1.0})


def quadric_surface(s_matrix) -> PolynomialSurface:
    """Quadric graph x3 = <z, S z> for a symmetric 2x2 matrix S."""
    s = np.asarray(s_matrix, dtype=float)
    if s.shape != (2, 2) or abs(s[0, 1] - s[1, 0]) > 1e-14:
        raise ValueError("quadric matrix must be symmetric 2x2")
    return PolynomialSurface(
        {(2, 0, 0): s[0, 0], (1, 1, 0): 2 * s[0, 1], (0, 2, 0): s[1, 1], (0, 0, 1): -1.0}
    )


def vertical_plane(a: float = 1.0, b: float = 0.0, c: float = 0.0) -> PolynomialSurface:
    """Plane a x1 + b x2 = c; vertically ruled and noncharacteristic."""
    return PolynomialSurface({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 0): -c})


# ---------------------------------------------------------- frame derivatives
class HorizontalData(NamedTuple):
    x1u: float
    x2u: float
    grad0_norm: float
    n0: tuple
    e1: tuple
    is_characteristic: bool


def _frame_first(grad, x):
    u1, u2, u3 = grad
    p = u1 + 2 * x[1] * u3
    q = u2 - 2 * x[0] * u3
    return p, q, u3


def _frame_second(grad, hess, x):
    """Frame derivatives of (X1u, X2u, X3u); returns the six values
    (X1p, X2p, X1q, X2q, X1t, X2t) for p = X1u, q = X2u, t = X3u."""
    x1, x2 = x[0], x[1]
    (u11, u12, u13), (_, u22, u23), (_, _, u33) = hess
    _, _, u3 = grad
    x1p = u11 + 4 * x2 * u13 + 4 * x2 * x2 * u33
    x2p = u12 + 2 * u3 + 2 * x2 * u23 - 2 * x1 * (u13 + 2 * x2 * u33)
    x1q = u12 - 2 * u3 - 2 * x1 * u13 + 2 * x2 * (u23 - 2 * x1 * u33)
    x2q = u22 - 4 * x1 * u23 + 4 * x1 * x1 * u33
    x1t = u13 + 2 * x2 * u33
    x2t = u23 - 2 * x1 * u33
    return x1p, x2p, x1q, x2q, x1t, x2t


def horizontal_data(u, x, tol: float = CHAR_TOL) -> HorizontalData:
    """First-order horizontal data of {u = 0} at x."""
    grad = u.gradient(x)
    full = math.sqrt(sum(float(g) ** 2 for g in grad))
    if full == 0.0:
        raise ValueError("singular point: the full gradient of u vanishes")
    p, q, _ = _frame_first(grad, x)
    g0 = math.hypot(p, q)
    char = g0 <= tol * (1.0 + full)
    if char:
        n0 = e1 = (float("nan"), float("nan"))
    else:
        n0 = (p / g0, q / g0)
        e1 = (-q / g0, p / g0)
    return HorizontalData(p, q, g0, n0, e1, char)


def _require_noncharacteristic(u, x, tol):
    data = horizontal_data(u, x, tol)
    if data.is_characteristic:
        raise CharacteristicPointError(f"characteristic point at {tuple(x)}")
    return data


def mean_curvature(u, x, tol: float = CHAR_TOL) -> float:
    """Horizontal mean curvature of {u = 0} at a noncharacteristic x."""
    d = _require_noncharacteristic(u, x, tol)
    p, q, g0 = d.x1u, d.x2u, d.grad0_norm
    x1p, x2p, x1q, x2q, _, _ = _frame_second(u.gradient(x), u.hessian(x), x)
    return (q * q * x1p - p * q * (x1q + x2p) + p * p * x2q) / g0**3


def imaginary_curvature(u, x, tol: float = CHAR_TOL) -> float:
    """Curvature of the metric normal: 4 X3u / |grad0 u|."""
    d = _require_noncharacteristic(u, x, tol)
    return 4.0 * u.gradient(x)[2] / d.grad0_norm


def e1_of_imaginary_curvature(u, x, tol: float = CHAR_TOL) -> float:
    """Derivative of the imaginary curvature along the characteristic
    direction."""
    d = _require_noncharacteristic(u, x, tol)
    p, q, g0 = d.x1u, d.x2u, d.grad0_norm
    t = u.gradient(x)[2]
    x1p, x2p, x1q, x2q, x1t, x2t = _frame_second(u.gradient(x), u.hessian(x), x)
    x1g0 = (p * x1p + q * x1q) / g0
    x2g0 = (p * x2p + q * x2q) / g0
    x1P = 4.0 * x1t / g0 - 4.0 * t * x1g0 / g0**2
    x2P = 4.0 * x2t / g0 - 4.0 * t * x2g0 / g0**2
    return (p * x2P - q * x1P) / g0


def pde_residual(u, x, tol: float = CHAR_TOL) -> float:
    """Structure PDE residual H^2 + (3/2) P^2 + 4 e1(P); sign-independent."""
    h = mean_curvature(u, x, tol)
    pp = imaginary_curvature(u, x, tol)
    return h * h + 1.5 * pp * pp + 4.0 * e1_of_imaginary_curvature(u, x, tol)


# ------------------------------------------------------------------ quadrics
_J = np.array([[0.0, 1.0], [-1.0, 0.0]])


def quadric_M(s_matrix, z) -> float:
    """Flatness quantity of the quadric graph x3 = <z, S z> at planar z.

    Proportional to the structure PDE residual on the surface; blows up
    exactly on the characteristic locus (S - J) z = 0.
    """
    s = np.asarray(s_matrix, dtype=float)
    z = np.asarray(z, dtype=float)
    w = (s - _J) @ z
    norm = float(np.hypot(w[0], w[1]))
    if norm <= 1e-14 * (1.0 + float(np.abs(z).max(initial=0.0))):
        raise CharacteristicPointError("characteristic locus of the quadric")
    n = w / norm
    jn = _J @ n
    a = float(jn @ (s @ jn))
    b = float(jn @ (s @ n))
    return (a * a - 2.0 - 8.0 * b) / norm**2


class QuadricFlatness(NamedTuple):
    coefficients: tuple
    collapsed: float | None
    vanishes_identically: bool


def quadric_flat_test(l1, l2, tol: float = 1e-12) -> QuadricFlatness:
    """Coefficients of the cleared flatness quartic for a diagonal quadric.

    For eigenvalues (l1, l2) the quartic in the transformed coordinates has
    coefficients (l1^2 - 2, l2^2 - 2, 2 l1 l2 - 4, 8 (l2 - l1)).  When
    l1 l2 = -1 the quartic collapses to a single multiple of
    -10 (1 + l1^2)^2, which never vanishes.  Exact inputs give exact
    coefficients; the vanishing decision uses ``tol`` so float eigenvalues
    such as sqrt(2) behave as expected.
    """
    coeffs = (l1 * l1 - 2, l2 * l2 - 2, 2 * l1 * l2 - 4, 8 * (l2 - l1))
    scale = 1.0 + float(l1) ** 2 + float(l2) ** 2
    if abs(float(l1 * l2 + 1)) <= tol * scale:
        collapsed = (
            l1**2
            - 2
            + l1**4 * (l2**2 - 2)
            - 6 * l1**2
            + 8 * (l2 - l1) * l1 * (1 + l1**2)
        )
        return QuadricFlatness(coeffs, collapsed, abs(float(collapsed)) <= tol * scale)
    return QuadricFlatness(
        coeffs, None, all(abs(float(c)) <= tol * scale for c in coeffs)
    )


# ------------------------------------------------------------ graph surfaces
class GraphSurface:
    """Normalized local graph x1 = phi(x2, x3) through the origin.

    ``phi`` is a bivariate polynomial, coefficients indexed by (i, j) for
    eta1^i eta2^j, with phi(0) = 0 and d(phi)/d(eta1)(0) = 0.  Evaluation
    vectorizes over numpy arrays.
    """

    def __init__(self, phi: dict):
        self.phi_coeffs = {tuple(k): float(v) for k, v in phi.items() if float(v) != 0.0}
        if self.phi_coeffs.get((0, 0), 0.0) != 0.0 or self.phi_coeffs.get((1, 0), 0.0) != 0.0:
            raise ValueError("graph must satisfy phi(0) = 0 and phi_1(0) = 0")
        self._d1 = {
            (i - 1, j): i * c for (i, j), c in self.phi_coeffs.items() if i > 0
        }
        self._d2 = {
            (i, j - 1): j * c for (i, j), c in self.phi_coeffs.items() if j > 0
        }

    @staticmethod
    def _eval(poly, e1, e2):
        acc = 0.0
        for (i, j), c in poly.items():
            acc = acc + c * e1**i * e2**j
        return acc

    def phi(self, e1, e2):
        return self._eval(self.phi_coeffs, e1, e2)

    def phi_1(self, e1, e2):
        return self._eval(self._d1, e1, e2)

    def phi_2(self, e1, e2):
        return self._eval(self._d2, e1, e2)

    def partials_at_origin(self):
        """(phi_2, phi_11, phi_12) at the origin."""
        c = self.phi_coeffs
        return c.get((0, 1), 0.0), 2 * c.get((2, 0), 0.0), c.get((1, 1), 0.0)

    def density(self, e1, e2):
        """Area density sqrt((phi_1 - 2 phi phi_2)^2 + (1 - 2 eta1 phi_2)^2)."""
        f = self.phi(e1, e2)
        f1 = self.phi_1(e1, e2)
        f2 = self.phi_2(e1, e2)
        return np.sqrt((f1 - 2 * f * f2) ** 2 + (1 - 2 * e1 * f2) ** 2)

    def as_level_surface(self) -> PolynomialSurface:
        mono = {(0, i, j): -c for (i, j), c in self.phi_coeffs.items()}
        mono[(1, 0, 0)] = mono.get((1, 0, 0), 0.0) + 1.0
        return PolynomialSurface(mono)


class ImplicitGraphSurface:
    """Graph produced by normalizing a level surface at a point.

    The surface is moved to the origin by a left translation and rotated so
    the horizontal tangent line is the second coordinate axis; the graph
    function is then evaluated by Newton iteration on the transported
    defining function, and its low-order partials come from exact implicit
    differentiation (independently of the curvature formulas).
    """

    def __init__(self, u, x, theta: float):
        self.u = u
        self.x = HPoint(*[float(v) for v in x])
        self.theta = float(theta)
        c, s = math.cos(self.theta), math.sin(self.theta)
        x1, x2, x3 = self.x
        # Affine map T(y) = x * R_theta(y); constant Jacobian.
        self._jac = np.array(
            [
                [c, -s, 0.0],
                [s, c, 0.0],
                [-2 * x1 * s + 2 * x2 * c, -2 * x2 * s - 2 * x1 * c, 1.0],
            ]
        )

    def _map(self, y1, y2, y3):
        j = self._jac
        x1, x2, x3 = self.x
        return (
            x1 + j[0, 0] * y1 + j[0, 1] * y2,
            x2 + j[1, 0] * y1 + j[1, 1] * y2,
            x3 + j[2, 0] * y1 + j[2, 1] * y2 + y3,
        )

    def _tilde_grad(self, y1, y2, y3):
        g = self.u.gradient(self._map(y1, y2, y3))
        j = self._jac
        return (
            g[0] * j[0, 0] + g[1] * j[1, 0] + g[2] * j[2, 0],
            g[0] * j[0, 1] + g[1] * j[1, 1] + g[2] * j[2, 1],
            g[2],
        )

    def _tilde_value(self, y1, y2, y3):
        return self.u.value(self._map(y1, y2, y3))

    def phi(self, e1, e2, maxiter: int = 60, rtol: float = 1e-14):
        """Solve u_tilde(phi, eta) = 0 by Newton from phi = 0."""
        e1 = np.asarray(e1, dtype=float)
        e2 = np.asarray(e2, dtype=float)
        y = np.zeros(np.broadcast(e1, e2).shape)
        scale = 1.0 + np.abs(e1) + np.abs(e2)
        for _ in range(maxiter):
            f = self._tilde_value(y, e1, e2)
            fp = self._tilde_grad(y, e1, e2)[0]
            step = f / fp
            y = y - step
            if np.all(np.abs(step) <= rtol * scale):
                break
        else:
            raise NewtonDivergenceError(
                "graph solve did not converge; shrink the patch radius"
            )
        return y if y.shape else float(y)

    def phi_1(self, e1, e2):
        y = self.phi(e1, e2)
        g = self._tilde_grad(y, e1, e2)
        return -g[1] / g[0]

    def phi_2(self, e1, e2):
        y = self.phi(e1, e2)
        g = self._tilde_grad(y, e1, e2)
        return -g[2] / g[0]

    def density(self, e1, e2):
        f = self.phi(e1, e2)
        g = self._tilde_grad(f, e1, e2)
        f1, f2 = -g[1] / g[0], -g[2] / g[0]
        return np.sqrt((f1 - 2 * f * f2) ** 2 + (1 - 2 * e1 * f2) ** 2)

    def partials_at_origin(self):
        """(phi_2, phi_11, phi_12) at 0 by implicit differentiation.

        With phi_1(0) = 0 built in by the choice of rotation:
        phi_2 = -u3/u1, phi_11 = -u22/u1, phi_12 = -(u12 phi_2 + u23)/u1,
        all partials of the transported defining function at the origin.
        """
        j = self._jac
        g = np.asarray(self.u.gradient(self.x), dtype=float)
        h = np.asarray(self.u.hessian(self.x), dtype=float)
        tg = j.T @ g
        th = j.T @ h @ j
        phi2 = -tg[2] / tg[0]
        phi11 = -th[1, 1] / tg[0]
        phi12 = -(th[0, 1] * phi2 + th[1, 2]) / tg[0]
        return float(phi2), float(phi11), float(phi12)


def graph_quintic_quantity(g) -> float:
    """The r^5 curvature combination phi_11^2 - 16 phi_12 - 8 phi_2^2.

    Multiplied by :func:`surface_expansion_beta1` this is the r^5
    coefficient of the small-ball measure of the graph.
    """
    phi2, phi11, phi12 = g.partials_at_origin()
    return phi11 * phi11 - 16.0 * phi12 - 8.0 * phi2 * phi2


def normalize_at_point(u, x, tol: float = CHAR_TOL) -> ImplicitGraphSurface:
    """Local normalized graph of {u = 0} at a noncharacteristic point x."""
    gscale = math.sqrt(sum(float(g) ** 2 for g in u.gradient(x)))
    if abs(u.value(x)) > 1e-9 * (1.0 + gscale):
        raise ValueError("x does not lie on the surface")
    d = _require_noncharacteristic(u, x, tol)
    theta = math.atan2(d.x2u, d.x1u)
    return ImplicitGraphSurface(u, x, theta)


def surface_expansion_beta1() -> float:
    """Constant multiplying the quintic quantity in the graph expansion.

    Assembled from the three ball monomial integrals that appear when the
    polar expansion is integrated over the sphere; the combination
    collapses to a single multiple of the quintic quantity, and the
    multiple equals gamma(3/4)^2 / (5 sqrt(2 pi)).
    """
    from .koranyi import monomial_ball_integral

    i20 = monomial_ball_integral(1, 0)
    i22 = monomial_ball_integral(1, 1)
    i60 = monomial_ball_integral(3, 0)
    # Coefficients of (a2^2, a11^2, a12) in the sphere-integrated quintic
    # term, re-expressed against (phi2^2, phi11^2, phi12):
    beta_from_a12 = 2.0 * i20 / 16.0
    beta_from_a2 = 4.5 * i22 / 8.0
    beta_from_a11 = (2.0 * i20 - 4.5 * i60) / 4.0
    if abs(beta_from_a12 - beta_from_a2) > 1e-13 or abs(
        beta_from_a12 - beta_from_a11
    ) > 1e-13:
        raise ArithmeticError("quintic-term integrals are inconsistent")
    return beta_from_a12


def load_surface(spec: dict):
    """Build a surface from its JSON description.

    Supported forms: {"type": "level-poly", "u": [[i, j, k, c], ...]},
    {"type": "quadric", "S": [[a, b], [b, d]]},
    {"type": "paraboloid", "alpha": t},
    {"type": "graph", "phi": [[i, j, c], ...]}.
    """
    try:
        kind = spec["type"]
        if kind == "level-poly":
            return PolynomialSurface({(i, j, k): c for i, j, k, c in spec["u"]})
        if kind == "quadric":
            return quadric_surface(spec["S"])
        if kind == "paraboloid":
            return paraboloid_surface(float(spec["alpha"]))
        if kind == "graph":
            return GraphSurface({(i, j): c for i, j, c in spec["phi"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad surface spec: {exc}") from exc
    raise ValueError(f"unknown surface type {kind!r}")

"""Planar Koranyi-type norm, its polar decomposition, and monomial integrals.

The planar norm is ``nu(eta) = (eta1^4 + eta2^2)^(1/4)`` with anisotropic
dilations (t eta1, t^2 eta2).  Integration over the plane splits into a
radial part against t^2 dt and a measure on the unit sphere {nu = 1} with
density ``(eta1^6 + eta2^2/4)^(-1/2)`` against arclength.  This module
builds quadrature nodes for that sphere measure, evaluates monomial
integrals over the unit ball in closed Gamma form, and cross-checks both
against direct 2D quadrature.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy import integrate
from scipy.special import roots_jacobi

DEFAULT_SPHERE_NODES = 256  # per arc; the sphere has four symmetric arcs


def gamma_fn(x: float) -> float:
    """Gamma function on the positive axis (Lanczos-class accuracy)."""
    if x <= 0:
        raise ValueError(f"gamma_fn needs a positive argument, got {x!r}")
    return math.gamma(x)


def nu_K(eta1, eta2):
    """Planar Koranyi-type norm (eta1^4 + eta2^2)^(1/4)."""
    return (eta1**4 + eta2**2) ** 0.25


def aniso_dilate(eta, t):
    """Anisotropic planar dilation (t eta1, t^2 eta2); t must be positive."""
    if t <= 0:
        raise ValueError(f"dilation factor must be positive, got {t!r}")
    return (t * eta[0], t * t * eta[1])


def omega_h() -> float:
    """Area of the unit ball of the planar norm."""
    return monomial_ball_integral(0, 0)


def monomial_ball_integral(a: int, b: int) -> float:
    """Closed form of the ball integral of eta1^(2a) * eta2^(2b).

    Arguments are the half-exponents; use :func:`ball_monomial_integral`
    for raw exponents (odd ones integrate to zero by symmetry).
    """
    if a < 0 or b < 0:
        raise ValueError("half-exponents must be nonnegative integers")
    return gamma_fn(a / 2 + 0.25) * gamma_fn(b + 0.5) / (2 * gamma_fn(b + a / 2 + 1.75))


def ball_monomial_integral(p: int, q: int) -> float:
    """Ball integral of eta1^p * eta2^q for raw nonnegative exponents."""
    if p < 0 or q < 0:
        raise ValueError("exponents must be nonnegative integers")
    if p % 2 or q % 2:
        return 0.0
    return monomial_ball_integral(p // 2, q // 2)


@lru_cache(maxsize=8)
def sphere_nodes(n: int = DEFAULT_SPHERE_NODES):
    """Quadrature nodes and weights for the sphere measure.

    Returns arrays (xi1, xi2, w) of length 4n covering the four arcs.  On
    one quadrant the measure pulls back to

        integral_0^1 f(sqrt(v), sqrt(1-v^2)) v^(-1/2) (1-v)^(-1/2) (1+v)^(-1/2) dv

    via the substitution v = xi1^2, so Gauss-Jacobi nodes with the
    (-1/2, -1/2) endpoint weights integrate the symmetrized integrand with
    spectral accuracy; the leftover (1+v)^(-1/2) is folded into the weight.
    """
    x, w = roots_jacobi(n, -0.5, -0.5)
    v = 0.5 * (x + 1.0)
    base_w = w / np.sqrt(1.0 + v)
    xi1 = np.sqrt(v)
    xi2 = np.sqrt(1.0 - v * v)
    ones = np.ones_like(v)
    s1 = np.concatenate([ones, -ones, ones, -ones])
    s2 = np.concatenate([ones, ones, -ones, -ones])
    xi1_all = np.tile(xi1, 4) * s1
    xi2_all = np.tile(xi2, 4) * s2
    w_all = np.tile(base_w, 4)
    return xi1_all, xi2_all, w_all


def sphere_integral(h, n: int = DEFAULT_SPHERE_NODES) -> float:
    """Integral of h over the unit sphere against the polar measure.

    ``h`` must accept numpy arrays (xi1, xi2).  Values must be finite at
    every node.
    """
    xi1, xi2, w = sphere_nodes(n)
    vals = np.asarray(h(xi1, xi2), dtype=float)
    if vals.shape != xi1.shape:
        vals = np.broadcast_to(vals, xi1.shape)
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand is not finite at the sphere nodes")
    return float(np.dot(w, vals))


def ball_integral(h, tol: float = 1e-10) -> float:
    """Adaptive 2D quadrature of h over the unit ball {nu <= 1}."""
    top = lambda e1: math.sqrt(max(1.0 - e1**4, 0.0))
    val, err = integrate.dblquad(
        lambda e2, e1: h(e1, e2),
        -1.0,
        1.0,
        lambda e1: -top(e1),
        top,
        epsabs=tol,
        epsrel=tol,
    )
    if not math.isfinite(val) or err > max(1e3 * tol, 1e-6 * abs(val)):
        raise ArithmeticError(f"ball quadrature did not converge (err={err:g})")
    return val


def polar_identity_check(h, d: int, n: int = DEFAULT_SPHERE_NODES):
    """Compare the sphere integral of h with (d+3) times its ball integral.

    ``d`` is the weighted degree of h under the anisotropic dilations; a
    spot dilation test rejects non-homogeneous integrands.
    """
    e1, e2, t = 0.7, 0.4, 1.3
    hom = h(t * e1, t * t * e2)
    expect = t**d * h(e1, e2)
    if abs(hom - expect) > 1e-8 * (1.0 + abs(expect)):
        raise ValueError(f"integrand is not weighted-homogeneous of degree {d}")
    lhs = sphere_integral(h, n)
    rhs = (d + 3) * ball_integral(h)
    rel = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
    return lhs, rhs, rel

"""Heisenberg group primitives.

The group is R^3 with the noncommutative product

    (x1, x2, x3) * (y1, y2, y3) = (x1+y1, x2+y2, x3+y3 - 2 x1 y2 + 2 x2 y1),

carrying the anisotropic dilations (r x1, r x2, r^2 x3) and the Koranyi
norm ``|x|^4 = (x1^2 + x2^2)^2 + x3^2``.  All operations here are pure
functions over immutable values and accept any numeric coordinate type
(exact rationals included), except for the norm/distance which take a
fourth root and therefore return floats.
"""

from __future__ import annotations

import math
from typing import NamedTuple

# Absolute tolerance for origin/identity comparisons.
ABS_TOL = 1e-12


class HPoint(NamedTuple):
    x1: float
    x2: float
    x3: float


class FrameCoords(NamedTuple):
    """Coefficients of a tangent vector in the left-invariant frame.

    c3 is the value of the contact form; horizontal vectors have c3 == 0.
    """

    c1: float
    c2: float
    c3: float


ORIGIN = HPoint(0, 0, 0)


def group_mul(p, q) -> HPoint:
    """Group product p * q."""
    p1, p2, p3 = p
    q1, q2, q3 = q
    return HPoint(p1 + q1, p2 + q2, p3 + q3 - 2 * p1 * q2 + 2 * p2 * q1)


def group_inv(p) -> HPoint:
    """Group inverse; coordinatewise negation."""
    return HPoint(-p[0], -p[1], -p[2])


def dilate(p, r) -> HPoint:
    """Anisotropic dilation with weights (1, 1, 2); r must be positive."""
    if r <= 0:
        raise ValueError(f"dilation factor must be positive, got {r!r}")
    return HPoint(r * p[0], r * p[1], r * r * p[2])


def koranyi_norm(p) -> float:
    """Homogeneous norm ((x1^2 + x2^2)^2 + x3^2)^(1/4)."""
    w = p[0] * p[0] + p[1] * p[1]
    return float(w * w + p[2] * p[2]) ** 0.25


def koranyi_dist(p, q) -> float:
    """Left-invariant distance |p^-1 * q|."""
    return koranyi_norm(group_mul(group_inv(p), q))


def rotate(p, theta: float) -> HPoint:
    """Rotation about the x3-axis; a group automorphism and an isometry."""
    c, s = math.cos(theta), math.sin(theta)
    return HPoint(c * p[0] - s * p[1], s * p[0] + c * p[1], p[2])


def contact_form(base, v) -> float:
    """Value of the contact form at ``base`` on the ambient vector ``v``."""
    return v[2] + 2 * base[0] * v[1] - 2 * base[1] * v[0]


def frame_decompose(base, v) -> FrameCoords:
    """Write an ambient tangent vector at ``base`` in the invariant frame.

    The first two frame fields project to the coordinate directions, so
    c1, c2 are just the first two components of v; c3 is the contact form.
    """
    return FrameCoords(v[0], v[1], contact_form(base, v))


def j_apply(c1, c2):
    """Rotation by 90 degrees in the horizontal plane: (c1, c2) -> (-c2, c1)."""
    return (-c2, c1)


def horizontal_length(coords: FrameCoords) -> float:
    return math.sqrt(coords.c1 * coords.c1 + coords.c2 * coords.c2)


def is_origin(p, tol: float = ABS_TOL) -> bool:
    return max(abs(p[0]), abs(p[1]), abs(p[2])) <= tol

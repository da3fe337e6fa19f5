"""Shared helpers for the test suite."""

import math
import random
from fractions import Fraction as Q

from heiskit.jets import Jet
from heiskit import curves as cv


def rational(rng, lo=-3, hi=3, den=4):
    return Q(rng.randint(lo, hi), rng.randint(1, den))


def rational_jet(rng, order, nonzero_linear=False):
    coeffs = [rational(rng) for _ in range(order + 1)]
    if nonzero_linear:
        coeffs[0] = Q(0)
        coeffs[1] = rational(rng, 1, 3)
    return Jet(coeffs, order)


def homogeneous_curve(rng, order=18):
    """Random contact-normalized curve with rational sixth-order data."""
    a = [rational(rng) for _ in range(6)]
    b = [rational(rng) for _ in range(6)]
    x1 = Jet([Q(0)] + [v / math.factorial(m + 1) for m, v in enumerate(a)], order)
    x2 = Jet([Q(0)] + [v / math.factorial(m + 1) for m, v in enumerate(b)], order)
    return cv.vertical_completion(cv.PlanarJet(x1, x2)), a, b


def unit_speed_horizontal_curve(rng, order=16):
    """Random horizontal curve at exact unit planar speed."""
    k = Jet([rational(rng) for _ in range(7)], order)
    planar = cv.curve_from_speed_curvature(Jet([Q(1)], order), k)
    return cv.horizontal_lift(planar), k


def make_rng(seed):
    return random.Random(seed)

import math
import random

import pytest

from heiskit import core
from heiskit.core import HPoint, ORIGIN


def rand_point(rng, scale=2.0):
    return HPoint(*(rng.uniform(-scale, scale) for _ in range(3)))


def test_group_mul_identity_and_example():
    assert core.group_mul(ORIGIN, HPoint(3, -1, 2)) == HPoint(3, -1, 2)
    assert core.group_mul(HPoint(1, 0, 0), HPoint(0, 1, 0)) == HPoint(1, 1, -2)


def test_group_inverse():
    assert core.group_inv(ORIGIN) == ORIGIN
    assert core.group_inv(HPoint(1, 2, 3)) == HPoint(-1, -2, -3)
    rng = random.Random(0)
    for _ in range(50):
        p = rand_point(rng)
        assert core.is_origin(core.group_mul(p, core.group_inv(p)))
        q = core.group_inv(core.group_inv(p))
        assert max(abs(a - b) for a, b in zip(p, q)) == 0


def test_dilate():
    p = HPoint(1, 0, 1)
    assert core.dilate(p, 1) == p
    assert core.dilate(p, 2) == HPoint(2, 0, 4)
    rng = random.Random(1)
    for _ in range(50):
        p, r = rand_point(rng), rng.uniform(0.1, 5)
        assert core.koranyi_norm(core.dilate(p, r)) == pytest.approx(
            r * core.koranyi_norm(p), rel=1e-13
        )
    with pytest.raises(ValueError):
        core.dilate(p, 0)
    with pytest.raises(ValueError):
        core.dilate(p, -1)


def test_norm_values():
    assert core.koranyi_norm(HPoint(1, 0, 0)) == 1.0
    assert core.koranyi_norm(HPoint(0, 0, 1)) == 1.0
    assert core.koranyi_dist(HPoint(-1, 0, 0), HPoint(0, 1, 0)) == pytest.approx(
        8**0.25, rel=1e-15
    )


def test_corner_distance_quartic_and_strict_inequality():
    rng = random.Random(2)
    for _ in range(200):
        d1, d2 = rng.uniform(0.1, 2), rng.uniform(0.1, 2)
        th = rng.uniform(1e-3, 2 * math.pi - 1e-3)
        y = HPoint(-d1, 0, 0)
        z = HPoint(d2 * math.cos(th), d2 * math.sin(th), 0)
        quartic = (
            d1**4
            + 4 * d1**3 * d2 * math.cos(th)
            + 6 * d1**2 * d2**2
            + 4 * d1 * d2**3 * math.cos(th)
            + d2**4
        )
        d = core.koranyi_dist(y, z)
        assert d**4 == pytest.approx(quartic, rel=1e-12)
        assert d < d1 + d2


def test_rotation():
    got = core.rotate(HPoint(1, 0, 5), math.pi / 2)
    assert got.x1 == pytest.approx(0, abs=1e-15)
    assert got.x2 == pytest.approx(1)
    assert got.x3 == 5
    rng = random.Random(3)
    for _ in range(100):
        p, q = rand_point(rng), rand_point(rng)
        th = rng.uniform(0, 2 * math.pi)
        assert core.koranyi_norm(core.rotate(p, th)) == pytest.approx(
            core.koranyi_norm(p), rel=1e-13, abs=1e-14
        )
        lhs = core.rotate(core.group_mul(p, q), th)
        rhs = core.group_mul(core.rotate(p, th), core.rotate(q, th))
        assert max(abs(a - b) for a, b in zip(lhs, rhs)) < 1e-12


def test_left_invariance_and_dilation_covariance():
    rng = random.Random(4)
    for _ in range(200):
        a, p, q = rand_point(rng), rand_point(rng), rand_point(rng)
        d0 = core.koranyi_dist(p, q)
        assert core.koranyi_dist(
            core.group_mul(a, p), core.group_mul(a, q)
        ) == pytest.approx(d0, rel=1e-12, abs=1e-14)
        r = rng.uniform(0.1, 3)
        assert core.koranyi_dist(
            core.dilate(p, r), core.dilate(q, r)
        ) == pytest.approx(r * d0, rel=1e-12, abs=1e-14)


def test_frame_decompose():
    assert core.frame_decompose(ORIGIN, (0, 0, 1)) == (0, 0, 1)
    assert core.frame_decompose(HPoint(1, 0, 0), (0, 1, 0)) == (0, 1, 2)
    for x2 in (-1.5, 0.25, 3.0):
        got = core.frame_decompose(HPoint(0, x2, 0), (1, 0, 0))
        assert got == (1, 0, -2 * x2)


def test_contact_form_left_invariance():
    rng = random.Random(5)
    for _ in range(100):
        a, p = rand_point(rng), rand_point(rng)
        v = tuple(rng.uniform(-2, 2) for _ in range(3))
        before = core.frame_decompose(p, v)
        moved = (v[0], v[1], v[2] + 2 * a.x2 * v[0] - 2 * a.x1 * v[1])
        after = core.frame_decompose(core.group_mul(a, p), moved)
        assert max(abs(x - y) for x, y in zip(before, after)) < 1e-12


def test_j_apply():
    assert core.j_apply(1, 0) == (0, 1)
    assert core.j_apply(0, 1) == (-1, 0)
    c1, c2 = 0.3, -0.7
    assert core.j_apply(*core.j_apply(c1, c2)) == (-c1, -c2)


def test_horizontal_length():
    fc = core.FrameCoords(3.0, 4.0, 0.0)
    assert core.horizontal_length(fc) == 5.0

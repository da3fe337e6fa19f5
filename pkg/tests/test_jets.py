from fractions import Fraction as Q

import pytest

from conftest import make_rng, rational_jet
from heiskit.jets import (
    Jet,
    revert,
    solve_norm_equation,
    symbol_weight,
    weighted_degree,
)


def test_ring_arithmetic():
    s = Jet.variable(6)
    assert ((1 + s) * (1 - s)).c[:3] == (1, 0, -1)
    assert ((1 + s) * (1 - s)).c[3:] == (0, 0, 0, 0)
    assert (s + 2).c[0] == 2
    assert (3 * s).c[1] == 3
    assert (s**3).c[3] == 1


def test_sqrt_binomial_series():
    u = Jet.variable(5)
    got = (1 + u).sqrt()
    assert got.c[:4] == (1, Q(1, 2), Q(-1, 8), Q(1, 16))
    with pytest.raises(ValueError):
        Jet([0, 1], 4).sqrt()
    with pytest.raises(ValueError):
        Jet([Q(2), 1], 4).sqrt()  # no exact rational root
    assert Jet([2.0, 1.0], 4).sqrt().c[0] == pytest.approx(2**0.5)


def test_compose():
    s = Jet.variable(6)
    inner = s + s**3
    got = (s**2).compose(inner)
    assert got.c == (0, 0, 1, 0, 2, 0, 1)
    with pytest.raises(ValueError):
        (s**2).compose(1 + s)


def test_division_and_reciprocal():
    s = Jet.variable(5)
    f = 1 + s
    assert (f / f).c == (1, 0, 0, 0, 0, 0)
    geom = (1 / f).c
    assert geom == (1, -1, 1, -1, 1, -1)
    with pytest.raises(ZeroDivisionError):
        1 / s


def test_deriv_integ_eval():
    f = Jet([Q(1), Q(1), Q(1, 2), Q(1, 6)], 3)
    assert f.deriv().c == (1, 1, Q(1, 2))
    assert f.deriv().integ(1) == f
    assert f(Q(1, 2)) == 1 + Q(1, 2) + Q(1, 8) + Q(1, 48)


def test_reversion_examples():
    s = Jet.variable(8)
    assert revert(s).c[:2] == (0, 1)
    got = revert(s + s**2)
    # alternating Catalan numbers, frozen from the enumeration
    # 1, -1, 2, -5, 14, -42, 132
    assert got.c[:8] == (0, 1, -1, 2, -5, 14, -42, 132)
    with pytest.raises(ValueError):
        revert(1 + s)
    with pytest.raises(ValueError):
        revert(s**2)


def test_reversion_roundtrip_random():
    rng = make_rng(10)
    idm = None
    for _ in range(20):
        order = rng.randint(4, 16)
        f = rational_jet(rng, order, nonzero_linear=True)
        g = revert(f)
        idm = Jet.variable(order)
        assert f.compose(g) == idm
        assert g.compose(f) == idm


def test_solve_norm_equation_quartic_branch():
    s = Jet.variable(10)
    assert solve_norm_equation(s**4, 4, 1).c[:2] == (0, 1)
    # horizontal-curve profile s^4 - (1/18) b^2 s^6 inverts to
    # r + (1/72) b^2 r^3 + ...
    for b in (Q(1), Q(3, 2), Q(-2)):
        F = s**4 - Q(1, 18) * b * b * s**6
        plus = solve_norm_equation(F, 4, 1)
        assert plus.c[1] == 1
        assert plus.c[3] == Q(1, 72) * b * b
        minus = solve_norm_equation(F, 4, -1)
        assert minus.c[1] == -1
        assert minus.c[3] == -Q(1, 72) * b * b


def test_solve_norm_equation_quadratic_branch():
    s = Jet.variable(16)
    # the curve (s, 0, s): quadratic-in-s^2 solve plus a square root gives
    # r^2 - r^6/2 + (7/8) r^10 - (33/16) r^14
    F = s**4 + s**2
    plus = solve_norm_equation(F, 2, 1)
    assert (plus.c[2], plus.c[6], plus.c[10], plus.c[14]) == (
        1,
        Q(-1, 2),
        Q(7, 8),
        Q(-33, 16),
    )
    minus = solve_norm_equation(F, 2, -1)
    assert (minus.c[2], minus.c[6]) == (-1, Q(1, 2))


def test_solve_norm_equation_errors():
    s = Jet.variable(8)
    with pytest.raises(ValueError):
        solve_norm_equation(s**3, 3, 1)
    with pytest.raises(ValueError):
        solve_norm_equation(-(s**4), 4, 1)
    with pytest.raises(ValueError):
        solve_norm_equation(1 + s**4, 4, 1)


def test_shift_and_truncate():
    s = Jet.variable(6)
    f = s**2 + s**4
    assert f.shift_down(2).c[:3] == (1, 0, 1)
    with pytest.raises(ValueError):
        (1 + f).shift_down(2)
    assert f.truncate(3).order == 3


def test_weighted_degrees():
    assert symbol_weight(("g", 1, 1)) == 2
    assert symbol_weight(("w", 1, 2)) == 4
    mono = ((("g", 1, 1), 2), (("w", 1, 2), 1))
    assert weighted_degree(mono) == 8
    with pytest.raises(ValueError):
        symbol_weight(("g", 0, 1))


def test_exact_mode_flag():
    assert Jet([Q(1), 2], 3).is_exact()
    assert not Jet([1.0, 2], 3).is_exact()

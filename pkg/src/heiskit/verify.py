"""Named invariant suites behind the ``verify`` CLI command.

Each suite returns a list of (name, passed, detail) results; a suite fails
when any invariant in it fails.  The checks here are deliberately seeded
and moderately sized so a full run stays interactive; the pytest
acceptance module runs the heavyweight versions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction as Q

import numpy as np

from . import core, curves, jets, koranyi, measure, surfaces


@dataclass
class InvariantResult:
    name: str
    passed: bool
    detail: str = ""


def _res(name, passed, detail=""):
    return InvariantResult(name, bool(passed), detail)


def _rand_point(rng, scale=2.0):
    return core.HPoint(
        rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)
    )


def _rq(rng, lo=-3, hi=3, den=4):
    return Q(rng.randint(lo, hi), rng.randint(1, den))


# ------------------------------------------------------------------- frame
def suite_frame(seed: int = 0):
    rng = random.Random(seed)
    out = []

    worst = 0.0
    for _ in range(1000):
        p = _rand_point(rng)
        worst = max(worst, core.koranyi_norm(core.group_mul(p, core.group_inv(p))))
    out.append(_res("group-inverse-identity", worst <= 1e-12, f"worst={worst:.2e}"))

    worst = 0.0
    for _ in range(1000):
        a, p, q = _rand_point(rng), _rand_point(rng), _rand_point(rng)
        d0 = core.koranyi_dist(p, q)
        d1 = core.koranyi_dist(core.group_mul(a, p), core.group_mul(a, q))
        worst = max(worst, abs(d0 - d1) / max(d0, 1e-15))
    out.append(_res("left-invariance", worst <= 1e-12, f"worst rel={worst:.2e}"))

    worst = 0.0
    for _ in range(1000):
        p, q = _rand_point(rng), _rand_point(rng)
        r = rng.uniform(0.1, 3.0)
        d0 = core.koranyi_dist(core.dilate(p, r), core.dilate(q, r))
        worst = max(worst, abs(d0 - r * core.koranyi_dist(p, q)) / max(d0, 1e-15))
    out.append(_res("dilation-covariance", worst <= 1e-12, f"worst rel={worst:.2e}"))

    worst_iso = worst_hom = 0.0
    for _ in range(1000):
        p, q = _rand_point(rng), _rand_point(rng)
        th = rng.uniform(0, 2 * math.pi)
        worst_iso = max(
            worst_iso,
            abs(core.koranyi_norm(core.rotate(p, th)) - core.koranyi_norm(p)),
        )
        lhs = core.rotate(core.group_mul(p, q), th)
        rhs = core.group_mul(core.rotate(p, th), core.rotate(q, th))
        worst_hom = max(worst_hom, max(abs(a - b) for a, b in zip(lhs, rhs)))
    out.append(_res("rotation-isometry", worst_iso <= 1e-12, f"worst={worst_iso:.2e}"))
    out.append(_res("rotation-homomorphism", worst_hom <= 1e-12, f"worst={worst_hom:.2e}"))

    worst = 0.0
    for _ in range(500):
        a, p = _rand_point(rng), _rand_point(rng)
        v = (rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        before = core.frame_decompose(p, v)
        moved = (v[0], v[1], v[2] + 2 * a.x2 * v[0] - 2 * a.x1 * v[1])
        after = core.frame_decompose(core.group_mul(a, p), moved)
        worst = max(worst, max(abs(x - y) for x, y in zip(before, after)))
    out.append(
        _res("contact-form-left-invariance", worst <= 1e-12, f"worst={worst:.2e}")
    )

    worst_formula, strict = 0.0, True
    for _ in range(1000):
        d1, d2 = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
        th = rng.uniform(1e-3, 2 * math.pi - 1e-3)
        y = core.HPoint(-d1, 0.0, 0.0)
        z = core.HPoint(d2 * math.cos(th), d2 * math.sin(th), 0.0)
        quartic = (
            d1**4
            + 4 * d1**3 * d2 * math.cos(th)
            + 6 * d1**2 * d2**2
            + 4 * d1 * d2**3 * math.cos(th)
            + d2**4
        )
        dist = core.koranyi_dist(y, z)
        worst_formula = max(worst_formula, abs(dist**4 - quartic) / max(quartic, 1e-12))
        strict = strict and dist < d1 + d2
    out.append(
        _res(
            "corner-distance",
            worst_formula <= 1e-10 and strict,
            f"formula rel={worst_formula:.2e}, strict={strict}",
        )
    )
    return out


# -------------------------------------------------------------------- jets
def suite_jets(seed: int = 0):
    rng = random.Random(seed + 1)
    out = []

    ok = True
    for _ in range(50):
        order = rng.randint(4, 16)
        f = jets.Jet(
            [Q(0), _rq(rng, 1, 3)] + [_rq(rng) for _ in range(order - 1)], order
        )
        g = jets.revert(f)
        idm = jets.Jet.variable(order)
        ok = ok and f.compose(g) == idm and g.compose(f) == idm
    out.append(_res("reversion-roundtrip", ok))

    ok = True
    for _ in range(50):
        order = rng.randint(4, 12)
        g = jets.Jet([_rq(rng, 1, 3)] + [_rq(rng) for _ in range(order)], order)
        f = g * g
        ok = ok and f.sqrt() ** 2 == f
    out.append(_res("sqrt-square", ok))

    degs = {1: 4, 2: 8, 3: 12}
    ok = True
    for m, want in degs.items():
        got = curves.table_weighted_degrees(m)
        ok = ok and all(d == want for d in got)
    out.append(_res("table-weighted-degrees", ok))
    return out


# ------------------------------------------------------------------ curves
def _random_planar(rng, order=10):
    x1 = jets.Jet([_rq(rng) for _ in range(order + 1)], order)
    x2 = jets.Jet([_rq(rng) for _ in range(order + 1)], order)
    return curves.PlanarJet(x1, x2)


def _random_homogeneous_curve(rng, order=18):
    import math as _m

    a = [_rq(rng) for _ in range(6)]
    b = [_rq(rng) for _ in range(6)]
    x1 = jets.Jet([Q(0)] + [ai / _m.factorial(m + 1) for m, ai in enumerate(a)], order)
    x2 = jets.Jet([Q(0)] + [bi / _m.factorial(m + 1) for m, bi in enumerate(b)], order)
    return curves.vertical_completion(curves.PlanarJet(x1, x2))


def suite_curves(seed: int = 0, n_curves: int = 8):
    rng = random.Random(seed + 2)
    out = []

    ok = True
    for _ in range(10):
        c = _random_planar(rng)
        for i, j in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]:
            gij = curves.g_jet(c, i, j)
            wij = curves.omega_jet(c, i, j)
            n = gij.order - 1
            dg = gij.deriv().truncate(n)
            sg = (curves.g_jet(c, i, j + 1) + curves.g_jet(c, i + 1, j)).truncate(n)
            dw = wij.deriv().truncate(n)
            sw = (
                curves.omega_jet(c, i, j + 1) + curves.omega_jet(c, i + 1, j)
            ).truncate(n)
            gii = curves.g_jet(c, i, i)
            gjj = curves.g_jet(c, j, j)
            m = min(gij.order, gii.order, gjj.order)
            ok = ok and dg == sg and dw == sw
            ok = ok and (gij * gij + wij * wij).truncate(m) == (gii * gjj).truncate(m)
        g12, w12 = curves.g_omega(c, 1, 2)
        g23, w23 = curves.g_omega(c, 2, 3)
        g13, _ = curves.g_omega(c, 1, 3)
        g22, _ = curves.g_omega(c, 2, 2)
        ok = ok and w12 * w23 == g12 * g23 - g13 * g22
        ok = ok and curves.g_omega(c, 2, 2)[1] == 0
    out.append(_res("g-omega-algebra", ok))

    ok = True
    for _ in range(10):
        a = [_rq(rng) for _ in range(6)]
        b = [_rq(rng) for _ in range(6)]
        import math as _m

        x1 = jets.Jet([Q(0)] + [v / _m.factorial(m + 1) for m, v in enumerate(a)], 12)
        x2 = jets.Jet([Q(0)] + [v / _m.factorial(m + 1) for m, v in enumerate(b)], 12)
        x3 = curves.vertical_completion(curves.PlanarJet(x1, x2)).x3
        a1, a2, a3, a4, a5, a6 = a
        b1, b2, b3, b4, b5, b6 = b
        want = {
            3: Q(1, 3) * (a2 * b1 - a1 * b2),
            4: Q(1, 6) * (a3 * b1 - a1 * b3),
            5: Q(1, 20) * (a4 * b1 - a1 * b4) + Q(1, 30) * (a3 * b2 - a2 * b3),
            6: Q(1, 90) * (a5 * b1 - a1 * b5) + Q(1, 72) * (a4 * b2 - a2 * b4),
            7: Q(1, 504) * (a6 * b1 - a1 * b6)
            + Q(1, 280) * (a5 * b2 - a2 * b5)
            + Q(1, 504) * (a4 * b3 - a3 * b4),
        }
        ok = ok and x3.c[1] == 1 and x3.c[2] == 0
        ok = ok and all(x3.c[m] == want[m] for m in range(3, 8))
    out.append(_res("vertical-completion-coeffs", ok))

    ok = True
    for _ in range(n_curves):
        k = jets.Jet([_rq(rng) for _ in range(7)], 16)
        curve = curves.horizontal_lift(
            curves.curve_from_speed_curvature(jets.Jet([Q(1)], 16), k)
        )
        series = curves.measure_series(curve)
        ok = (
            ok
            and series.c[1] == 2
            and series.c[3] == curves.horizontal_expansion_coeff(curve)
        )
    out.append(_res("horizontal-oracle-equivalence", ok))

    ok = True
    ratio_ok = True
    for _ in range(n_curves):
        curve = _random_homogeneous_curve(rng)
        series = curves.measure_series(curve)
        ok = (
            ok
            and series.c[2] == 2
            and series.c[6] == curves.nonhorizontal_expansion_coeff(curve, 1)
            and series.c[10] == curves.nonhorizontal_expansion_coeff(curve, 2)
            and series.c[14] == curves.nonhorizontal_expansion_coeff(curve, 3)
        )
        lit = curves.nonhorizontal_expansion_coeff(curve, 3, literal=True)
        if lit != 0:
            ratio_ok = ratio_ok and series.c[14] / lit == 2
    out.append(_res("nonhorizontal-oracle-equivalence", ok))
    out.append(_res("r14-normalization-ratio", ratio_ok, "oracle/table = 2"))

    ok = True
    for _ in range(max(4, n_curves // 2)):
        sigma = jets.Jet([abs(_rq(rng)) + 1] + [_rq(rng) for _ in range(6)], 8)
        ok = ok and all(r == 0 for r in curves.speed_identity_residuals(sigma))
    out.append(_res("speed-identities", ok))

    ok = True
    factors = set()
    for _ in range(8):
        s0 = abs(_rq(rng)) + 1
        s1 = _rq(rng)
        sig = curves.b2_constrained_speed(s0, s1, order=10)
        eq1, b2r, b3r, b4r = curves.speed_ode_residuals(sig)
        target = (s1 * s1 + Q(1, 4) * s0**6) ** 2
        ok = ok and eq1 == 0 and b2r == 0 and target != 0
        factors.add(Q(b3r) / target if target else None)
        ok = ok and b3r < 0 and b4r > 0
    ok = ok and factors == {Q(-3, 13)}
    out.append(
        _res(
            "ode-reduction",
            ok,
            "constrained fourth-order residual = -(3/13)(sdot^2 + s^6/4)^2",
        )
    )

    ok = True
    for _ in range(4):
        sigma = jets.Jet([abs(_rq(rng)) + 1] + [_rq(rng) for _ in range(6)], 10)
        curve = curves.vertical_completion(curves.eq1_curve(sigma))
        b2tab = curves.nonhorizontal_expansion_coeff(curve, 2)
        b3lit = curves.nonhorizontal_expansion_coeff(curve, 3, literal=True)
        _, b2ode, b3ode, _ = curves.speed_ode_residuals(sigma)
        s0 = sigma.c[0]
        ok = ok and 10 * b2tab == s0 * s0 * b2ode and Q(1120, 13) * b3lit == b3ode
    out.append(_res("table-ode-consistency", ok))
    return out


# ---------------------------------------------------------------- surfaces
class _NegatedSurface:
    def __init__(self, u):
        self._u = u

    def value(self, x):
        return -self._u.value(x)

    def gradient(self, x):
        return tuple(-g for g in self._u.gradient(x))

    def hessian(self, x):
        return tuple(tuple(-h for h in row) for row in self._u.hessian(x))


class _TransformedSurface:
    """u composed with the affine map of a left translation and rotation."""

    def __init__(self, u, a, theta):
        import numpy as _np

        self._u = u
        c, s = math.cos(theta), math.sin(theta)
        a1, a2, a3 = a
        self._a = (a1, a2, a3)
        self._jac = _np.array(
            [
                [c, -s, 0.0],
                [s, c, 0.0],
                [-2 * a1 * s + 2 * a2 * c, -2 * a2 * s - 2 * a1 * c, 1.0],
            ]
        )

    def _map(self, y):
        j = self._jac
        a1, a2, a3 = self._a
        return (
            a1 + j[0, 0] * y[0] + j[0, 1] * y[1],
            a2 + j[1, 0] * y[0] + j[1, 1] * y[1],
            a3 + j[2, 0] * y[0] + j[2, 1] * y[1] + y[2],
        )

    def value(self, y):
        return self._u.value(self._map(y))

    def gradient(self, y):
        import numpy as _np

        g = _np.asarray(self._u.gradient(self._map(y)), dtype=float)
        return tuple(self._jac.T @ g)

    def hessian(self, y):
        import numpy as _np

        h = _np.asarray(self._u.hessian(self._map(y)), dtype=float)
        th = self._jac.T @ h @ self._jac
        return tuple(tuple(row) for row in th)


def _random_quadric_point(rng):
    l1, l2 = rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)
    z = np.array([rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)])
    u = surfaces.quadric_surface(np.diag([l1, l2]))
    x = core.HPoint(z[0], z[1], l1 * z[0] ** 2 + l2 * z[1] ** 2)
    return u, x, (l1, l2, z)


def suite_surfaces(seed: int = 0):
    rng = random.Random(seed + 3)
    out = []

    worst = 0.0
    for _ in range(50):
        u, x, _ = _random_quadric_point(rng)
        try:
            r1 = surfaces.pde_residual(u, x)
        except surfaces.CharacteristicPointError:
            continue
        neg = _NegatedSurface(u)
        worst = max(
            worst,
            abs(surfaces.mean_curvature(u, x) ** 2 - surfaces.mean_curvature(neg, x) ** 2),
            abs(
                surfaces.imaginary_curvature(u, x) ** 2
                - surfaces.imaginary_curvature(neg, x) ** 2
            ),
            abs(
                surfaces.e1_of_imaginary_curvature(u, x)
                - surfaces.e1_of_imaginary_curvature(neg, x)
            ),
            abs(r1 - surfaces.pde_residual(neg, x)),
        )
    out.append(_res("sign-invariance", worst <= 1e-10, f"worst={worst:.2e}"))

    worst = 0.0
    for _ in range(50):
        u, x, _ = _random_quadric_point(rng)
        a = _rand_point(rng, 1.0)
        th = rng.uniform(0, 2 * math.pi)
        moved = _TransformedSurface(u, a, th)
        # y with T(y) = x: invert the affine map.
        j = _TransformedSurface(u, a, th)._jac
        rhs = np.array(
            [x.x1 - a.x1, x.x2 - a.x2, x.x3 - a.x3], dtype=float
        )
        y = np.linalg.solve(j, rhs)
        try:
            r1 = surfaces.pde_residual(u, x)
            r2 = surfaces.pde_residual(moved, core.HPoint(*y))
        except surfaces.CharacteristicPointError:
            continue
        worst = max(worst, abs(r1 - r2) / (1.0 + abs(r1)))
    out.append(_res("isometry-invariance", worst <= 1e-9, f"worst rel={worst:.2e}"))

    worst = 0.0
    alpha = 0.7
    u = surfaces.paraboloid_surface(alpha)
    for _ in range(100):
        z1, z2 = rng.uniform(-2, 2), rng.uniform(-2, 2)
        w = z1 * z1 + z2 * z2
        if w < 0.05:
            continue
        x = core.HPoint(z1, z2, math.tan(alpha) * w)
        rr = math.sqrt(w)
        worst = max(
            worst,
            abs(surfaces.mean_curvature(u, x) - math.sin(alpha) / rr),
            abs(surfaces.imaginary_curvature(u, x) + 2 * math.cos(alpha) / rr),
            abs(
                surfaces.e1_of_imaginary_curvature(u, x)
                + 2 * math.cos(alpha) ** 2 / w
            ),
            abs(
                surfaces.pde_residual(u, x)
                - (math.sin(alpha) ** 2 - 2 * math.cos(alpha) ** 2) / w
            ),
        )
    out.append(_res("paraboloid-closed-forms", worst <= 1e-10, f"worst={worst:.2e}"))

    ok = True
    flat = surfaces.quadric_flat_test(math.sqrt(2), math.sqrt(2))
    ok = ok and flat.vanishes_identically
    ok = ok and not surfaces.quadric_flat_test(1.0, 0.5).vanishes_identically
    l1 = 1.7
    col = surfaces.quadric_flat_test(l1, -1 / l1)
    ok = ok and abs(col.collapsed + 10 * (1 + l1 * l1) ** 2) <= 1e-9
    out.append(_res("quadric-flat-test", ok))

    worst = 0.0
    for _ in range(100):
        u, x, (l1, l2, z) = _random_quadric_point(rng)
        th = rng.uniform(0, 2 * math.pi)
        c, s = math.cos(th), math.sin(th)
        Qr = np.array([[c, -s], [s, c]])
        S = Qr.T @ np.diag([l1, l2]) @ Qr
        try:
            a = surfaces.quadric_M(S, z)
            b = surfaces.quadric_M(np.diag([l1, l2]), Qr @ z)
            worst = max(worst, abs(a - b) / (1.0 + abs(a)))
        except surfaces.CharacteristicPointError:
            continue
    out.append(_res("quadric-rotation-covariance", worst <= 1e-10, f"worst={worst:.2e}"))

    worst = 0.0
    for _ in range(30):
        phi = {
            (i, j): rng.uniform(-0.5, 0.5)
            for (i, j) in [(0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]
        }
        g = surfaces.GraphSurface(phi)
        u = g.as_level_surface()
        o = core.HPoint(0.0, 0.0, 0.0)
        phi2, phi11, phi12 = g.partials_at_origin()
        p0 = surfaces.imaginary_curvature(u, o)
        worst = max(
            worst,
            abs(phi2 + 0.25 * p0),
            abs(phi11 + surfaces.mean_curvature(u, o)),
            abs(phi12 + 0.25 * surfaces.e1_of_imaginary_curvature(u, o) + 0.125 * p0 * p0),
            abs(surfaces.graph_quintic_quantity(g) - surfaces.pde_residual(u, o)),
        )
    out.append(_res("graph-identifications", worst <= 1e-10, f"worst={worst:.2e}"))

    worst = 0.0
    used = 0
    while used < 25:
        u, x, _ = _random_quadric_point(rng)
        try:
            g = surfaces.normalize_at_point(u, x)
            q = surfaces.graph_quintic_quantity(g)
            r = surfaces.pde_residual(u, x)
        except surfaces.CharacteristicPointError:
            continue
        used += 1
        worst = max(worst, abs(q - r) / (1.0 + abs(r)))
    out.append(_res("normalize-two-path", worst <= 1e-8, f"worst rel={worst:.2e}"))
    return out


# --------------------------------------------------------------- integrals
def suite_integrals(seed: int = 0):
    rng = random.Random(seed + 4)
    out = []

    ok = (
        abs(koranyi.gamma_fn(0.5) - math.sqrt(math.pi)) <= 1e-13
        and abs(koranyi.gamma_fn(0.25) * koranyi.gamma_fn(0.75) - math.pi * math.sqrt(2))
        <= 1e-12
        and koranyi.gamma_fn(5) == 24.0
    )
    out.append(_res("gamma-values", ok))

    w = koranyi.omega_h()
    quad = koranyi.ball_integral(lambda e1, e2: np.ones_like(np.asarray(e1)))
    ok = abs(w - quad) <= 1e-8 * w and abs(w - 3.49608) <= 5e-5
    out.append(_res("omega-h", ok, f"closed={w!r}, quad={quad!r}"))

    worst = 0.0
    for a in range(5):
        for b in range(5 - a):
            closed = koranyi.monomial_ball_integral(a, b)
            quad = koranyi.ball_integral(
                lambda e1, e2, a=a, b=b: e1 ** (2 * a) * e2 ** (2 * b)
            )
            worst = max(worst, abs(closed - quad) / closed)
    out.append(_res("monomial-table", worst <= 1e-8, f"worst rel={worst:.2e}"))

    worst = 0.0
    for p, q in [(0, 0), (2, 0), (0, 2), (2, 2), (4, 0), (6, 0), (0, 4), (4, 2), (2, 4), (8, 0)]:
        _, _, rel = koranyi.polar_identity_check(
            lambda e1, e2, p=p, q=q: e1**p * e2**q, p + 2 * q
        )
        worst = max(worst, rel)
    out.append(_res("sphere-ball-factor", worst <= 1e-6, f"worst rel={worst:.2e}"))

    x1, x2, wts = koranyi.sphere_nodes()
    node_sum = float(wts.sum())
    sym_ok = (
        abs(float(np.dot(wts, x1))) <= 1e-14
        and abs(float(np.dot(wts, x2))) <= 1e-14
        and abs(float(np.dot(wts, x1 * x2))) <= 1e-14
    )
    f = lambda a, b: np.exp(a + 0.3 * b) * (1 + a * a)
    doubling = abs(koranyi.sphere_integral(f, 128) - koranyi.sphere_integral(f, 256))
    ok = abs(node_sum - 3 * koranyi.omega_h()) <= 1e-12 and sym_ok and doubling <= 1e-12
    out.append(
        _res("sphere-nodes", ok, f"sum-3wH={node_sum - 3 * koranyi.omega_h():.2e}")
    )

    worst = 0.0
    for _ in range(20):
        terms = [
            (2 * rng.randint(0, 2), 2 * rng.randint(0, 1), rng.uniform(0.2, 1.0))
            for _ in range(3)
        ]
        # radial part in closed form: a monomial of weighted degree d
        # contributes xi-monomial / (d + 3).
        def h_sphere(e1, e2, terms=terms):
            acc = 0.0
            for i, j, c in terms:
                acc = acc + c * e1**i * e2**j / (i + 2 * j + 3)
            return acc

        def h_ball(e1, e2, terms=terms):
            acc = 0.0
            for i, j, c in terms:
                acc = acc + c * e1**i * e2**j
            return acc

        lhs = koranyi.sphere_integral(h_sphere)
        rhs = koranyi.ball_integral(h_ball)
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-12))
    out.append(_res("polar-decomposition", worst <= 1e-8, f"worst rel={worst:.2e}"))

    ok = all(
        koranyi.ball_monomial_integral(p, q) == 0.0
        for p, q in [(1, 0), (0, 1), (3, 2), (2, 5), (7, 7)]
    )
    out.append(_res("odd-monomials-zero", ok))
    return out


SUITES = {
    "frame": suite_frame,
    "jets": suite_jets,
    "curves": suite_curves,
    "surfaces": suite_surfaces,
    "integrals": suite_integrals,
}


def run_suites(names, seed: int = 0) -> dict:
    """Run the named suites and assemble the machine-readable report."""
    report = {"seed": seed, "suites": [], "failed_groups": 0}
    for name in names:
        try:
            results = SUITES[name](seed)
        except KeyError:
            raise ValueError(f"unknown suite {name!r}") from None
        passed = all(r.passed for r in results)
        report["suites"].append(
            {
                "suite": name,
                "passed": passed,
                "invariants": [
                    {"name": r.name, "status": "pass" if r.passed else "fail", "detail": r.detail}
                    for r in results
                ],
            }
        )
        if not passed:
            report["failed_groups"] += 1
    return report

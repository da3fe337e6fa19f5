"""Development checks for the measure engine."""
import math
import random
import numpy as np

from fractions import Fraction as Q
from heiskit import surfaces as sf
from heiskit import measure as ms
from heiskit import koranyi as ko
from heiskit import curves as cv
from heiskit.jets import Jet, solve_norm_equation
from heiskit.core import HPoint, ORIGIN

rng = random.Random(3)

# --- curve measures
print("== curve measures")
line = cv.load_curve({"x1": [0, 1], "x2": [0], "mode": "horizontal-lift"})
m = ms.curve_ball_measure(line, ORIGIN, 0.3)
print("horizontal line r=0.3:", m.value, "expect", 0.6)

vert = cv.load_curve({"x1": [0], "x2": [0], "x3": [0, 1], "mode": "explicit"})
m = ms.curve_ball_measure(vert, ORIGIN, 0.3)
print("vertical line r=0.3:", m.value, "expect", 2 * 0.3**2)

circle = cv.horizontal_lift(
    cv.curve_from_speed_curvature(Jet([Q(1)], 16), Jet([Q(1)], 16))
)
m = ms.curve_ball_measure(circle, ORIGIN, 0.05)
pred = 2 * 0.05 + 0.05**3 / 36
print("lifted circle r=0.05:", m.value, "pred", pred, "err", abs(m.value - pred))

# density ratios
samples, ratios, limit = ms.density_ratio(
    lambda r: ms.curve_ball_measure(circle, ORIGIN, r), ms.radius_ladder(0.4, 8), 1
)
print("circle density limit:", limit)

# horizontal point of nonhorizontal curve: (s, 0, s^2)
hp = cv.load_curve({"x1": [0, 1], "x2": [0], "x3": [0, 0, 1], "mode": "explicit"})
# degree at base is 1 (theta vanishes at 0) but measure scales like r^2 with
# limit sqrt(2); measure_fn must integrate |theta| density over |s|<=bound.
def hp_measure(r):
    # ad hoc: boundary solve on this explicit curve with degree-2 density
    curve = hp.as_float()
    import scipy.integrate as si
    from heiskit.measure import _boundary_param
    sp = _boundary_param(curve, ORIGIN, r, 1, +1.0)
    sm = _boundary_param(curve, ORIGIN, r, 1, -1.0)
    val, err = si.quad(lambda s: ms.area_density(curve, s, 2), sm, sp, epsabs=1e-12)
    return ms.MeasureSample(r, val, err)

samples, ratios, limit = ms.density_ratio(hp_measure, ms.radius_ladder(0.2, 8), 2)
print("horizontal-point limit:", limit, "expect", math.sqrt(2),
      "formula", cv.horizontal_point_density(1, 2))

# --- paraboloid characteristic density
print("== paraboloid characteristic density")
for alpha in (0.3, math.atan(math.sqrt(2))):
    t = math.tan(alpha)
    f = lambda z1, z2: t * (z1 * z1 + z2 * z2)
    fg = lambda z1, z2: (2 * t * z1, 2 * t * z2)
    m = ms.xgraph_ball_measure(f, fg, 0.37)
    pred = (4 * math.pi / 3) * math.sqrt(math.cos(alpha)) * 0.37**3
    print("alpha", alpha, "meas", m.value, "pred", pred, "rel",
          abs(m.value - pred) / pred)

# --- rho0 series check
print("== rho0 series")
phi = {(0, 1): 0.3, (2, 0): -0.25, (1, 1): 0.15, (3, 0): 0.1, (0, 2): 0.2}
g = sf.GraphSurface(phi)
a2 = phi[(0, 1)]; a11 = phi[(2, 0)]; a12 = phi[(1, 1)]; a111 = phi[(3, 0)]
for xi in [(0.9, math.sqrt(1 - 0.9**4)), (0.5, -math.sqrt(1 - 0.5**4))]:
    B2 = a2 * xi[1] + a11 * xi[0] ** 2
    B3 = a12 * xi[0] * xi[1] + a111 * xi[0] ** 3
    for r in (1e-2, 5e-3, 2.5e-3):
        rho = ms.polar_exit_radius(g, (np.array(xi[0]), np.array(xi[1])), r)
        series = r - 0.5 * xi[0] ** 2 * B2**2 * r**3 - xi[0] ** 2 * B2 * B3 * r**4
        print("xi", xi[0], "r", r, "err/r^5", abs(rho - series) / r**5)

# rho0 via solve_norm_equation (jet oracle in rho)
xi = (0.8, math.sqrt(1 - 0.8**4))
phi_jet = Jet([0.0], 10)
# phi(delta_rho xi) as a jet in rho:
rho_jet = Jet.variable(10)
e1j = xi[0] * rho_jet
e2j = xi[1] * rho_jet * rho_jet
acc = Jet([0.0], 10)
for (i, j), c in phi.items():
    acc = acc + c * e1j**i * e2j**j
F = acc**4 + 2 * (rho_jet**2) * (xi[0] ** 2) * acc**2 + rho_jet**4
rho_series = solve_norm_equation(F, 4, 1)
for r in (1e-2, 1e-3):
    rho = ms.polar_exit_radius(g, (np.array(xi[0]), np.array(xi[1])), r)
    print("jet-oracle rho0 err:", abs(rho - rho_series(r)))

# --- random graph: ladder fit vs predicted c0, c1
print("== graph expansion fit")
beta1 = sf.surface_expansion_beta1()
for trial in range(5):
    phi = {}
    for (i, j) in [(0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
                   (4, 0), (3, 1), (2, 2)]:
        phi[(i, j)] = rng.uniform(-0.5, 0.5)
    g = sf.GraphSurface(phi)
    pred_c1 = beta1 * sf.graph_quintic_quantity(g)
    fn = lambda r: ms.surface_ball_measure(g, r, estimate_error=False)
    samples = [fn(r) for r in ms.radius_ladder(0.15, 8)]
    fit = ms.fit_expansion(samples, [3, 5, 6, 7])
    c0, c1 = fit.coefficients[0], fit.coefficients[1]
    print("c0 rel", abs(c0 - ko.omega_h()) / ko.omega_h(),
          "c1:", c1, "pred:", pred_c1,
          "rel", abs(c1 - pred_c1) / max(abs(pred_c1), 1e-12))

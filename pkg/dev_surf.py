"""Development checks for surfaces and measures."""
import math
import random
import numpy as np

from heiskit import surfaces as sf
from heiskit import measure as ms
from heiskit import koranyi as ko
from heiskit.core import HPoint

rng = random.Random(11)

# --- paraboloid closed forms
print("== paraboloid")
alpha = 0.6
u = sf.paraboloid_surface(alpha)
for _ in range(5):
    x1, x2 = rng.uniform(-2, 2), rng.uniform(-2, 2)
    if x1 * x1 + x2 * x2 < 1e-2:
        continue
    x = HPoint(x1, x2, math.tan(alpha) * (x1 * x1 + x2 * x2))
    rr = math.sqrt(x1 * x1 + x2 * x2)
    h = sf.mean_curvature(u, x)
    p = sf.imaginary_curvature(u, x)
    e = sf.e1_of_imaginary_curvature(u, x)
    res = sf.pde_residual(u, x)
    print(
        "H err %.2e  P err %.2e  e1P err %.2e  pde err %.2e"
        % (
            abs(h - math.sin(alpha) / rr),
            abs(p + 2 * math.cos(alpha) / rr),
            abs(e + 2 * math.cos(alpha) ** 2 / rr**2),
            abs(res - (math.sin(alpha) ** 2 - 2 * math.cos(alpha) ** 2) / rr**2),
        )
    )

print("== characteristic detection at origin:",
      sf.horizontal_data(u, HPoint(0.0, 0.0, 0.0)).is_characteristic)

# --- quadric M vs pde residual
print("== quadric ratio pde/M")
for _ in range(5):
    l1, l2 = rng.uniform(-2, 2), rng.uniform(-2, 2)
    th = rng.uniform(0, math.pi)
    c, s = math.cos(th), math.sin(th)
    Qr = np.array([[c, -s], [s, c]])
    S = Qr.T @ np.diag([l1, l2]) @ Qr
    z = np.array([rng.uniform(-2, 2), rng.uniform(-2, 2)])
    us = sf.quadric_surface(S)
    x = HPoint(z[0], z[1], float(z @ S @ z))
    try:
        r1 = sf.pde_residual(us, x)
        r2 = sf.quadric_M(S, z)
        print("ratio", r1 / r2 if r2 else (r1, r2))
    except sf.CharacteristicPointError:
        print("char point, skip")

# rotation covariance
print("== quadric rotation covariance")
worst = 0.0
for _ in range(20):
    l1, l2 = rng.uniform(-2, 2), rng.uniform(-2, 2)
    th = rng.uniform(0, math.pi)
    c, s = math.cos(th), math.sin(th)
    Qr = np.array([[c, -s], [s, c]])
    S = Qr.T @ np.diag([l1, l2]) @ Qr
    z = np.array([rng.uniform(-2, 2), rng.uniform(-2, 2)])
    try:
        a = sf.quadric_M(S, z)
        b = sf.quadric_M(np.diag([l1, l2]), Qr @ z)
        worst = max(worst, abs(a - b) / (1 + abs(a)))
    except sf.CharacteristicPointError:
        pass
print("worst rel err", worst)

# --- graph identifications
print("== graph identifications vs level-set formulas")
worst = [0.0, 0.0, 0.0, 0.0]
for _ in range(10):
    phi = {}
    for (i, j) in [(0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]:
        phi[(i, j)] = rng.uniform(-0.5, 0.5)
    g = sf.GraphSurface(phi)
    u = g.as_level_surface()
    o = HPoint(0.0, 0.0, 0.0)
    phi2, phi11, phi12 = g.partials_at_origin()
    h = sf.mean_curvature(u, o)
    p = sf.imaginary_curvature(u, o)
    e = sf.e1_of_imaginary_curvature(u, o)
    worst[0] = max(worst[0], abs(phi2 + 0.25 * p))
    worst[1] = max(worst[1], abs(phi11 + h))
    worst[2] = max(worst[2], abs(phi12 + 0.25 * e + 0.125 * p * p))
    worst[3] = max(
        worst[3],
        abs(sf.graph_quintic_quantity(g) - sf.pde_residual(u, o)),
    )
print("identification worst errs", worst)

# --- normalize_at_point two-path check on quadrics
print("== normalize_at_point vs pde_residual")
worst = 0.0
for _ in range(10):
    l1, l2 = rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)
    S = np.diag([l1, l2])
    z = np.array([rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)])
    us = sf.quadric_surface(S)
    x = HPoint(z[0], z[1], float(z @ S @ z))
    try:
        g = sf.normalize_at_point(us, x)
        q = sf.graph_quintic_quantity(g)
        r = sf.pde_residual(us, x)
        worst = max(worst, abs(q - r) / (1 + abs(r)))
    except sf.CharacteristicPointError:
        continue
print("two-path worst rel err", worst)

# --- beta1
K = math.gamma(0.75) ** 2 / math.sqrt(2 * math.pi)
print("beta1", sf.surface_expansion_beta1(), "K/5 =", K / 5)

# --- omega_h
print("omega_h", ko.omega_h(), "expected 3.49608...")

# --- surface ball measure on the flat plane phi = 0
g0 = sf.GraphSurface({})
for r in (0.5, 0.1):
    m = ms.surface_ball_measure(g0, r)
    print("plane measure", r, m.value, "vs", ko.omega_h() * r**3,
          "rel", abs(m.value - ko.omega_h() * r**3) / (ko.omega_h() * r**3))

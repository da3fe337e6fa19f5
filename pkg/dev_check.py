"""Development scratch checks (not part of the package)."""
import math
import random
from fractions import Fraction as Q

from heiskit.jets import Jet
from heiskit import curves as cv

rng = random.Random(7)


def rq(lo=-3, hi=3, den=4):
    return Q(rng.randint(lo, hi), rng.randint(1, den))


def fact(n):
    return math.factorial(n)


def poly_curve(a, b, order=18):
    x1 = Jet([Q(0)] + [ai / fact(m + 1) for m, ai in enumerate(a)], order)
    x2 = Jet([Q(0)] + [bi / fact(m + 1) for m, bi in enumerate(b)], order)
    return cv.PlanarJet(x1, x2)


# --- 1. vertical completion coefficients c3..c7 -------------------------
print("== c3..c7 closed forms")
bad = 0
for trial in range(20):
    a = [rq() for _ in range(6)]
    b = [rq() for _ in range(6)]
    curve = cv.vertical_completion(poly_curve(a, b))
    x3 = curve.x3
    a1, a2, a3, a4, a5, a6 = a
    b1, b2, b3, b4, b5, b6 = b
    c3 = Q(1, 3) * (a2 * b1 - a1 * b2)
    c4 = Q(1, 6) * (a3 * b1 - a1 * b3)
    c5 = Q(1, 20) * (a4 * b1 - a1 * b4) + Q(1, 30) * (a3 * b2 - a2 * b3)
    c6 = Q(1, 90) * (a5 * b1 - a1 * b5) + Q(1, 72) * (a4 * b2 - a2 * b4)
    c7 = (
        Q(1, 504) * (a6 * b1 - a1 * b6)
        + Q(1, 280) * (a5 * b2 - a2 * b5)
        + Q(1, 504) * (a4 * b3 - a3 * b4)
    )
    got = (x3.c[1], x3.c[2], x3.c[3], x3.c[4], x3.c[5], x3.c[6], x3.c[7])
    want = (Q(1), Q(0), c3, c4, c5, c6, c7)
    if got != want:
        bad += 1
        print("MISMATCH", got, want)
print("c-coeff failures:", bad)

# --- 2. oracle vs tables: nonhorizontal -------------------------------
print("== nonhorizontal oracle vs tables")
bad = 0
for trial in range(10):
    a = [rq() for _ in range(6)]
    b = [rq() for _ in range(6)]
    curve = cv.vertical_completion(poly_curve(a, b))
    ms = cv.measure_series(curve)
    b1v = cv.nonhorizontal_expansion_coeff(curve, 1)
    b2v = cv.nonhorizontal_expansion_coeff(curve, 2)
    b3v = cv.nonhorizontal_expansion_coeff(curve, 3)
    b3lit = cv.nonhorizontal_expansion_coeff(curve, 3, literal=True)
    if ms.c[2] != 2 or ms.c[6] != b1v or ms.c[10] != b2v or ms.c[14] != b3v:
        bad += 1
        print("MISMATCH r6:", ms.c[6], b1v)
        print("         r10:", ms.c[10], b2v)
        print("         r14:", ms.c[14], b3v, "lit", b3lit)
print("nonhorizontal failures:", bad)

# --- 3. horizontal oracle ------------------------------------------------
print("== horizontal oracle")
bad = 0
for trial in range(10):
    k = Jet([rq() for _ in range(6)], 16)
    planar = cv.curve_from_speed_curvature(Jet([Q(1)], 16), k)
    curve = cv.horizontal_lift(planar)
    ms = cv.measure_series(curve)
    a1v = cv.horizontal_expansion_coeff(curve)
    if ms.c[1] != 2 or ms.c[3] != a1v:
        bad += 1
        print("MISMATCH", ms.c[1], ms.c[3], a1v, 2 * a1v)
print("horizontal failures:", bad)
print("sample: a1 for unit circle:",
      cv.horizontal_expansion_coeff(
          cv.horizontal_lift(cv.curve_from_speed_curvature(Jet([Q(1)], 12), Jet([Q(1)], 12)))))

# --- 4. speed identities -------------------------------------------------
print("== speed identities")
bad = 0
for trial in range(10):
    sigma = Jet([abs(rq()) + 1] + [rq() for _ in range(6)], 8)
    res = cv.speed_identity_residuals(sigma)
    nz = [i for i, r in enumerate(res) if r != 0]
    if nz:
        bad += 1
        print("nonzero identities:", [(i + 1, res[i]) for i in nz])
print("identity failures:", bad)

# --- 5. B2-constrained reduction ----------------------------------------
print("== b2 -> b3 reduction")
for trial in range(6):
    s0 = abs(rq()) + 1
    s1 = rq()
    sig = cv.b2_constrained_speed(s0, s1, order=10)
    eq1, b2r, b3r, b4r = cv.speed_ode_residuals(sig)
    pred = -Q(3, 13) * (s1 * s1 + Q(1, 4) * s0**6) ** 2
    print(f"s0={s0} s1={s1}  b2={b2r}  b3={b3r}  pred={pred}  match={b3r == pred}",
          f" ratio_to_printedB4={Q(b3r) / b4r if b4r else None}")

# --- 6. table vs ODE consistency ----------------------------------------
print("== tables composed with identities vs speed ODEs")
for trial in range(4):
    sigma = Jet([abs(rq()) + 1] + [rq() for _ in range(6)], 10)
    curve3 = cv.vertical_completion(cv.eq1_curve(sigma))
    b2tab = cv.nonhorizontal_expansion_coeff(curve3, 2)
    b3tab = cv.nonhorizontal_expansion_coeff(curve3, 3, literal=True)
    _, b2ode, b3ode, _ = cv.speed_ode_residuals(sigma)
    s0 = sigma.c[0]
    print("b2tab*10/s0^2 == b2ode:", 10 * b2tab / s0**2 == b2ode,
          " b3tab*(1120/13) == b3ode:", Q(1120, 13) * b3tab == b3ode)

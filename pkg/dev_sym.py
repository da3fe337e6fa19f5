"""Symbolically derive the omega identities to locate the transcription gap."""
import sympy as sp
from fractions import Fraction as Q
from heiskit.jets import Jet
from heiskit import curves as cv

s = sp.symbols("s0 s1 s2 s3 s4 s5 s6")
coeffs = [s[k] / sp.factorial(k) for k in range(7)]
sigma = Jet(coeffs, 8)
curve = cv.eq1_curve(sigma)

def show(kind, i, j):
    g, w = cv.g_omega(curve, i, j)
    val = sp.expand(sp.nsimplify(g if kind == "g" else w))
    return val

for kind, i, j in [("w", 3, 4), ("w", 2, 5), ("w", 1, 6), ("w", 1, 5), ("g", 1, 5)]:
    v = show(kind, i, j)
    print(f"{kind}{i}{j} =", sp.simplify(v))
    print()

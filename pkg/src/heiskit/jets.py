"""Truncated power series ("jets") with exact rational or float coefficients.

A jet of order N represents ``c0 + c1 s + ... + cN s^N``; higher-order
terms are unknown, not zero.  Arithmetic truncates at the smaller order of
the two operands.  With ``fractions.Fraction`` coefficients every
operation below is exact; this is the oracle mode used by the expansion
tests.  The same code runs with floats for fast numeric work.

Beyond ring arithmetic the module provides composition, compositional
inversion (series reversion) and the quartic norm-equation solver that
turns ``|curve(s)|^4 = r^4`` into the boundary parameter series s(r).
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

DEFAULT_ORDER = 16


def _exact(x) -> bool:
    return isinstance(x, Rational)


def _div(a, b):
    """Quotient that stays exact when both operands are rational."""
    if _exact(a) and _exact(b):
        return Fraction(a) / Fraction(b)
    return a / b


def _int_nth_root(n: int, k: int):
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def _exact_root(c: Fraction, k: int):
    """Exact k-th root of a positive rational, or None."""
    c = Fraction(c)
    num = _int_nth_root(c.numerator, k)
    den = _int_nth_root(c.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


class Jet:
    """Truncated power series; immutable value semantics."""

    __slots__ = ("c",)

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("need coefficients or an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.c = tuple(coeffs[: order + 1])

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "Jet":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER, scale=1) -> "Jet":
        return cls([0, scale], order)

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k: int):
        return self.c[k]

    def __iter__(self):
        return iter(self.c)

    def __len__(self):
        return len(self.c)

    def __repr__(self):
        return f"Jet({list(self.c)!r})"

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def is_exact(self) -> bool:
        return all(_exact(c) for c in self.c)

    def truncate(self, order: int) -> "Jet":
        return Jet(self.c, order)

    # ------------------------------------------------------------------ ring
    def __add__(self, other):
        if isinstance(other, Jet):
            n = min(self.order, other.order)
            return Jet([self.c[k] + other.c[k] for k in range(n + 1)])
        out = list(self.c)
        out[0] = out[0] + other
        return Jet(out)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-c for c in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            n = min(self.order, other.order)
            out = [0] * (n + 1)
            for i in range(n + 1):
                a = self.c[i]
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += a * other.c[j]
            return Jet(out)
        return Jet([c * other for c in self.c])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("integer power must be a nonnegative int")
        out = Jet.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def reciprocal(self) -> "Jet":
        f0 = self.c[0]
        if f0 == 0:
            raise ZeroDivisionError("reciprocal of a jet with zero constant term")
        n = self.order
        out = [_div(1, f0)] + [0] * n
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                acc += self.c[j] * out[k - j]
            out[k] = -_div(acc, f0)
        return Jet(out)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet([_div(c, other) for c in self.c])

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # -------------------------------------------------------------- calculus
    def deriv(self) -> "Jet":
        if self.order == 0:
            return Jet([0])
        return Jet([(k + 1) * self.c[k + 1] for k in range(self.order)])

    def integ(self, const=0) -> "Jet":
        out = [const] + [_div(self.c[k], k + 1) for k in range(self.order + 1)]
        return Jet(out)

    def __call__(self, x):
        acc = self.c[-1]
        for c in reversed(self.c[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Jet") -> "Jet":
        """self(inner(s)); requires inner(0) == 0."""
        if inner.c[0] != 0:
            raise ValueError("composition needs inner constant term zero")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = Jet.constant(self.c[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.c[k]
        return acc

    # ------------------------------------------------------ roots and shifts
    def shift_down(self, k: int) -> "Jet":
        """Divide by s^k; the k lowest coefficients must vanish."""
        if any(c != 0 for c in self.c[:k]):
            raise ValueError(f"jet is not divisible by s^{k}")
        return Jet(self.c[k:])

    def shift_up(self, k: int) -> "Jet":
        return Jet([0] * k + list(self.c))

    def pow_unit(self, alpha) -> "Jet":
        """(1 + u)^alpha for self = 1 + u; alpha rational or float."""
        if self.c[0] != 1:
            raise ValueError("fractional power needs constant term exactly 1")
        n = self.order
        # Binomial series composed with u; both steps stay exact for
        # rational alpha.
        binom = [1]
        coef = 1
        for k in range(1, n + 1):
            coef = _div(coef * (alpha - (k - 1)), k)
            binom.append(coef)
        u = self - 1
        return Jet(binom).compose(u)

    def sqrt(self) -> "Jet":
        return self.nth_root(2)

    def nth_root(self, k: int) -> "Jet":
        f0 = self.c[0]
        if not f0 > 0:
            raise ValueError("root of a jet needs a positive constant term")
        if _exact(f0):
            r0 = _exact_root(Fraction(f0), k)
            if r0 is None:
                raise ValueError(
                    f"constant term {f0} has no exact rational {k}-th root"
                )
            alpha = Fraction(1, k)
        else:
            r0 = f0 ** (1.0 / k)
            alpha = 1.0 / k
        return r0 * (self / f0).pow_unit(alpha)


def revert(f: Jet) -> Jet:
    """Compositional inverse g with f(g(r)) = r to truncation order.

    Requires f(0) = 0 and f'(0) != 0.
    """
    if f.c[0] != 0:
        raise ValueError("reversion needs zero constant term")
    f1 = f.c[1]
    if f1 == 0:
        raise ValueError("reversion needs a nonzero linear coefficient")
    n = f.order
    x = Jet.variable(n)
    tail = f - f1 * x  # quadratic and higher part
    g = x / f1
    # Each pass fixes at least one more order.
    for _ in range(n):
        g = (x - tail.compose(g)) / f1
    return g


def solve_norm_equation(F: Jet, k: int, sign: int = 1) -> Jet:
    """Boundary-parameter series for F(s) = r^4 on one branch.

    F must have leading behavior c*s^k with c > 0 and k in {2, 4}; these are
    the two cases that occur for the quartic Koranyi norm along a curve.
    For k = 4 the solution behaves like s ~ sign*r, for k = 2 like
    s ~ sign*r^2.  The returned jet is a series in r.
    """
    if k not in (2, 4):
        raise ValueError("leading exponent must be 2 or 4")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    G = F.shift_down(k)
    if not G.c[0] > 0:
        raise ValueError("leading coefficient must be positive")
    # Writing F = (s * G^(1/m))^m with m = 4 (resp. 2), the equation becomes
    # h(s) = sign * r (resp. sign * r^2) for the strictly monotone series
    # h = s * G^(1/m), and reversion finishes the job.
    root = G.nth_root(k)
    h = (Jet.variable(G.order) * root).shift_up(0)
    hinv = revert(h)
    if k == 4:
        return Jet([hinv.c[j] * sign**j for j in range(hinv.order + 1)])
    out = [0] * (2 * hinv.order + 1)
    for j in range(hinv.order + 1):
        out[2 * j] = hinv.c[j] * sign**j
    return Jet(out, F.order)


# --------------------------------------------------------------- gradings
def symbol_weight(sym) -> int:
    """Weight of a formal g_ij / omega_ij symbol: index i contributes 2i-1."""
    _, i, j = sym
    if i < 1 or j < 1:
        raise ValueError("symbol indices must be >= 1")
    return (2 * i - 1) + (2 * j - 1)


def weighted_degree(monomial) -> int:
    """Total weight of a monomial given as ((sym, power), ...) pairs."""
    return sum(symbol_weight(sym) * power for sym, power in monomial)

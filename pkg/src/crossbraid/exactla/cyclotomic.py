"""Exact arithmetic in the cyclotomic field Q(zeta_8).

Elements are stored as ``c0 + c1*z + c2*z**2 + c3*z**3`` with ``z**4 == -1``.
Purely rational results collapse back to :class:`fractions.Fraction` so the
rational fast path is kept wherever possible.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

_RATIONAL = (int, Fraction)


def _reduce_power(k: int) -> tuple[int, int]:
    """Return (sign, exponent) with z**k == sign * z**exponent, 0 <= exponent < 4."""
    k %= 8
    if k >= 4:
        return -1, k - 4
    return 1, k


class Cyc8:
    """An element of Q(zeta_8)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) != 4:
            raise ValueError("Q(zeta_8) elements need exactly four coefficients")
        self.c = c

    @staticmethod
    def make(coeffs):
        """Build an element, collapsing to a Fraction when the value is rational."""
        c = tuple(Fraction(x) for x in coeffs)
        if c[1] == 0 and c[2] == 0 and c[3] == 0:
            return c[0]
        return Cyc8(c)

    @staticmethod
    def lift(x) -> "Cyc8":
        if isinstance(x, Cyc8):
            return x
        if isinstance(x, _RATIONAL):
            return Cyc8((x, 0, 0, 0))
        raise TypeError(f"cannot lift {type(x).__name__} into Q(zeta_8)")

    @staticmethod
    def zeta_power(k: int):
        sign, e = _reduce_power(k)
        c = [0, 0, 0, 0]
        c[e] = sign
        return Cyc8.make(c)

    def __add__(self, other):
        if not isinstance(other, (Cyc8, *_RATIONAL)):
            return NotImplemented
        o = Cyc8.lift(other).c
        return Cyc8.make(a + b for a, b in zip(self.c, o))

    __radd__ = __add__

    def __neg__(self):
        return Cyc8.make(-a for a in self.c)

    def __sub__(self, other):
        if not isinstance(other, (Cyc8, *_RATIONAL)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if not isinstance(other, _RATIONAL):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RATIONAL):
            return Cyc8.make(a * other for a in self.c)
        if not isinstance(other, Cyc8):
            return NotImplemented
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                if b == 0:
                    continue
                sign, e = _reduce_power(i + j)
                out[e] += sign * a * b
        return Cyc8.make(out)

    __rmul__ = __mul__

    def galois(self, k: int):
        """Apply the automorphism z -> z**k (k odd)."""
        if k % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) send z to an odd power")
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.c):
            sign, e = _reduce_power(i * k)
            out[e] += sign * a
        return Cyc8(out)

    def conjugate(self):
        return Cyc8.make(self.galois(7).c)

    def inverse(self):
        if all(a == 0 for a in self.c):
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        prod = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * prod
        if isinstance(norm, Cyc8):  # pragma: no cover - the norm is always rational
            raise ArithmeticError("field norm did not reduce to a rational")
        return prod * (1 / Fraction(norm))

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL):
            return Cyc8.make(a / other for a in self.c)
        if not isinstance(other, Cyc8):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, _RATIONAL):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Fraction(1)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyc8):
            return self.c == other.c
        if isinstance(other, _RATIONAL):
            return self.c == (Fraction(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        if self.c[1] == self.c[2] == self.c[3] == 0:
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(a != 0 for a in self.c)

    def __repr__(self):
        return f"Cyc8({format_scalar(self)!r})"


ZETA8 = Cyc8.zeta_power(1)
I_UNIT = Cyc8.zeta_power(2)


def format_scalar(x) -> str:
    """Render an exact scalar as a string, e.g. ``-1/2`` or ``1/2*z - z^3``.

    ``z`` denotes the primitive eighth root of unity exp(i*pi/4); ``z^2`` is i.
    """
    if isinstance(x, _RATIONAL):
        return str(Fraction(x))
    if not isinstance(x, Cyc8):
        raise TypeError(f"not an exact scalar: {x!r}")
    parts = []
    for e, a in enumerate(x.c):
        if a == 0:
            continue
        mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
        if not mono:
            term = str(a)
        elif a == 1:
            term = mono
        elif a == -1:
            term = "-" + mono
        else:
            term = f"{a}*{mono}"
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?\*?(z(?:\^(\d+))?)?")


def parse_scalar(text):
    """Inverse of :func:`format_scalar`; ints, Fractions and Cyc8 pass through."""
    if isinstance(text, (Cyc8, *_RATIONAL)):
        return text
    if isinstance(text, float):
        raise TypeError("floats are not exact scalars; use 'p/q' strings")
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    if "z" not in s:
        return Fraction(s)
    coeffs = [Fraction(0)] * 4
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse scalar {text!r}")
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        e = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
        sign, e = _reduce_power(e)
        coeffs[e] += sign * coef
        pos = m.end()
    return Cyc8.make(coeffs)


def exact_div(a, b):
    """a / b that never falls back to float division on two ints."""
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


def exact_int(x):
    """Integral Fractions become ints (much faster arithmetic); everything else is returned unchanged."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def is_rational(x) -> bool:
    return isinstance(x, Rational)


def sqrt_exact(x):
    """Exact square root of a rational when it lies in Q(zeta_8), else ValueError.

    Uses i = z**2 and sqrt(2) = z - z**3 to reach square roots of -1, 2, -2.
    """
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    sign = -1 if x < 0 else 1
    a = abs(x)
    num, den = a.numerator, a.denominator
    # move square factors out: a = (p/q)^2 * m with m in {1, 2}
    for m in (1, 2):
        if (num * den) % m:
            continue
        inner = Fraction(num * den, m)
        if inner.denominator == 1:
            r = _isqrt_exact(inner.numerator)
            if r is not None:
                base = Fraction(r, den)
                root = base if m == 1 else base * (ZETA8 - Cyc8.zeta_power(3))
                return root if sign > 0 else root * I_UNIT
    raise ValueError(f"sqrt({x}) is not in Q(zeta_8)")


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None

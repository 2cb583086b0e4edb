"""Exact arithmetic in Q(i)[sqrt2].

An element is (a_re + i a_im) + (b_re + i b_im) sqrt2 with rational parts.
Internally the four parts share one positive denominator and the five
integers are kept coprime, so the representation is canonical and equality
is structural.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["ExtScalar", "DivisionByZero", "arith", "conjugate", "embed",
           "ZERO", "ONE", "I", "SQRT2", "INV_SQRT2", "HALF", "as_scalar"]


class DivisionByZero(ZeroDivisionError):
    pass


def _norm5(ar, ai, br, bi, d):
    g = gcd(ar, ai, br, bi, d)
    if g != 1:
        ar //= g
        ai //= g
        br //= g
        bi //= g
        d //= g
    return ar, ai, br, bi, d


class ExtScalar:
    __slots__ = ("_ar", "_ai", "_br", "_bi", "_d")

    def __init__(self, a_re=0, a_im=0, b_re=0, b_im=0):
        parts = [Fraction(p) for p in (a_re, a_im, b_re, b_im)]
        d = 1
        for p in parts:
            d = d * p.denominator // gcd(d, p.denominator)
        nums = [p.numerator * (d // p.denominator) for p in parts]
        self._ar, self._ai, self._br, self._bi, self._d = _norm5(*nums, d)

    @classmethod
    def _raw(cls, ar, ai, br, bi, d):
        # caller guarantees d > 0; normalises the common factor
        x = object.__new__(cls)
        if d == 1:
            x._ar, x._ai, x._br, x._bi, x._d = ar, ai, br, bi, 1
        else:
            x._ar, x._ai, x._br, x._bi, x._d = _norm5(ar, ai, br, bi, d)
        return x

    # component views, each in lowest terms
    @property
    def a_re(self) -> Fraction:
        return Fraction(self._ar, self._d)

    @property
    def a_im(self) -> Fraction:
        return Fraction(self._ai, self._d)

    @property
    def b_re(self) -> Fraction:
        return Fraction(self._br, self._d)

    @property
    def b_im(self) -> Fraction:
        return Fraction(self._bi, self._d)

    def parts(self):
        return self.a_re, self.a_im, self.b_re, self.b_im

    def is_zero(self) -> bool:
        return not (self._ar or self._ai or self._br or self._bi)

    def __bool__(self):
        return bool(self._ar or self._ai or self._br or self._bi)

    def is_rational(self) -> bool:
        return not (self._ai or self._br or self._bi)

    def is_gaussian(self) -> bool:
        return not (self._br or self._bi)

    def is_real(self) -> bool:
        """True when fixed by complex conjugation."""
        return not (self._ai or self._bi)

    def __eq__(self, other):
        if not isinstance(other, ExtScalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return (self._ar == other._ar and self._ai == other._ai and self._br == other._br
                and self._bi == other._bi and self._d == other._d)

    def __hash__(self):
        return hash((self._ar, self._ai, self._br, self._bi, self._d))

    def __neg__(self):
        x = object.__new__(ExtScalar)
        x._ar, x._ai, x._br, x._bi, x._d = -self._ar, -self._ai, -self._br, -self._bi, self._d
        return x

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, ExtScalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return ExtScalar._raw(self._ar + other._ar, self._ai + other._ai,
                                  self._br + other._br, self._bi + other._bi, d1)
        return ExtScalar._raw(self._ar * d2 + other._ar * d1, self._ai * d2 + other._ai * d1,
                              self._br * d2 + other._br * d1, self._bi * d2 + other._bi * d1,
                              d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ExtScalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, ExtScalar):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return ExtScalar._raw(self._ar * other, self._ai * other, self._br * other,
                                      self._bi * other, self._d)
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        a, b, c, e = self._ar, self._ai, self._br, self._bi
        p, q, r, s = other._ar, other._ai, other._br, other._bi
        if not (c or e or r or s):
            return ExtScalar._raw(a * p - b * q, a * q + b * p, 0, 0, self._d * other._d)
        return ExtScalar._raw(
            a * p - b * q + 2 * (c * r - e * s),
            a * q + b * p + 2 * (c * s + e * r),
            a * r - b * s + c * p - e * q,
            a * s + b * r + c * q + e * p,
            self._d * other._d)

    __rmul__ = __mul__

    def conjugate(self):
        x = object.__new__(ExtScalar)
        x._ar, x._ai, x._br, x._bi, x._d = self._ar, -self._ai, self._br, -self._bi, self._d
        return x

    def galois(self):
        """The automorphism sqrt2 -> -sqrt2."""
        x = object.__new__(ExtScalar)
        x._ar, x._ai, x._br, x._bi, x._d = self._ar, self._ai, -self._br, -self._bi, self._d
        return x

    def norm(self) -> Fraction:
        """Product over all four conjugates; a positive rational unless zero."""
        m = self * self.conjugate()
        n = m * m.galois()
        return n.a_re

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(i)[sqrt2]")
        # (A + B sqrt2)(A - B sqrt2) = A^2 - 2B^2 lies in Q(i)
        g = self.galois()
        n = self * g
        # n is Gaussian; invert via its complex conjugate
        nn = n._ar * n._ar + n._ai * n._ai
        inv_n = ExtScalar._raw(n._ar * n._d, -n._ai * n._d, 0, 0, nn)
        return g * inv_n

    def __truediv__(self, other):
        if not isinstance(other, ExtScalar):
            if isinstance(other, int) and other != 0:
                sgn = 1 if other > 0 else -1
                return ExtScalar._raw(self._ar * sgn, self._ai * sgn, self._br * sgn,
                                      self._bi * sgn, self._d * abs(other))
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_ipow(self, k: int):
        """Multiply by i**k without general multiplication."""
        k &= 3
        if k == 0:
            return self
        x = object.__new__(ExtScalar)
        a, b, c, e, d = self._ar, self._ai, self._br, self._bi, self._d
        if k == 1:
            x._ar, x._ai, x._br, x._bi = -b, a, -e, c
        elif k == 2:
            x._ar, x._ai, x._br, x._bi = -a, -b, -c, -e
        else:
            x._ar, x._ai, x._br, x._bi = b, -a, e, -c
        x._d = d
        return x

    def to_complex(self) -> complex:
        r2 = 2 ** 0.5
        return complex(self._ar + self._br * r2, self._ai + self._bi * r2) / self._d

    def to_json(self):
        def rat(n):
            f = Fraction(n, self._d)
            return [f.numerator, f.denominator]
        return {"a": {"re": rat(self._ar), "im": rat(self._ai)},
                "b": {"re": rat(self._br), "im": rat(self._bi)}}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, dict):
            def rat(pair):
                p, q = pair
                if q <= 0:
                    raise ValueError("denominator must be positive")
                return Fraction(p, q)
            a = obj.get("a", {"re": [0, 1], "im": [0, 1]})
            b = obj.get("b", {"re": [0, 1], "im": [0, 1]})
            return cls(rat(a.get("re", [0, 1])), rat(a.get("im", [0, 1])),
                       rat(b.get("re", [0, 1])), rat(b.get("im", [0, 1])))
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return cls(Fraction(obj))
        raise ValueError(f"cannot read scalar from {obj!r}")

    def __repr__(self):
        return f"ExtScalar({self})"

    def __str__(self):
        terms = []
        for val, unit in ((self.a_re, ""), (self.a_im, "i"), (self.b_re, "r2"), (self.b_im, "i*r2")):
            if val:
                s = str(val)
                terms.append(s + ("*" + unit if unit else ""))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def as_scalar(x) -> ExtScalar:
    if isinstance(x, ExtScalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return ExtScalar._raw(x, 0, 0, 0, 1)
    if isinstance(x, Rational):
        return ExtScalar(x)
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise TypeError("only integer complex literals convert exactly")
        return ExtScalar(int(x.real), int(x.imag))
    raise TypeError(f"not an exact scalar: {x!r}")


def arith(x: ExtScalar, y: ExtScalar, kind: str) -> ExtScalar:
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError(f"unknown operation {kind!r}")


def conjugate(x: ExtScalar) -> ExtScalar:
    return x.conjugate()


def embed(q) -> ExtScalar:
    return ExtScalar(Fraction(q))


ZERO = ExtScalar()
ONE = ExtScalar(1)
I = ExtScalar(0, 1)
SQRT2 = ExtScalar(0, 0, 1)
INV_SQRT2 = ExtScalar(0, 0, Fraction(1, 2))
HALF = ExtScalar(Fraction(1, 2))

"""Integer polynomials and lifts from F_p[x]."""
from __future__ import annotations

from math import gcd as igcd

from ..gfcore import NEG_INF, GFPoly


def _trim(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class ZPoly:
    """Dense polynomial over Z, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def from_terms(cls, terms):
        """From a dict {exponent: coefficient}."""
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(out)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    s = degree

    @property
    def a(self):
        return self.coeffs[-1] if self.coeffs else 0

    lc = a

    @property
    def l(self):  # noqa: E743
        return self.derivative().degree

    @property
    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.a == 1

    def content(self):
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
        return g

    def derivative(self):
        return ZPoly(i * c for i, c in enumerate(self.coeffs))._shift_down()

    def _shift_down(self):
        return ZPoly(self.coeffs[1:])

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Z", self.coeffs))

    def __repr__(self):
        return f"ZPoly({self})"

    def __str__(self):
        from ..gfcore import format_terms

        return format_terms(self.coeffs)

    def __add__(self, other):
        x, y = self.coeffs, other.coeffs
        if len(x) < len(y):
            x, y = y, x
        return ZPoly([u + v for u, v in zip(x, y)] + list(x[len(y) :]))

    def __neg__(self):
        return ZPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZPoly(c * other for c in self.coeffs)
        return ZPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        out = ZPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __call__(self, v):
        if isinstance(v, ZPoly):
            return compose(self, v)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def mod(self, m):
        """Reduce every coefficient modulo m (nonnegative representatives)."""
        return ZPoly(c % m for c in self.coeffs)


def _mul(x, y):
    if not x or not y:
        return []
    if min(len(x), len(y)) > 48:
        return _mul_kronecker(x, y)
    out = [0] * (len(x) + len(y) - 1)
    for i, u in enumerate(x):
        if u:
            for j, v in enumerate(y):
                out[i + j] += u * v
    return out


def _pack(cs, wb):
    return int.from_bytes(b"".join(c.to_bytes(wb, "little") for c in cs), "little")


def _unpack(z, n, wb):
    raw = z.to_bytes(n * wb, "little")
    return [int.from_bytes(raw[k : k + wb], "little") for k in range(0, n * wb, wb)]


def _mul_kronecker(x, y):
    """Integer polynomial product through one big-integer product per sign
    pattern (slots are byte aligned and hold nonnegative partial sums)."""
    import gmpy2

    bound = 2 * max(abs(c) for c in x) * max(abs(c) for c in y) * min(len(x), len(y))
    wb = (bound.bit_length() + 8) // 8
    n = len(x) + len(y) - 1
    xp = gmpy2.mpz(_pack([max(c, 0) for c in x], wb))
    xn = gmpy2.mpz(_pack([max(-c, 0) for c in x], wb))
    yp = gmpy2.mpz(_pack([max(c, 0) for c in y], wb))
    yn = gmpy2.mpz(_pack([max(-c, 0) for c in y], wb))
    pos = _unpack(int(xp * yp + xn * yn), n, wb)
    negs = _unpack(int(xp * yn + xn * yp), n, wb)
    return [u - v for u, v in zip(pos, negs)]


def compose(g, f):
    """g(f(x)) over Z by Horner."""
    if g.is_zero:
        return g
    acc = ZPoly.const(g.coeffs[-1])
    for c in reversed(g.coeffs[:-1]):
        acc = acc * f
        if c:
            acc = acc + ZPoly.const(c)
    return acc


def lift(f, convention="nonneg"):
    """A monic integer lift of a monic f over a prime field.

    ``nonneg`` takes representatives in [0, p), ``symmetric`` in (-p/2, p/2].
    """
    if not isinstance(f, GFPoly):
        raise TypeError("lift expects a GFPoly")
    F = f.field
    if not F.is_prime_field:
        raise ValueError("lifts are defined for prime fields only")
    if not f.is_monic():
        raise ValueError(f"lift needs a monic polynomial, got {f}")
    p = F.p
    if convention == "nonneg":
        return ZPoly(f.coeffs)
    if convention == "symmetric":
        return ZPoly(c - p if 2 * c > p else c for c in f.coeffs)
    raise ValueError(f"unknown lift convention {convention!r}")


def reduce_mod(F, p):
    """The image of an integer polynomial in F_p[x]."""
    return GFPoly(p, F.coeffs)

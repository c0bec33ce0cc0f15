"""Dense univariate polynomials over a FieldDesc.

GFPoly values are immutable.  Over F_2 the coefficients are bit-packed
into one int; over other prime fields they are a tuple of residues; over
extension fields a tuple of encoded elements.
"""
from __future__ import annotations

import numpy as np

from ..errors import DegreeCapError, FieldMismatchError
from . import _fp, _gf2
from .field import FieldDesc

NEG_INF = float("-inf")
DEFAULT_DEGREE_CAP = 100_000


def _gtrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


class GFPoly:
    __slots__ = ("field", "_c", "_hash")

    def __init__(self, field, coeffs=()):
        if isinstance(field, int):
            field = FieldDesc.prime(field)
        self.field = field
        self._hash = None
        if field.is_gf2:
            if isinstance(coeffs, int):
                raise TypeError("use GFPoly.from_bits for packed GF(2) input")
            bits = 0
            for i, c in enumerate(coeffs):
                if c % 2:
                    bits |= 1 << i
            self._c = bits
        elif field.is_prime_field:
            p = field.p
            self._c = tuple(_gtrim(c % p for c in coeffs))
        else:
            self._c = tuple(_gtrim(field.reduce(c) for c in coeffs))

    @classmethod
    def _raw(cls, field, rep):
        obj = cls.__new__(cls)
        obj.field = field
        obj._c = rep
        obj._hash = None
        return obj

    @classmethod
    def from_bits(cls, bits, field=None):
        field = field or FieldDesc.prime(2)
        if not field.is_gf2:
            raise FieldMismatchError("bit-packed input needs GF(2)")
        if bits < 0:
            raise ValueError("negative bit pattern")
        return cls._raw(field, bits)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls.const(field, 1)

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1)

    @classmethod
    def monomial(cls, field, e, c=1):
        if isinstance(field, int):
            field = FieldDesc.prime(field)
        if field.is_gf2:
            return cls._raw(field, (c % 2) << e)
        return cls(field, [0] * e + [c])

    # views --------------------------------------------------------------

    @property
    def coeffs(self):
        if self.field.is_gf2:
            b = self._c
            return tuple((b >> i) & 1 for i in range(b.bit_length()))
        return self._c

    @property
    def bits(self):
        if not self.field.is_gf2:
            raise FieldMismatchError("bits are only defined over GF(2)")
        return self._c

    @property
    def degree(self):
        if self.field.is_gf2:
            n = self._c.bit_length()
        else:
            n = len(self._c)
        return n - 1 if n else NEG_INF

    @property
    def lc(self):
        if self.is_zero:
            return 0
        return 1 if self.field.is_gf2 else self._c[-1]

    @property
    def is_zero(self):
        return not self._c

    def is_monic(self):
        return not self.is_zero and self.lc == 1

    def is_one(self):
        return self.degree == 0 and self.lc == 1

    def weight(self):
        if self.field.is_gf2:
            return bin(self._c).count("1")
        return sum(1 for c in self._c if c)

    def coeff(self, i):
        if self.field.is_gf2:
            return (self._c >> i) & 1
        return self._c[i] if 0 <= i < len(self._c) else 0

    def terms(self):
        """(exponent, coefficient) pairs for the nonzero terms, descending."""
        cs = self.coeffs
        return [(i, c) for i in range(len(cs) - 1, -1, -1) if (c := cs[i])]

    # protocol -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GFPoly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self._c))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"GFPoly({self.field!r}, {self})"

    def __str__(self):
        from .textfmt import format_poly

        return format_poly(self)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    def __pow__(self, e):
        return power(self, e)

    def __call__(self, value):
        if isinstance(value, GFPoly):
            return compose(self, value)
        return evaluate(self, value)

    def __reduce__(self):
        return (GFPoly._raw, (self.field, self._c))


def _check(a, b):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    return a.field


# ring operations --------------------------------------------------------


def add(a, b):
    F = _check(a, b)
    if F.is_gf2:
        return GFPoly._raw(F, a._c ^ b._c)
    x, y = a._c, b._c
    if len(x) < len(y):
        x, y = y, x
    if F.is_prime_field:
        p = F.p
        out = [(u + v) % p for u, v in zip(x, y)] + list(x[len(y):])
    else:
        out = [F.add(u, v) for u, v in zip(x, y)] + list(x[len(y):])
    return GFPoly._raw(F, tuple(_gtrim(out)))


def neg(a):
    F = a.field
    if F.is_gf2:
        return a
    if F.is_prime_field:
        return GFPoly._raw(F, tuple((-c) % F.p for c in a._c))
    return GFPoly._raw(F, tuple(F.neg(c) for c in a._c))


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    """Multiply every coefficient by the field element c."""
    F = a.field
    if F.is_gf2:
        return a if c % 2 else GFPoly.zero(F)
    if F.is_prime_field:
        return GFPoly(F, [u * c for u in a._c])
    return GFPoly._raw(F, tuple(_gtrim(F.mul(u, c) for u in a._c)))


def _generic_mul(F, x, y):
    if not x or not y:
        return []
    out = [0] * (len(x) + len(y) - 1)
    for i, u in enumerate(x):
        if u:
            for j, v in enumerate(y):
                if v:
                    out[i + j] = F.add(out[i + j], F.mul(u, v))
    return _gtrim(out)


def _generic_divmod(F, x, y):
    y = _gtrim(y)
    if not y:
        raise ZeroDivisionError("division by the zero polynomial")
    r = _gtrim(x)
    dy = len(y) - 1
    if len(r) - 1 < dy:
        return [], r
    inv = F.inv(y[-1])
    q = [0] * (len(r) - dy)
    for i in range(len(r) - 1 - dy, -1, -1):
        c = F.mul(r[i + dy], inv)
        if c:
            q[i] = c
            for j, v in enumerate(y):
                r[i + j] = F.sub(r[i + j], F.mul(c, v))
    return _gtrim(q), _gtrim(r[:dy])


def mul(a, b):
    F = _check(a, b)
    if F.is_gf2:
        return GFPoly._raw(F, _gf2.mul(a._c, b._c))
    if F.is_prime_field:
        return GFPoly._raw(F, tuple(_fp.mul(a._c, b._c, F.p)))
    return GFPoly._raw(F, tuple(_generic_mul(F, a._c, b._c)))


def square(a):
    if a.field.is_gf2:
        return GFPoly._raw(a.field, _gf2.sqr(a._c))
    return mul(a, a)


def power(a, e):
    if e < 0:
        raise ValueError("negative exponent")
    result = GFPoly.one(a.field)
    while e:
        if e & 1:
            result = mul(result, a)
        e >>= 1
        if e:
            a = square(a)
    return result


def divrem(a, b):
    """Quotient and remainder: a = q*b + r with deg r < deg b."""
    F = _check(a, b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if F.is_gf2:
        q, r = _gf2.divmod_(a._c, b._c)
        return GFPoly._raw(F, q), GFPoly._raw(F, r)
    if F.is_prime_field:
        q, r = _fp.divmod_(a._c, b._c, F.p)
    else:
        q, r = _generic_divmod(F, a._c, b._c)
    return GFPoly._raw(F, tuple(q)), GFPoly._raw(F, tuple(r))


def monic(a):
    if a.is_zero:
        raise ZeroDivisionError("the zero polynomial has no monic associate")
    if a.field.is_gf2 or a.lc == 1:
        return a
    return scale(a, a.field.inv(a.lc))


def gcd(a, b):
    """Monic greatest common divisor."""
    F = _check(a, b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if F.is_gf2:
        return GFPoly._raw(F, _gf2.gcd(a._c, b._c))
    x, y = a, b
    while not y.is_zero:
        x, y = y, divrem(x, y)[1]
    return monic(x)


def xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g monic."""
    F = _check(a, b)
    r0, r1 = a, b
    s0, s1 = GFPoly.one(F), GFPoly.zero(F)
    t0, t1 = GFPoly.zero(F), GFPoly.one(F)
    while not r1.is_zero:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if r0.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    inv = F.inv(r0.lc)
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(f):
    F = f.field
    if F.is_gf2:
        return GFPoly._raw(F, _gf2.derivative(f._c))
    p = F.p
    if F.is_prime_field:
        return GFPoly(F, [i * c for i, c in enumerate(f._c)][1:])
    return GFPoly._raw(F, tuple(_gtrim(F.mul(i % p, c) for i, c in enumerate(f._c))[1:]))


def evaluate(f, value):
    F = f.field
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, value), c)
    return acc


def compose(g, f, cap=None):
    """g(f(x)) by Horner's rule over polynomials."""
    F = _check(g, f)
    cap = DEFAULT_DEGREE_CAP if cap is None else cap
    dg, df = g.degree, f.degree
    if dg == NEG_INF:
        return g
    if dg * max(df, 0) > cap:
        raise DegreeCapError(f"composition degree {dg * df} exceeds cap {cap}")
    cs = g.coeffs
    acc = GFPoly.const(F, cs[-1])
    for c in reversed(cs[:-1]):
        acc = mul(acc, f)
        if c:
            acc = add(acc, GFPoly.const(F, c))
    return acc


def ext_field(modulus):
    """The extension F_q[x]/(modulus); its ``generator`` is the class of x."""
    return FieldDesc.extension(modulus)


# modular arithmetic -----------------------------------------------------


class ModContext:
    """Arithmetic in F_q[x]/(m) on raw representations, for hot loops.

    Over F_2 a residue is a packed int, over other prime fields an int64
    array, and over extension fields a list.
    """

    def __init__(self, m):
        if m.is_zero:
            raise ZeroDivisionError("zero modulus")
        if m.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        self.field = F = m.field
        self.modulus = m = monic(m)
        self.n = m.degree
        if F.is_gf2:
            self._red = _gf2.Reducer(m._c)
        elif F.is_prime_field:
            self._red = _fp.Reducer(list(m._c), F.p)
        else:
            self._red = None

    def lift(self, a):
        """Raw residue of a GFPoly."""
        F = self.field
        if a.field != F:
            raise FieldMismatchError(f"{a.field!r} vs {F!r}")
        if a.degree >= self.n:
            a = divrem(a, self.modulus)[1]
        if F.is_gf2:
            return a._c
        if F.is_prime_field:
            return np.asarray(a._c, np.int64)
        return list(a._c)

    def poly(self, r):
        F = self.field
        if F.is_gf2:
            return GFPoly._raw(F, r)
        if F.is_prime_field:
            return GFPoly._raw(F, tuple(_fp.trim(np.asarray(r).tolist())))
        return GFPoly._raw(F, tuple(_gtrim(r)))

    @property
    def x(self):
        return self.lift(GFPoly.x(self.field))

    @property
    def one(self):
        return self.lift(GFPoly.one(self.field))

    def equal(self, r, s):
        if self.field.is_gf2:
            return r == s
        if self.field.is_prime_field:
            r, s = _fp._trim_arr(np.asarray(r)), _fp._trim_arr(np.asarray(s))
            return len(r) == len(s) and bool(np.all(r == s))
        return _gtrim(r) == _gtrim(s)

    def mul(self, r, s):
        F = self.field
        if F.is_gf2:
            return self._red.mulmod(r, s)
        if F.is_prime_field:
            return self._red.mulmod(r, s)
        return _generic_divmod(F, _generic_mul(F, r, s), list(self.modulus._c))[1]

    def sqr(self, r):
        if self.field.is_gf2:
            return self._red.sqrmod(r)
        return self.mul(r, r)

    def pow(self, r, e):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, r)
            e >>= 1
            if e:
                r = self.sqr(r)
        return result

    def frobenius(self, r, k=1):
        """r^(q^k) by k successive q-th powerings."""
        q = self.field.q
        for _ in range(k):
            r = self.sqr(r) if q == 2 else self.pow(r, q)
        return r


def pow_mod(base, e, m):
    """base^e mod m by square-and-multiply."""
    _check(base, m)
    if e < 0:
        raise ValueError("negative exponent")
    ctx = ModContext(m)
    return ctx.poly(ctx.pow(ctx.lift(base), e))


def frobenius_x(m, k):
    """x^(q^k) mod m, q = |field|."""
    ctx = ModContext(m)
    return ctx.poly(ctx.frobenius(ctx.x, k))

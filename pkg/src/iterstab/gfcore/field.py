"""Finite fields F_p and their extensions, with elements encoded as ints.

A prime field element is its residue in [0, p).  An element of a degree-n
extension of a field with q elements is the int sum(c_i * q**i), where
c_0 + c_1 x + ... + c_{n-1} x^{n-1} is its residue modulo the defining
polynomial and each c_i is itself an encoded element of the base field.
Over F_2 towers this is plain bit concatenation, so addition is XOR.
"""
from __future__ import annotations

import functools

from ..errors import ReducibleModulusError

# extensions up to this size get exp/log/Zech tables; larger ones compute directly
TABLE_LIMIT = 1 << 13


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FieldDesc:
    """A finite field: F_p, or base[x]/(modulus) for a monic irreducible modulus.

    Attributes: ``p`` characteristic, ``t`` absolute degree over F_p,
    ``q`` = p**t elements, ``base`` (None for a prime field), ``degree``
    over the base, ``mod_coeffs`` the encoded modulus coefficients.
    """

    __slots__ = ("p", "t", "q", "base", "degree", "mod_coeffs", "_tables", "_hash")

    def __init__(self, p, base=None, mod_coeffs=None):
        if base is None:
            if not (isinstance(p, int) and 2 <= p < 2**31 and is_prime(p)):
                raise ValueError(f"characteristic must be a prime below 2^31, got {p!r}")
            self.p, self.t, self.q, self.degree = p, 1, p, 1
            self.mod_coeffs = None
        else:
            mod_coeffs = tuple(mod_coeffs)
            n = len(mod_coeffs) - 1
            if n < 1 or mod_coeffs[-1] != 1:
                raise ReducibleModulusError("modulus must be monic of degree >= 1")
            self.p, self.degree = base.p, n
            self.t = base.t * n
            self.q = base.q**n
            self.mod_coeffs = mod_coeffs
        self.base = base
        self._tables = None
        self._hash = hash((self.p, self.base, self.mod_coeffs))

    # construction -------------------------------------------------------

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def prime(p):
        return FieldDesc(p)

    @staticmethod
    def extension(modulus, check=True):
        """The field modulus.field[x]/(modulus); ``modulus`` is a GFPoly."""
        from .poly import GFPoly

        if not isinstance(modulus, GFPoly):
            raise TypeError("modulus must be a GFPoly")
        if modulus.degree < 1 or not modulus.is_monic():
            raise ReducibleModulusError("modulus must be monic of degree >= 1")
        if check:
            from ..factorcheck import rabin_irreducible

            if not rabin_irreducible(modulus).irreducible:
                raise ReducibleModulusError(f"{modulus} is reducible over {modulus.field}")
        return _extension_cached(modulus.field, modulus.coeffs)

    # identity -----------------------------------------------------------

    @property
    def is_prime_field(self):
        return self.base is None

    @property
    def is_gf2(self):
        return self.base is None and self.p == 2

    @property
    def modulus(self):
        if self.base is None:
            return None
        from .poly import GFPoly

        return GFPoly(self.base, self.mod_coeffs)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, FieldDesc)
            and self._hash == other._hash
            and self.p == other.p
            and self.mod_coeffs == other.mod_coeffs
            and self.base == other.base
        )

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        if self.base is None:
            return (FieldDesc.prime, (self.p,))
        return (_extension_cached, (self.base, self.mod_coeffs))

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.base.q}^{self.degree})"

    def __str__(self):
        from .textfmt import format_field

        return format_field(self)

    # element encoding ---------------------------------------------------

    def digits(self, a):
        """Coefficients (over the base) of the residue encoded by ``a``."""
        qb = self.base.q
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, qb)
            out.append(r)
        return out

    def from_digits(self, ds):
        qb = self.base.q
        a = 0
        for d in reversed(ds):
            a = a * qb + d
        return a

    @property
    def generator(self):
        """The class of x in base[x]/(modulus): a root of the modulus."""
        if self.base is None:
            raise ValueError("a prime field has no adjoined root")
        if self.degree == 1:
            return self.base.neg(self.mod_coeffs[0])
        return self.base.q

    def elements(self):
        return range(self.q)

    def reduce(self, c):
        """Map an int into the field; for prime fields this is c mod p."""
        if self.base is None:
            return c % self.p
        if not 0 <= c < self.q:
            raise ValueError(f"{c} does not encode an element of {self!r}")
        return c

    # arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.base is None:
            s = a + b
            return s - self.p if s >= self.p else s
        if self.p == 2:
            return a ^ b
        tab = self._get_tables()
        if tab is not None:
            return _zech_add(tab, a, b, self.q)
        base = self.base
        return self.from_digits([base.add(x, y) for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        if self.base is None:
            return (-a) % self.p
        if self.p == 2:
            return a
        base = self.base
        return self.from_digits([base.neg(x) for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.base is None:
            return a * b % self.p
        if not a or not b:
            return 0
        tab = self._get_tables()
        if tab is not None:
            exp, log, _ = tab
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._direct_mul(a, b)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.base is None:
            return pow(a, -1, self.p)
        tab = self._get_tables()
        if tab is not None:
            exp, log, _ = tab
            return exp[(-log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self.base is None:
            return pow(a, e, self.p)
        if not a:
            return 0 if e else 1
        tab = self._get_tables()
        if tab is not None:
            exp, log, _ = tab
            return exp[log[a] * e % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._direct_mul(result, a)
            a = self._direct_mul(a, a)
            e >>= 1
        return result

    def is_square(self, a):
        """Euler's criterion; in characteristic 2 every element is a square."""
        if not a or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    # internals ----------------------------------------------------------

    def _direct_mul(self, a, b):
        base = self.base
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        m = self.mod_coeffs
        n = self.degree
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c:
                for j in range(n):
                    prod[k - n + j] = base.sub(prod[k - n + j], base.mul(c, m[j]))
        return self.from_digits(prod[:n])

    def _get_tables(self):
        if self._tables is None:
            self._tables = _build_tables(self) if self.q <= TABLE_LIMIT else False
        return self._tables or None


@functools.lru_cache(maxsize=256)
def _extension_cached(base, mod_coeffs):
    return FieldDesc(base.p, base=base, mod_coeffs=mod_coeffs)


def _find_primitive(F):
    order = F.q - 1
    factors = prime_factors(order)
    one = 1

    def dpow(a, e):
        result = one
        while e:
            if e & 1:
                result = F._direct_mul(result, a)
            a = F._direct_mul(a, a)
            e >>= 1
        return result

    for g in range(2, F.q):
        if all(dpow(g, order // r) != one for r in factors):
            return g
    return 1  # F.q == 2


def _build_tables(F):
    q = F.q
    g = _find_primitive(F)
    exp = [0] * (q - 1)
    log = [0] * q
    a = 1
    for k in range(q - 1):
        exp[k] = a
        log[a] = k
        a = F._direct_mul(a, g)
    # Zech logarithm: zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
    base = F.base
    zech = [0] * (q - 1)
    for k in range(q - 1):
        ds = F.digits(exp[k])
        ds[0] = base.add(ds[0], 1)
        v = F.from_digits(ds)
        zech[k] = log[v] if v else -1
    return exp, log, zech


def _zech_add(tab, a, b, q):
    if not a:
        return b
    if not b:
        return a
    exp, log, zech = tab
    la, lb = log[a], log[b]
    z = zech[(lb - la) % (q - 1)]
    if z < 0:
        return 0
    return exp[(la + z) % (q - 1)]


def prime_field(p):
    return FieldDesc.prime(p)

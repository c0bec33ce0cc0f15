"""Bit-packed kernels for GF(2)[x].

A polynomial is a nonnegative int whose bit i is the coefficient of x^i.
Large products go through Kronecker substitution: every bit is widened
to a 16- or 32-bit slot, the two integers are multiplied with GMP, and
the parity of each slot of the product is the carry-less result.
"""
import gmpy2
import numpy as np

# below this many bits in the shorter operand, shift-and-xor wins
KRONECKER_MIN_BITS = 96
SPREAD_MIN_BITS = 512

_SPREAD = np.array(
    [sum(((i >> j) & 1) << (2 * j) for j in range(8)) for i in range(256)],
    dtype="<u2",
)
_SPREAD_BYTES = [int(v).to_bytes(2, "little") for v in _SPREAD]


def degree(a):
    return a.bit_length() - 1


def _widen(a, nbits, dtype):
    raw = np.frombuffer(a.to_bytes((nbits + 7) // 8, "little"), np.uint8)
    return np.unpackbits(raw, bitorder="little")[:nbits].astype(dtype)


def _mul_kronecker(a, b, na, nb):
    dt = np.dtype("<u2") if min(na, nb) < (1 << 16) else np.dtype("<u4")
    A = gmpy2.mpz(int.from_bytes(_widen(a, na, dt).tobytes(), "little"))
    B = gmpy2.mpz(int.from_bytes(_widen(b, nb, dt).tobytes(), "little"))
    C = gmpy2.to_binary(A * B)[2:]
    slots = np.frombuffer(C + bytes(-len(C) % dt.itemsize), dt)
    packed = np.packbits((slots & 1).astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _mul_shift_xor(a, b):
    c = 0
    while b:
        low = b & -b
        c ^= a << (low.bit_length() - 1)
        b ^= low
    return c


def mul(a, b):
    """Carry-less product of two bit-packed polynomials."""
    if not a or not b:
        return 0
    na, nb = a.bit_length(), b.bit_length()
    if nb > na:
        a, b, na, nb = b, a, nb, na
    if nb < KRONECKER_MIN_BITS:
        return _mul_shift_xor(a, b)
    return _mul_kronecker(a, b, na, nb)


def sqr(a):
    """Square by bit interleaving (the cross terms cancel in characteristic 2)."""
    if not a:
        return 0
    nbytes = (a.bit_length() + 7) // 8
    raw = a.to_bytes(nbytes, "little")
    if nbytes * 8 < SPREAD_MIN_BITS:
        return int.from_bytes(b"".join(_SPREAD_BYTES[x] for x in raw), "little")
    return int.from_bytes(_SPREAD[np.frombuffer(raw, np.uint8)].tobytes(), "little")


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    q = 0
    while da >= db:
        shift = da - db
        a ^= b << shift
        q |= 1 << shift
        da = a.bit_length()
    return q, a


def mod(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def gcd(a, b):
    """Monic gcd (every nonzero GF(2) polynomial is monic)."""
    while b:
        a, b = b, mod(a, b)
    return a


def derivative(a):
    # odd-exponent coefficients survive, shifted down by one
    return (a >> 1) & int("01" * ((a.bit_length() + 1) // 2 + 1), 2) if a else 0


class Reducer:
    """Barrett reduction modulo a fixed polynomial m of degree n >= 1.

    Valid for inputs of degree < 2n; for polynomials the Barrett quotient
    is exact, so no correction step is needed.
    """

    __slots__ = ("m", "n", "mu")

    def __init__(self, m):
        if m.bit_length() < 2:
            raise ValueError("modulus must have degree >= 1")
        self.m = m
        self.n = m.bit_length() - 1
        self.mu = divmod_(1 << (2 * self.n), m)[0]

    def reduce(self, a):
        n = self.n
        if a.bit_length() <= n:
            return a
        if a.bit_length() > 2 * n:
            return mod(a, self.m)
        q = mul(a >> n, self.mu) >> n
        return a ^ mul(q, self.m)

    def mulmod(self, a, b):
        return self.reduce(mul(a, b))

    def sqrmod(self, a):
        return self.reduce(sqr(a))

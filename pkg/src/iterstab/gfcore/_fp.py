"""Kernels for F_p[x], p an odd prime below 2^31.

Polynomials are lists (or int64 arrays) of residues, lowest degree first.
Long products use Kronecker substitution: coefficients are laid out in
byte-aligned slots wide enough to hold any coefficient of the integer
product, the two integers are multiplied with GMP, and every slot of the
result is reduced mod p.
"""
import gmpy2
import numpy as np

SCHOOLBOOK_MAX_WORK = 2048
NUMPY_DIVISION_MIN = 64


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _trim_arr(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if len(nz) else a[:0]


def _pack(arr, w):
    n = len(arr)
    b8 = np.ascontiguousarray(arr, dtype="<u8").view(np.uint8).reshape(n, 8)
    if w <= 8:
        buf = b8[:, :w]
    else:
        buf = np.zeros((n, w), np.uint8)
        buf[:, :8] = b8
    return gmpy2.mpz(int.from_bytes(np.ascontiguousarray(buf).tobytes(), "little"))


def _unpack(z, n_out, w, p):
    raw = gmpy2.to_binary(z)[2:]
    raw = raw + bytes(n_out * w - len(raw))
    cols = np.frombuffer(raw, np.uint8)[: n_out * w].reshape(n_out, w)
    acc = cols[:, w - 1].astype(np.int64) % p
    for j in range(w - 2, -1, -1):
        acc = (acc * 256 + cols[:, j]) % p
    return acc


def mul_arr(a, b, p):
    """Product of two int64 coefficient arrays (entries in [0, p))."""
    la, lb = len(a), len(b)
    if not la or not lb:
        return np.zeros(0, np.int64)
    bound = min(la, lb) * (p - 1) ** 2
    if la * lb <= SCHOOLBOOK_MAX_WORK and bound < (1 << 63):
        return np.convolve(a, b) % p
    w = max(1, (bound.bit_length() + 7) // 8)
    return _unpack(_pack(a, w) * _pack(b, w), la + lb - 1, w, p)


def mul(a, b, p):
    if not a or not b:
        return []
    if len(a) * len(b) <= SCHOOLBOOK_MAX_WORK:
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        return trim(c % p for c in res)
    out = mul_arr(np.asarray(a, np.int64), np.asarray(b, np.int64), p)
    return trim(out.tolist())


def divmod_(a, b, p):
    b = trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = trim(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    inv = pow(b[-1], -1, p)
    nq = len(a) - db
    if db >= NUMPY_DIVISION_MIN:
        r = np.asarray(a, np.int64)
        bb = np.asarray(b, np.int64)
        q = np.zeros(nq, np.int64)
        for i in range(nq - 1, -1, -1):
            c = int(r[i + db]) * inv % p
            if c:
                r[i : i + db + 1] = (r[i : i + db + 1] - c * bb) % p
                q[i] = c
        return trim(q.tolist()), trim(r[:db].tolist())
    r = list(a)
    q = [0] * nq
    for i in range(nq - 1, -1, -1):
        c = r[i + db] * inv % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] - c * bj) % p
    return trim(q), trim(r[:db])


class Reducer:
    """Barrett reduction modulo a fixed polynomial of degree n >= 1 over F_p.

    Inputs and outputs are int64 arrays; inputs must have degree < 2n.
    """

    __slots__ = ("p", "n", "m", "mu")

    def __init__(self, m, p):
        m = trim(m)
        if len(m) < 2:
            raise ValueError("modulus must have degree >= 1")
        inv = pow(m[-1], -1, p)
        m = [c * inv % p for c in m]
        self.p = p
        self.n = len(m) - 1
        self.m = np.asarray(m, np.int64)
        self.mu = np.asarray(divmod_([0] * (2 * self.n) + [1], m, p)[0], np.int64)

    def reduce(self, a):
        n, p = self.n, self.p
        a = _trim_arr(np.asarray(a, np.int64))
        if len(a) <= n:
            return a
        if len(a) > 2 * n:
            return np.asarray(divmod_(a.tolist(), self.m.tolist(), p)[1], np.int64)
        q = mul_arr(a[n:], self.mu, p)[n:]
        qm = mul_arr(q, self.m, p)[:n]
        r = a[:n].copy()
        r[: len(qm)] -= qm
        return _trim_arr(r % p)

    def mulmod(self, a, b):
        return self.reduce(mul_arr(a, b, self.p))

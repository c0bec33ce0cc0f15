"""Resultants and discriminants over Z and over odd finite fields.

Convention: for F of degree s with leading coefficient a and roots x_i,
and G of degree t with leading coefficient b and roots y_j,

    Res(F, G) = a^t prod G(x_i) = (-1)^(st) b^s prod F(y_j),

which is the determinant of the Sylvester matrix.
"""
from __future__ import annotations

from ..errors import CharacteristicError
from ..gfcore import GFPoly, derivative, divrem
from .zpoly import ZPoly

EXACT_DEGREE_CAP = 1000


def _prem(A, B):
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, lists ascending."""
    r = list(A)
    db = len(B) - 1
    lb = B[-1]
    e = len(r) - len(B) + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for j in range(db):
            r[shift + j] -= c * B[j]
        r.pop()
        e -= 1
        while r and not r[-1]:
            r.pop()
    if e > 0 and r:
        m = lb**e
        r = [v * m for v in r]
    return r


def _content(cs):
    from math import gcd

    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def resultant(F, G, cap=None):
    """Exact integer resultant by the subresultant PRS."""
    if F.is_zero or G.is_zero:
        raise ValueError("resultant with the zero polynomial")
    cap = EXACT_DEGREE_CAP if cap is None else cap
    if max(F.degree, G.degree) > cap:
        raise ValueError(f"exact resultant refuses degree > {cap}")
    A, B = list(F.coeffs), list(G.coeffs)
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    sign = 1
    if da < db:
        A, B, da, db = B, A, db, da
        if da % 2 and db % 2:
            sign = -1
    ca, cb = _content(A), _content(B)
    t = ca**db * cb**da
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = g * h**delta
        B = [c // div for c in R]
        g = A[-1]
        h = g**delta // h ** (delta - 1) if delta >= 1 else h
        if len(B) == 1:
            dA = len(A) - 1
            h = B[0] ** dA // h ** (dA - 1) if dA >= 1 else h
            return sign * t * h


def sylvester_matrix(F, G):
    """The (s+t) x (s+t) Sylvester matrix, rows of F shifted t times then G shifted s times."""
    s, t = F.degree, G.degree
    n = s + t
    fs, gs = F.coeffs[::-1], G.coeffs[::-1]
    rows = []
    for i in range(t):
        rows.append([0] * i + list(fs) + [0] * (n - s - 1 - i))
    for i in range(s):
        rows.append([0] * i + list(gs) + [0] * (n - t - 1 - i))
    return rows


def bareiss_det(M):
    """Fraction-free determinant of an integer matrix."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - mik * rk[j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


def resultant_sylvester(F, G):
    return bareiss_det(sylvester_matrix(F, G))


def _disc_from_res(s, a, l, res):
    sgn = -1 if (s * (s - 1) // 2) % 2 else 1
    e = s - l - 2
    if e >= 0:
        return sgn * a**e * res
    q, r = divmod(res, a ** (-e))
    if r:
        raise ArithmeticError("leading coefficient does not divide Res(F, F')")
    return sgn * q


def discriminant(F, cap=None):
    """Disc(F) = (-1)^(s(s-1)/2) a^(s-l-2) Res(F, F') with l = deg F'."""
    s = F.degree
    if s < 2:
        raise ValueError("discriminant needs degree >= 2")
    dF = F.derivative()
    return _disc_from_res(s, F.a, dF.degree, resultant(F, dF, cap=cap))


# over odd finite fields -----------------------------------------------------


def _require_odd(F):
    if F.p == 2:
        raise CharacteristicError("field resultants are for odd characteristic; lift instead")


def resultant_field(F, G):
    """Res(F, G) in F_q by the Euclidean recurrence
    Res(G, F) = lc(G)^(deg F - deg R) Res(G, R) with R = F mod G."""
    if F.field != G.field:
        from ..errors import FieldMismatchError

        raise FieldMismatchError("resultant over different fields")
    K = F.field
    _require_odd(K)
    if F.is_zero or G.is_zero:
        raise ValueError("resultant with the zero polynomial")
    acc = 1
    while True:
        s, t = F.degree, G.degree
        if s == 0:
            return K.mul(acc, K.pow(F.lc, t))
        if t == 0:
            return K.mul(acc, K.pow(G.lc, s))
        # Res(F, G) = (-1)^(st) Res(G, F)
        if (s * t) % 2:
            acc = K.neg(acc)
        R = divrem(F, G)[1]
        if R.is_zero:
            return 0
        acc = K.mul(acc, K.pow(G.lc, s - R.degree))
        F, G = G, R


def disc_field(f):
    """Disc(f) in F_q for odd q; zero when f has a repeated root."""
    K = f.field
    _require_odd(K)
    s = f.degree
    if s < 2:
        raise ValueError("discriminant needs degree >= 2")
    df = derivative(f)
    if df.is_zero:
        return 0
    res = resultant_field(f, df)
    l = df.degree  # noqa: E741
    sgn = 1 if (s * (s - 1) // 2) % 2 == 0 else K.neg(1)
    return K.mul(sgn, K.mul(K.pow(f.lc, s - l - 2), res))

"""Determinants and discriminants modulo 2^k by odd-pivot elimination.

When det M is odd, M is invertible mod 2, so every column of the
remaining block has an odd entry; dividing by an odd pivot is exact in
Z/2^k and the low k bits of the determinant come out exactly.
"""
from __future__ import annotations

import numpy as np

from ..errors import NoOddPivotError
from .zpoly import ZPoly, _mul

SYLVESTER_DIM_CAP = 20000
GUARD_BITS = 32
BLOCKED_BITS = 16
BLOCK = 256
CHUNK_ROWS = 1024


def _reduce_rows(M, k):
    m = 1 << k
    return np.array([[int(c) % m for c in row] for row in M], dtype=np.uint64)


def det_mod_2k(M, k=GUARD_BITS):
    """det M mod 2^k for an integer matrix with odd determinant (k <= 32)."""
    if not 1 <= k <= 32:
        raise ValueError("k must lie in [1, 32]")
    A = M if isinstance(M, np.ndarray) and M.dtype == np.uint64 else _reduce_rows(M, k)
    A = A.copy()
    n = A.shape[0]
    mod = 1 << k
    mask = np.uint64(mod - 1)
    det = 1
    for j in range(n):
        odd = np.flatnonzero(A[j:, j] & np.uint64(1))
        if not len(odd):
            raise NoOddPivotError(f"no odd pivot in column {j}: determinant is even")
        piv = j + int(odd[0])
        if piv != j:
            A[[j, piv]] = A[[piv, j]]
            det = -det
        pv = int(A[j, j])
        det = det * pv % mod
        if j + 1 == n:
            break
        inv = np.uint64(pow(pv, -1, mod))
        low = (A[j + 1 :, j] * inv) & mask
        nz = np.flatnonzero(low)
        if len(nz):
            idx = j + 1 + nz
            A[idx, j + 1 :] = (A[idx, j + 1 :] - np.outer(low[nz], A[j, j + 1 :])) & mask
    return det % mod


def det_mod_2k_blocked(M, k=BLOCKED_BITS, block=BLOCK):
    """Blocked right-looking variant for large matrices.

    Entries are kept as exact integers in float64 so the trailing update is
    one BLAS product per block; k <= 16 keeps every partial sum below 2^53.
    """
    if not 1 <= k <= 16:
        raise ValueError("k must lie in [1, 16]")
    mod = 1 << k
    A = np.mod(np.asarray(M, dtype=np.float64), mod)
    n = A.shape[0]
    det = 1
    for j0 in range(0, n, block):
        j1 = min(j0 + block, n)
        for j in range(j0, j1):
            odd = np.flatnonzero(np.mod(A[j:, j], 2))
            if not len(odd):
                raise NoOddPivotError(f"no odd pivot in column {j}: determinant is even")
            piv = j + int(odd[0])
            if piv != j:
                A[[j, piv]] = A[[piv, j]]
                det = -det
            pv = int(A[j, j])
            det = det * pv % mod
            if j + 1 == n:
                break
            inv = pow(pv, -1, mod)
            low = np.mod(A[j + 1 :, j] * inv, mod)
            A[j + 1 :, j] = low
            if j + 1 < j1:
                A[j + 1 :, j + 1 : j1] = np.mod(A[j + 1 :, j + 1 : j1] - np.outer(low, A[j, j + 1 : j1]), mod)
        if j1 == n:
            break
        # U12 = L11^-1 A12
        L11 = A[j0:j1, j0:j1]
        U12 = A[j0:j1, j1:]
        for i in range(1, j1 - j0):
            U12[i] = np.mod(U12[i] - L11[i, :i] @ U12[:i], mod)
        L21 = A[j1:, j0:j1]
        for r0 in range(j1, n, CHUNK_ROWS):
            r1 = min(r0 + CHUNK_ROWS, n)
            blk = A[r0:r1, j1:]
            blk -= L21[r0 - j1 : r1 - j1] @ U12
            np.mod(blk, mod, out=blk)
    return det % mod


def _disc_sign_factor(F, mod):
    s = F.degree
    l = F.derivative().degree  # noqa: E741
    sgn = -1 if (s * (s - 1) // 2) % 2 else 1
    a = F.a
    e = s - l - 2
    if e < 0:
        if a % 2 == 0:
            raise NoOddPivotError("even leading coefficient: cannot divide mod 2^k")
        af = pow(a, e, mod)
    else:
        af = pow(a, e, mod)
    return sgn * af


def multiplication_matrix_mod(F, G, k):
    """Matrix of multiplication by G on Z[x]/(F) in the basis 1..x^(s-1),
    entries mod 2^k; F must be monic. Its determinant is Res(F, G)."""
    if F.a != 1:
        raise ValueError("multiplication-matrix form needs a monic F")
    s = F.degree
    mod = 1 << k
    f = np.array([c % mod for c in F.coeffs[:-1]], dtype=np.int64)
    g = [c % mod for c in G.coeffs]
    row = np.zeros(s, dtype=np.int64)
    # reduce G mod F first
    gz = ZPoly(g)
    if gz.degree >= s:
        gz = _zmod_monic(gz, F, mod)
    row[: len(gz.coeffs)] = gz.coeffs
    out = np.empty((s, s), dtype=np.float64)
    for i in range(s):
        out[i] = row
        top = row[-1]
        row = np.roll(row, 1)
        row[0] = 0
        if top:
            row = (row - top * f) % mod
    return out


def _zmod_monic(G, F, mod):
    g = [c % mod for c in G.coeffs]
    s = F.degree
    f = F.coeffs
    for i in range(len(g) - 1, s - 1, -1):
        c = g[i]
        if c:
            for j in range(s + 1):
                g[i - s + j] = (g[i - s + j] - c * f[j]) % mod
    return ZPoly(g[:s])


def compose_mod(g, f, k):
    """g(f(x)) with coefficients reduced mod 2^k after every step."""
    mod = 1 << k
    fc = [c % mod for c in f.coeffs]
    acc = [g.coeffs[-1] % mod]
    for c in reversed(g.coeffs[:-1]):
        acc = [v % mod for v in _mul(acc, fc)]
        acc[0] = (acc[0] + c) % mod
    return ZPoly(acc)


def disc_mod_2k(F, k=GUARD_BITS, form="sylvester"):
    """Disc(F) mod 2^k through a determinant mod 2^k.

    ``sylvester`` uses the (2s-1)-dimensional Sylvester matrix of F and F';
    ``companion`` uses the s-dimensional matrix of multiplication by F'
    modulo a monic F, evaluated by the blocked routine.
    """
    from .zpoly import ZPoly as _Z  # noqa: F401

    s = F.degree
    if s < 2:
        raise ValueError("discriminant needs degree >= 2")
    dF = F.derivative()
    if form == "sylvester":
        from .resultant import sylvester_matrix

        if 2 * s - 1 > SYLVESTER_DIM_CAP:
            raise ValueError(f"Sylvester dimension {2 * s - 1} exceeds {SYLVESTER_DIM_CAP}")
        det = det_mod_2k(sylvester_matrix(F, dF), k)
    elif form == "companion":
        k = min(k, BLOCKED_BITS)
        det = det_mod_2k_blocked(multiplication_matrix_mod(F, dF, k), k)
    else:
        raise ValueError(f"unknown determinant form {form!r}")
    mod = 1 << k
    return _disc_sign_factor(F, mod) * det % mod

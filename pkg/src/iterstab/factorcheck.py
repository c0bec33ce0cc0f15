"""Irreducibility tests, factor counting and a brute-force factorization oracle."""
from __future__ import annotations

import enum
import functools
import math
import random
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BudgetExceeded, NotSquarefreeError, OracleCapError
from .gfcore import GFPoly, ModContext, derivative, divrem, gcd, monic, monic_polys, prime_factors, sub

PROBE_THRESHOLD = 2000
PROBE_DMAX = 24
BERLEKAMP_CAP = 4096
ORACLE_CAP = 24


class Method(str, enum.Enum):
    RABIN = "rabin"
    TRIAL_DIVISION = "trial_division"
    SMALL_FACTOR_PROBE = "small_factor_probe"


@dataclass(frozen=True)
class IrredVerdict:
    irreducible: bool
    method: Method
    witness: Optional[GFPoly] = None

    def __post_init__(self):
        w = self.witness
        if w is not None and not (w.degree >= 1):
            raise ValueError("witness must be nonconstant")


def _tick(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


def is_squarefree(f):
    if f.is_zero:
        raise ValueError("the zero polynomial")
    if f.degree < 1:
        return True
    df = derivative(f)
    if df.is_zero:
        return False
    return gcd(f, df).degree == 0


def _x_minus(ctx, r):
    return sub(ctx.poly(r), GFPoly.x(ctx.field))


def rabin_irreducible(f, deadline=None):
    """Rabin's deterministic test.

    f of degree n is irreducible iff x^(q^n) = x mod f and
    gcd(x^(q^(n/l)) - x, f) = 1 for every prime l dividing n.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("irreducibility is undefined for constants")
    f = monic(f)
    n = f.degree
    if n == 1:
        return IrredVerdict(True, Method.RABIN)
    ctx = ModContext(f)
    x = ctx.x
    targets = {n // ell for ell in prime_factors(n)}
    X = x
    for k in range(1, n + 1):
        X = ctx.frobenius(X)
        if k % 64 == 0:
            _tick(deadline)
        if k in targets:
            g = gcd(f, _x_minus(ctx, X))
            if g.degree >= 1:
                w = g if g.degree < n else small_factor_probe(f, k, deadline=deadline)
                return IrredVerdict(False, Method.RABIN, w)
        if k < n and ctx.equal(X, x):
            # every irreducible factor has degree dividing k < n
            return IrredVerdict(False, Method.RABIN, small_factor_probe(f, k, deadline=deadline))
    if ctx.equal(X, x):
        return IrredVerdict(True, Method.RABIN)
    g = gcd(f, derivative(f)) if not derivative(f).is_zero else None
    w = g if g is not None and 1 <= g.degree < n else None
    return IrredVerdict(False, Method.RABIN, w)


def small_factor_probe(f, dmax, deadline=None):
    """A nontrivial factor of f of degree <= dmax, or None.

    Distinct-degree sweep: gcd(f, x^(q^d) - x) collects every irreducible
    factor whose degree divides d.
    """
    if f.is_zero or f.degree < 2:
        return None
    f = monic(f)
    n = f.degree
    ctx = ModContext(f)
    X = ctx.x
    for d in range(1, min(dmax, n // 2) + 1):
        X = ctx.frobenius(X)
        _tick(deadline)
        g = gcd(f, _x_minus(ctx, X))
        if g.degree < 1:
            continue
        if g.degree < n:
            return g
        # all irreducible factors have degree exactly d
        return _equal_degree_factor(f, d)
    return None


def _sort_key(g):
    return (g.degree, g.coeffs[::-1])


def _equal_degree_factor(f, d, seed=0x5EED):
    """Split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus);
    returns the smaller of the first two parts found."""
    n = f.degree
    if n == d:
        return None
    F = f.field
    ctx = ModContext(f)
    rng = random.Random(seed ^ n)
    q = F.q
    while True:
        a = GFPoly(F, [rng.randrange(q) for _ in range(n)])
        if a.degree < 1:
            continue
        g = gcd(f, a)
        if 1 <= g.degree < n:
            break
        r = ctx.lift(a)
        if q % 2 == 0:
            k = q.bit_length() - 1
            acc = r
            t = r
            for _ in range(k * d - 1):
                t = ctx.sqr(t)
                acc = ctx.poly(acc) + ctx.poly(t)
                acc = ctx.lift(acc)
            cand = ctx.poly(acc)
        else:
            cand = ctx.poly(ctx.pow(r, (q**d - 1) // 2)) - GFPoly.one(F)
        if cand.is_zero:
            continue
        g = gcd(f, cand)
        if 1 <= g.degree < n:
            break
    other = divrem(f, g)[0]
    return min(g, other, key=_sort_key)


def is_irreducible(f, probe_threshold=PROBE_THRESHOLD, probe_dmax=PROBE_DMAX, deadline=None):
    """Verdict with a cheap small-factor pre-pass at large degree."""
    if f.degree > probe_threshold:
        w = small_factor_probe(f, probe_dmax, deadline=deadline)
        if w is not None:
            return IrredVerdict(False, Method.SMALL_FACTOR_PROBE, w)
    return rabin_irreducible(f, deadline=deadline)


# factor counting ------------------------------------------------------------


def _rank_gf2(rows):
    pivots = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            piv = pivots.get(h)
            if piv is None:
                pivots[h] = r
                break
            r ^= piv
    return len(pivots)


def _rank_fp(M, p):
    M = M % p
    nrows, ncols = M.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(M[rank:, col])
        if not len(nz):
            continue
        piv = rank + nz[0]
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        inv = pow(int(M[rank, col]), -1, p)
        M[rank] = M[rank] * inv % p
        below = M[rank + 1 :, col]
        rows = np.flatnonzero(below)
        if len(rows):
            idx = rank + 1 + rows
            M[idx] = (M[idx] - np.outer(M[idx, col], M[rank])) % p
        rank += 1
    return rank


def _rank_generic(F, M):
    M = [list(r) for r in M]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        M[rank] = [F.mul(v, inv) for v in M[rank]]
        for i in range(rank + 1, nrows):
            c = M[i][col]
            if c:
                M[i] = [F.sub(u, F.mul(c, v)) for u, v in zip(M[i], M[rank])]
        rank += 1
    return rank


def berlekamp_factor_count(f, cap=BERLEKAMP_CAP):
    """Number of distinct monic irreducible factors of a squarefree f,
    as the nullity of Q - I for the Frobenius matrix Q of F_q[x]/(f)."""
    if f.is_zero or f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if not is_squarefree(f):
        raise NotSquarefreeError(f"{f} is not squarefree")
    f = monic(f)
    n = f.degree
    if n > cap:
        raise ValueError(f"degree {n} exceeds the Berlekamp cap {cap}")
    if n == 1:
        return 1
    F = f.field
    ctx = ModContext(f)
    xq = ctx.frobenius(ctx.x)
    row = ctx.one
    if F.is_gf2:
        rows = []
        for i in range(n):
            rows.append(row ^ (1 << i))
            row = ctx.mul(row, xq)
        return n - _rank_gf2(rows)
    if F.is_prime_field:
        M = np.zeros((n, n), np.int64)
        for i in range(n):
            r = np.asarray(row, np.int64)
            M[i, : len(r)] = r
            M[i, i] -= 1
            row = ctx.mul(row, xq)
        return n - _rank_fp(M, F.p)
    M = []
    for i in range(n):
        r = list(row) + [0] * (n - len(row))
        r[i] = F.sub(r[i], 1)
        M.append(r)
        row = ctx.mul(row, xq)
    return n - _rank_generic(F, M)


# brute-force oracle ---------------------------------------------------------


def oracle_cap_for(q, cap=ORACLE_CAP):
    """Degree limit for brute_factorize over a field with q elements."""
    return max(2, int(cap / math.log2(q)))


@functools.lru_cache(maxsize=None)
def _irreducibles(F, d):
    """Monic irreducibles of degree d, by sieving against lower degrees."""
    small = [g for e in range(1, d // 2 + 1) for g in _irreducibles(F, e)]
    out = []
    for cand in monic_polys(F, d):
        if all(not divrem(cand, g)[1].is_zero for g in small):
            out.append(cand)
    return tuple(out)


def brute_factorize(f, cap=None):
    """(leading coefficient, sorted list of monic irreducible factors with
    multiplicity), by trial division with every monic irreducible of degree
    at most deg(f)/2."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no factorization")
    F = f.field
    cap = oracle_cap_for(F.q) if cap is None else cap
    if f.degree > cap:
        raise OracleCapError(f"degree {f.degree} exceeds oracle cap {cap}")
    lead = f.lc
    rem = monic(f)
    factors = []
    d = 1
    while 2 * d <= rem.degree:
        for g in _irreducibles(F, d):
            while True:
                quo, r = divrem(rem, g)
                if not r.is_zero:
                    break
                factors.append(g)
                rem = quo
            if 2 * d > rem.degree:
                break
        d += 1
    if rem.degree >= 1:
        factors.append(rem)
    return lead, sorted(factors, key=_sort_key)


def trial_division_irreducible(f):
    _, factors = brute_factorize(f)
    return IrredVerdict(len(factors) == 1, Method.TRIAL_DIVISION, None if len(factors) == 1 else factors[0])


def factor_count(f):
    """Number of irreducible factors with multiplicity, via the oracle."""
    return len(brute_factorize(f)[1])

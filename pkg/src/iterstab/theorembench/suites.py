"""Seeded randomized suites; each returns a list of (ok, detail) pairs."""
from __future__ import annotations

import random

from ..factorcheck import brute_factorize, is_squarefree, rabin_irreducible
from ..gfcore import FieldDesc, GFPoly, monic_polys, parse_field
from ..zdisc import (
    ZPoly,
    comp_trinomial_check,
    disc_compose_check,
    res_disc_identity,
    stickelberger_parity,
    swan_parity,
)
from ..zdisc.classify import Parity
from .checkers import capelli_check
from .newton import SymFuncTable, newton_e_from_p, newton_p_from_e
from .outcome import Status

G_LIST = ("x^2+x+1", "x^4+x+1", "x^4+x^3+1")


def newton_suite(trials=100, seed=0, K=12):
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        m = rng.randint(1, 8)
        roots = [rng.randint(-9, 9) for _ in range(m)]
        tab = SymFuncTable.from_roots(roots, K)
        ps = newton_p_from_e(tab.e, K)
        back = newton_e_from_p(ps, m)
        ok = ps == list(tab.p) and back == list(tab.e) and tab.holds()
        out.append((ok, {"roots": roots}))
    return out


def newton_field_suite(trials=100, seed=0, modulus=11, K=10):
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        m = rng.randint(1, 8)
        e = [rng.randrange(modulus) for _ in range(m)]
        ps = newton_p_from_e(e, K, modulus=modulus)
        ok = newton_e_from_p(ps, m, modulus=modulus) == e
        out.append((ok, {"e": e, "modulus": modulus}))
    return out


def _random_irreducible(rng, F, n):
    while True:
        f = GFPoly(F, [rng.randrange(F.q) for _ in range(n)] + [1])
        if rabin_irreducible(f).irreducible:
            return f


# base fields for the Capelli suite, with q^n <= 2^16 enforced per draw
CAPELLI_FIELDS = ("2", "3", "5", "7", "2^2", "3^2", "2^3")


def capelli_instances(trials=100, seed=0, qn_cap=1 << 16):
    rng = random.Random(seed)
    for _ in range(trials):
        F = parse_field(rng.choice(CAPELLI_FIELDS))
        nmax = 1
        while F.q ** (nmax + 1) <= qn_cap and nmax < 6:
            nmax += 1
        n = rng.randint(1, nmax)
        f = _random_irreducible(rng, F, n)
        dg = rng.randint(1, 3)
        g = GFPoly(F, [rng.randrange(F.q) for _ in range(dg)] + [1 + rng.randrange(F.q - 1)])
        yield f, g, GFPoly.one(F)


def capelli_suite(trials=100, seed=0):
    out = []
    for f, g, h in capelli_instances(trials, seed):
        oc = capelli_check(f, g, h)
        out.append((oc.status == Status.AGREES, oc.to_record()))
    return out


def resdisc_suite(trials=50, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        m = rng.randint(2, 4)
        n = rng.randint(1, 4)
        u = ZPoly([rng.randint(-3, 3) for _ in range(m)] + [1])
        v = ZPoly([rng.randint(-3, 3) for _ in range(n)] + [1])
        lhs, rhs = res_disc_identity(u, v)
        out.append((lhs == rhs, {"u": str(u), "v": str(v), "lhs": lhs, "rhs": rhs}))
    return out


def comp_trinomial_instances(g_list=G_LIST):
    """All (n <= 4, odd s < 2n, g) satisfying the hypotheses."""
    from ..errors import HypothesisViolation
    from ..gfcore import parse_terms

    for n in range(1, 5):
        for s in range(1, 2 * n, 2):
            for gt in g_list:
                g = ZPoly.from_terms(parse_terms(gt))
                try:
                    comp_trinomial_check(n, s, g)
                except HypothesisViolation:
                    continue
                yield n, s, g


def _random_g(rng):
    while True:
        m2 = rng.choice((2, 4, 6))
        g = ZPoly([rng.randint(-3, 3) for _ in range(m2)] + [1])
        if g(1) % 2:
            return g


def comp_trinomial_suite(trials=50, seed=0):
    from ..errors import HypothesisViolation

    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        n = rng.randint(1, 4)
        s = rng.randrange(1, 2 * n, 2)
        g = _random_g(rng)
        try:
            r = comp_trinomial_check(n, s, g)
        except HypothesisViolation:
            continue
        out.append((r == 1, {"n": n, "s": s, "g": str(g), "residue": r}))
    return out


def disc_compose_suite(trials=50, seed=0):
    from ..errors import HypothesisViolation

    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        n = rng.randint(1, 4)
        s = rng.randrange(1, 2 * n, 2)
        g = _random_g(rng)
        try:
            ok = disc_compose_check(n, s, g)
        except HypothesisViolation:
            continue
        out.append((ok, {"n": n, "s": s, "g": str(g)}))
    return out


def parity_agrees(f):
    """Parity criterion vs the factor count of the trial-division oracle."""
    cls = swan_parity(f) if f.field.is_gf2 else stickelberger_parity(f)
    r = len(brute_factorize(f)[1])
    return (cls.parity_conclusion == Parity.R_EVEN) == (r % 2 == 0)


def parity_exhaustive(p, dmax, dmin=2):
    """(checked, mismatches) over all monic squarefree f with dmin <= deg <= dmax."""
    F = FieldDesc.prime(p)
    checked, bad = 0, []
    for d in range(dmin, dmax + 1):
        for f in monic_polys(F, d):
            if not is_squarefree(f):
                continue
            checked += 1
            if not parity_agrees(f):
                bad.append(str(f))
    return checked, bad


def parity_suite(trials=100, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        p = rng.choice((2, 3, 5, 7))
        dmax = 12 if p == 2 else 6
        F = FieldDesc.prime(p)
        d = rng.randint(2, dmax)
        f = GFPoly(F, [rng.randrange(p) for _ in range(d)] + [1])
        if not is_squarefree(f):
            continue
        out.append((parity_agrees(f), {"field": p, "poly": str(f)}))
    return out


SUITES = {
    "newton": newton_suite,
    "capelli": capelli_suite,
    "resdisc": resdisc_suite,
    "comp-trinomial": comp_trinomial_suite,
    "disc-compose": disc_compose_suite,
    "parity": parity_suite,
}

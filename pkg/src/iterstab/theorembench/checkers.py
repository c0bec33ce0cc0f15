"""Executable checks of the stability and reducibility statements.

Every checker returns a TheoremOutcome. Instances outside a statement's
hypotheses produce a GATE outcome and are never counted either way.
"""
from __future__ import annotations

from ..factorcheck import (
    berlekamp_factor_count,
    brute_factorize,
    is_squarefree,
    oracle_cap_for,
    rabin_irreducible,
)
from ..gfcore import FieldDesc, GFPoly, compose, ext_field, gcd, is_prime, monic, parse_field, power
from ..iterlab import stability_scan
from ..zdisc import Parity, disc_field, stickelberger_parity
from .outcome import Status, TheoremOutcome, gate

EXT_CAP = 1 << 20
# Berlekamp cross-check on g(f) only below this degree; parity decides above
XCHECK_DEGREE = 512


def _sparse(F, terms):
    if not terms:
        return GFPoly.zero(F)
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] = F.add(out[e], F.reduce(c))
    return GFPoly(F, out)


def _scan_summary(rep):
    lv = rep.reducible_level
    obs = {"stable_depth": rep.stable_depth, "stop_reason": rep.stop_reason}
    if lv is not None:
        obs["first_reducible"] = lv.n
        obs["method"] = lv.verdict.method.value
    w = str(lv.verdict.witness) if lv is not None and lv.verdict.witness is not None else None
    return obs, w


def _irreducible_independent(P):
    """Field-level verdict: trial-division oracle when small, Rabin otherwise."""
    if P.degree <= oracle_cap_for(P.field.q):
        return len(brute_factorize(P)[1]) == 1
    return rabin_irreducible(P).irreducible


# Capelli -------------------------------------------------------------------


def capelli_check(f, g, h, ext_cap=EXT_CAP):
    """h^n f(g/h) is irreducible over F_q iff g - alpha*h is irreducible over
    F_q(alpha), alpha a root of the irreducible f of degree n."""
    tid = "capelli"
    inst = {"field": str(f.field), "f": str(f), "g": str(g), "h": str(h)}
    pred = "irreducible(h^n f(g/h)) == irreducible(g - alpha*h over F_q(alpha))"
    F = f.field
    if g.field != F or h.field != F:
        return gate(tid, inst, pred, "f, g, h must share a field")
    if f.degree < 1 or not rabin_irreducible(f).irreducible:
        return gate(tid, inst, pred, "f must be irreducible")
    if h.is_zero:
        return gate(tid, inst, pred, "h must be nonzero")
    n = f.degree
    if F.q**n > ext_cap:
        return gate(tid, inst, pred, f"q^n = {F.q ** n} exceeds the extension cap {ext_cap}")
    if gcd(g, h).degree > 0:
        return gate(tid, inst, pred, "g and h must be coprime")
    D = max(g.degree if not g.is_zero else 0, h.degree)
    if D < 1:
        return gate(tid, inst, pred, "g and h are both constant")
    fc = monic(f).coeffs
    P = GFPoly.zero(F)
    for i, c in enumerate(fc):
        if c:
            P = P + power(g, i) * power(h, n - i) * GFPoly.const(F, c)
    if P.degree != n * D:
        return gate(tid, inst, pred, "degree of h^n f(g/h) drops below n*max(deg g, deg h)")
    lhs = _irreducible_independent(P)
    E = ext_field(monic(f))
    alpha = E.generator
    L = max(len(g.coeffs), len(h.coeffs))
    gc = list(g.coeffs) + [0] * (L - len(g.coeffs))
    hc = list(h.coeffs) + [0] * (L - len(h.coeffs))
    Q = GFPoly(E, [E.sub(u, E.mul(alpha, v)) for u, v in zip(gc, hc)])
    rhs = rabin_irreducible(Q).irreducible if Q.degree >= 1 else False
    obs = {"p": str(P), "p_irreducible": lhs, "ext_irreducible": rhs, "ext_field": str(E)}
    return TheoremOutcome(tid, inst, pred, obs, Status.AGREES if lhs == rhs else Status.DISAGREES)


# characteristic two trinomials ---------------------------------------------


def trim_even_poly(n, s):
    F = FieldDesc.prime(2)
    return _sparse(F, {2 * n: 1, 2 * n - s: 1, 0: 1})


def check_trim_even(n, s, depth=3, cap=None, time_budget=None):
    """x^(2n) + x^(2n-s) + 1 over F_2 has a reducible iterate at level <= 3."""
    tid = "trim-even"
    inst = {"n": n, "s": s}
    pred = "reducible iterate at level <= 3"
    if n < 1 or not 1 <= s < 2 * n:
        return gate(tid, inst, pred, "need n >= 1 and 1 <= s < 2n")
    f = trim_even_poly(n, s)
    rep = stability_scan(f, depth, cap=cap, time_budget=time_budget)
    obs, w = _scan_summary(rep)
    if s % 2 == 0:
        half = _sparse(f.field, {n: 1, n - s // 2: 1, 0: 1})
        obs["square_identity"] = half * half == f
    lv = rep.first_reducible
    red = rep.reducible_level
    if red is not None and red.degree <= oracle_cap_for(2):
        from ..iterlab import iterate

        obs["factors"] = [str(u) for u in brute_factorize(iterate(f, red.n))[1]]
    if lv is not None and lv <= 3 and obs.get("square_identity", True):
        status = Status.AGREES
    elif rep.exhausted and rep.stop_reason != "max_n":
        status = Status.ANOMALY
    else:
        status = Status.DISAGREES
    return TheoremOutcome(tid, inst, pred, obs, status, witness=w)


# odd characteristic ------------------------------------------------------------


def _field(p, t):
    return FieldDesc.prime(p) if t == 1 else parse_field(f"{p}^{t}")


def check_odd_even_trinomial(p, t, n, s, a, b, g=None, field=None):
    """f = x^(2n) + a x^(2s+1) + b over F_(p^t) with p | n: g(f) is reducible
    for monic g of even degree (g = f when omitted)."""
    tid = "odd-trinomial"
    inst = {"p": p, "t": t, "n": n, "s": s, "a": a, "b": b, "g": None if g is None else str(g)}
    pred = "g(f) has an even number of irreducible factors, hence is reducible"
    if not (is_prime(p) and p % 2 == 1):
        return gate(tid, inst, pred, "p must be an odd prime")
    if t < 1 or n < 1 or s < 0:
        return gate(tid, inst, pred, "need t, n >= 1 and s >= 0")
    if n % p:
        return gate(tid, inst, pred, "p must divide n")
    if not 2 * s + 1 < 2 * n:
        return gate(tid, inst, pred, "need 2s+1 < 2n")
    F = field or _field(p, t)
    try:
        nonzero = F.reduce(a) != 0 and F.reduce(b) != 0
    except ValueError:
        nonzero = False
    if not nonzero:
        return gate(tid, inst, pred, "a and b must be nonzero field elements")
    f = _sparse(F, {2 * n: 1, 2 * s + 1: a, 0: b})
    g = f if g is None else g
    if g.field != F or not g.is_monic() or g.degree < 2 or g.degree % 2:
        return gate(tid, inst, pred, "g must be monic of even degree over the same field")
    G = compose(g, f)
    obs = {"degree": G.degree}
    if not is_squarefree(G):
        obs["squarefree"] = False
        return TheoremOutcome(tid, inst, pred, obs, Status.AGREES, witness="repeated factor")
    cls = stickelberger_parity(G)
    obs["squarefree"] = True
    obs["parity"] = cls.parity_conclusion.value
    ok = cls.parity_conclusion == Parity.R_EVEN
    if G.degree <= XCHECK_DEGREE:
        r = berlekamp_factor_count(G)
        obs["factor_count"] = r
        if (r % 2 == 0) != ok:
            return TheoremOutcome(tid, inst, pred, obs, Status.ANOMALY, reason="parity and factor count disagree")
    return TheoremOutcome(tid, inst, pred, obs, Status.AGREES if ok else Status.DISAGREES)


def check_xp_ax2_b(p, a, b, depth=3, cap=None, time_budget=None):
    """f = x^p + a x^2 + b over F_p, p != 1 mod 8, ab = -3: not stable.

    Checks the intermediate values Disc(f) = 6 and Disc(ff) = -36 and looks
    for a reducible iterate up to ``depth``.
    """
    tid = "xp-ax2-b"
    inst = {"p": p, "a": a, "b": b}
    pred = "Disc(f) = 6, Disc(ff) = -36 in F_p, and a reducible iterate at level <= 3"
    if not (is_prime(p) and p % 2 == 1):
        return gate(tid, inst, pred, "p must be an odd prime")
    if p % 8 == 1:
        return gate(tid, inst, pred, "p = 1 mod 8 is excluded")
    if a % p == 0 or b % p == 0:
        return gate(tid, inst, pred, "a and b must be nonzero")
    if (a * b + 3) % p:
        return gate(tid, inst, pred, "need ab = -3")
    F = FieldDesc.prime(p)
    f = _sparse(F, {p: 1, 2: a, 0: b})
    ff = compose(f, f)
    d1, d2 = disc_field(f), disc_field(ff)
    rep = stability_scan(f, depth, cap=cap, time_budget=time_budget)
    obs, w = _scan_summary(rep)
    sgn = 1 if (p * (p - 1) // 2) % 2 == 0 else -1
    obs.update(
        disc_f=d1,
        disc_ff=d2,
        disc_f_is_6=d1 == 6 % p,
        disc_ff_is_minus_36=d2 == -36 % p,
        # Res(f, f') = 6, so with the discriminant sign kept Disc(f) = (-1)^(p(p-1)/2) * 6
        disc_f_is_signed_6=d1 == (sgn * 6) % p,
    )
    lv = rep.first_reducible
    found = lv is not None and lv <= 3
    if obs["disc_f_is_6"] and obs["disc_ff_is_minus_36"] and found:
        status = Status.AGREES
    elif rep.exhausted and rep.stop_reason not in ("max_n", "reducible") and obs["disc_f_is_6"]:
        status = Status.ANOMALY
    else:
        status = Status.DISAGREES
    return TheoremOutcome(tid, inst, pred, obs, status, witness=w)


# higher weight -------------------------------------------------------------------


def parse_higher_weight(kind, f):
    """(g, s) such that f has the declared shape, or None.

    g_of_x8: f = x^(2n) + x^s + g(x^8) + 1 with 8 deg g < s < 2n.
    g_of_x4: f = g(x^4) + x^s + 1 with s < 4 deg g.
    """
    if not f.field.is_gf2 or f.degree < 2:
        return None
    E = sorted(e for e, _ in f.terms())
    if 0 not in E:
        return None
    top = E[-1]
    if kind == "g_of_x8":
        if top % 2:
            return None
        rest = E[1:-1]
        for s in rest:
            others = [e for e in rest if e != s]
            if others and all(e % 8 == 0 and e < s for e in others):
                g = GFPoly.from_bits(sum(1 << (e // 8) for e in others))
                if 8 * g.degree < s < top:
                    return g, s
        return None
    if kind == "g_of_x4":
        rest = E[1:]
        for s in rest:
            others = [e for e in rest if e != s]
            if others and all(e % 4 == 0 for e in others) and s < top:
                g = GFPoly.from_bits(sum(1 << (e // 4) for e in others))
                if s < 4 * g.degree:
                    return g, s
        return None
    raise ValueError(f"unknown shape kind {kind!r}")


def check_higher_weight(kind, f, depth=3, cap=None, time_budget=None):
    tid = f"higher-weight:{kind}"
    inst = {"kind": kind, "f": str(f), "depth": depth}
    pred = f"reducible iterate at level <= {depth}"
    if kind not in ("g_of_x8", "g_of_x4"):
        return gate(tid, inst, pred, f"unknown kind {kind!r}")
    shape = parse_higher_weight(kind, f)
    if shape is None:
        return gate(tid, inst, pred, "f does not match the declared shape")
    g, s = shape
    rep = stability_scan(f, depth, cap=cap, time_budget=time_budget)
    obs, w = _scan_summary(rep)
    obs.update(g=str(g), s=s)
    lv = rep.first_reducible
    # no proof to refute: a survivor is an anomaly for manual study
    status = Status.AGREES if lv is not None else Status.ANOMALY
    return TheoremOutcome(tid, inst, pred, obs, status, witness=w)


def check_odoni(p, depth=3, cap=None, time_budget=None):
    """x^p - x - 1 over F_p is not stable: look for a reducible iterate."""
    tid = "odoni"
    inst = {"p": p, "depth": depth}
    pred = f"reducible iterate at level <= {depth}"
    if not is_prime(p):
        return gate(tid, inst, pred, "p must be prime")
    F = FieldDesc.prime(p)
    f = _sparse(F, {p: 1, 1: -1, 0: -1})
    rep = stability_scan(f, depth, cap=cap, time_budget=time_budget)
    obs, w = _scan_summary(rep)
    status = Status.AGREES if rep.first_reducible is not None else Status.ANOMALY
    return TheoremOutcome(tid, inst, pred, obs, status, witness=w)

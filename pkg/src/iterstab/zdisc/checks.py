"""Resultant-level identities used in the reducibility proofs for trinomials."""
from __future__ import annotations

from ..errors import HypothesisViolation
from .resultant import discriminant, resultant
from .zpoly import ZPoly, compose


def res_disc_identity(u, v):
    """Both sides of Res(u(v), u'(v)) = [(-1)^(m(m-1)/2) a^(l+2-m) b^(ml)]^n Disc(u)^n
    for monic u, v (a = b = 1), m = deg u, n = deg v, l = deg u'."""
    if not (u.is_monic() and v.is_monic()):
        raise HypothesisViolation("u and v must be monic")
    m, n = u.degree, v.degree
    if m < 2 or n < 1:
        raise HypothesisViolation("need deg u >= 2 and deg v >= 1")
    lhs = resultant(compose(u, v), compose(u.derivative(), v))
    sgn = -1 if (m * (m - 1) // 2) % 2 else 1
    rhs = (sgn * discriminant(u)) ** n
    return lhs, rhs


def res_disc_identity_check(u, v):
    lhs, rhs = res_disc_identity(u, v)
    return lhs == rhs


def trinomial(n, s):
    """x^(2n) + x^(2n-s) + 1 over Z."""
    return ZPoly.from_terms({2 * n: 1, 2 * n - s: 1, 0: 1})


def _gate(n, s, g):
    if n < 1:
        raise HypothesisViolation("n must be positive")
    if s % 2 == 0 or not 1 <= s < 2 * n:
        raise HypothesisViolation(f"s = {s} must be odd with 1 <= s < 2n")
    if not g.is_monic() or g.degree < 2 or g.degree % 2:
        raise HypothesisViolation("g must be monic of even degree >= 2")
    if g(1) % 2 == 0:
        raise HypothesisViolation(f"g(1) = {g(1)} is even")
    if n == s:
        m2 = g.degree
        if g.coeffs[m2 - 1] % 2:
            raise HypothesisViolation("n = s needs an even coefficient of x^(2m-1) in g")


def comp_trinomial_check(n, s, g):
    """Res(g(f), f') mod 8 for f = x^(2n)+x^(2n-s)+1; predicted to be 1."""
    _gate(n, s, g)
    f = trinomial(n, s)
    return resultant(compose(g, f), f.derivative()) % 8


def disc_compose_check(n, s, g):
    """Disc(g(f)) = Disc(g)^(2n) mod 8, both sides exact."""
    _gate(n, s, g)
    f = trinomial(n, s)
    lhs = discriminant(compose(g, f)) % 8
    rhs = pow(discriminant(g), 2 * n, 8)
    return lhs == rhs

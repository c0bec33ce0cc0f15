"""Newton identities between power sums and elementary symmetric functions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..errors import CharacteristicError


def _check_char(modulus, bound):
    if modulus is not None and modulus <= bound:
        raise CharacteristicError(f"characteristic {modulus} must exceed {bound}")


def newton_p_from_e(e, K, m=None, modulus=None):
    """Power sums p_1..p_K of a root multiset with elementary functions e_1..e_m.

    Division free: p_k = sum_{i<min(k,m+1)} (-1)^(i-1) e_i p_(k-i), plus
    (-1)^(k-1) k e_k when k <= m.
    """
    e = list(e)
    m = len(e) if m is None else m
    if m < 1 or len(e) != m:
        raise ValueError("need e_1..e_m with m >= 1")
    _check_char(modulus, K)
    ps = [m]  # p_0
    for k in range(1, K + 1):
        acc = 0
        for i in range(1, min(k - 1, m) + 1):
            term = e[i - 1] * ps[k - i]
            acc += term if i % 2 else -term
        if k <= m:
            term = k * e[k - 1]
            acc += term if k % 2 else -term
        ps.append(acc % modulus if modulus else acc)
    return ps[1:]


def newton_e_from_p(p, m, modulus=None):
    """Elementary symmetric e_1..e_m from power sums p_1..p_m.

    k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i, so this needs division by k <= m.
    """
    p = list(p)
    if len(p) < m:
        raise ValueError(f"need at least {m} power sums")
    _check_char(modulus, m)
    es = [1]
    for k in range(1, m + 1):
        acc = 0
        for i in range(1, k + 1):
            term = es[k - i] * p[i - 1]
            acc += term if i % 2 else -term
        if modulus:
            es.append(acc * pow(k, -1, modulus) % modulus)
        else:
            q, r = divmod(acc, k)
            if r:
                raise ArithmeticError("power sums are not those of an integer multiset")
            es.append(q)
    return es[1:]


def elementary_from_roots(roots):
    es = [1]
    for r in roots:
        es = [1] + [es[i] + r * es[i - 1] for i in range(1, len(es))] + [r * es[-1]]
    return es[1:]


def power_sums_from_roots(roots, K):
    return [sum(r**k for r in roots) for k in range(1, K + 1)]


def relation_residual(e, ps, k, m):
    """Left side of the normalized relation with l = min(k, m) and p_0 = m:

        p_k - p_(k-1) e_1 + ... + (-1)^(l-1) p_(k-l+1) e_(l-1) + (-1)^l (l/m) p_(k-l) e_l

    computed with exact fractions (zero when the relation holds).
    """
    full = [m] + list(ps)
    ee = [1] + list(e)
    l = min(k, m)  # noqa: E741
    acc = Fraction(full[k])
    for i in range(1, l):
        term = full[k - i] * ee[i]
        acc += -term if i % 2 else term
    last = Fraction(l, m) * full[k - l] * ee[l]
    acc += last if l % 2 == 0 else -last
    return acc


@dataclass(frozen=True)
class SymFuncTable:
    m: int
    e: Tuple[int, ...]
    p: Tuple[int, ...]
    modulus: Optional[int] = None

    @classmethod
    def from_roots(cls, roots, K):
        roots = list(roots)
        return cls(len(roots), tuple(elementary_from_roots(roots)), tuple(power_sums_from_roots(roots, K)))

    @classmethod
    def from_e(cls, e, K, modulus=None):
        e = tuple(e)
        return cls(len(e), e, tuple(newton_p_from_e(e, K, modulus=modulus)), modulus)

    def residuals(self):
        return [relation_residual(self.e, self.p, k, self.m) for k in range(1, len(self.p) + 1)]

    def holds(self):
        if self.modulus:
            return all(r.denominator % self.modulus and r.numerator % self.modulus == 0 for r in self.residuals())
        return all(r == 0 for r in self.residuals())

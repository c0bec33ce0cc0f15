"""Enumeration of monic polynomials and default field moduli."""
import itertools

from .poly import GFPoly


def monic_polys(F, d):
    """All monic polynomials of degree d over F, in lexicographic order
    of the coefficient vector (c_0, ..., c_{d-1}) read from the top."""
    if F.is_gf2:
        for low in range(1 << d):
            yield GFPoly.from_bits((1 << d) | low, F)
        return
    for tail in itertools.product(range(F.q), repeat=d):
        yield GFPoly(F, tuple(reversed(tail)) + (1,))


def default_modulus(F, t):
    """The first monic irreducible of degree t in ``monic_polys`` order."""
    from ..factorcheck import rabin_irreducible

    for f in monic_polys(F, t):
        if f.coeff(0) and rabin_irreducible(f).irreducible:
            return f
    raise ValueError(f"no irreducible of degree {t} over {F!r}")  # unreachable

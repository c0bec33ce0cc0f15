"""Factor-count parity from discriminants.

Over F_2 (Swan, Dalen): for squarefree f of degree s with r irreducible
factors and any monic integer lift F, r = s mod 2 iff Disc(F) = 1 mod 8.
Over odd F_q (Pellet, Stickelberger): r = s mod 2 iff Disc(f) is a
square in F_q.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from ..errors import CharacteristicError, NotSquarefreeError
from ..factorcheck import is_squarefree
from .modular import GUARD_BITS, disc_mod_2k
from .resultant import disc_field, discriminant
from .zpoly import lift

EXACT_AUTO_LIMIT = 500


class Parity(str, enum.Enum):
    R_EVEN = "r_even"
    R_ODD = "r_odd"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class DiscClassification:
    # exact integer, a field element, or None when only the residue is known
    disc: Optional[int]
    mod8: Optional[int]
    parity_conclusion: Parity
    s: int
    square: Optional[bool] = None
    strategy: str = "exact"

    @property
    def implies_reducible(self):
        """An even factor count forces reducibility."""
        return self.parity_conclusion == Parity.R_EVEN


def disc_mod8(F, strategy="exact", form="sylvester"):
    """Disc(F) mod 8, exactly or through a determinant mod 2^k."""
    if F.degree < 2:
        raise ValueError("discriminant needs degree >= 2")
    if strategy == "exact":
        return discriminant(F) % 8
    if strategy in ("det_mod_2k", "det2k"):
        return disc_mod_2k(F, GUARD_BITS, form=form) % 8
    raise ValueError(f"unknown strategy {strategy!r}")


def _parity_from(s, same):
    same_parity_as_s = s % 2 == 0
    r_even = same == same_parity_as_s
    return Parity.R_EVEN if r_even else Parity.R_ODD


def swan_parity(f, convention="nonneg", strategy=None):
    """Factor-count parity of a squarefree f over F_2 from Disc(lift) mod 8."""
    if not f.field.is_gf2:
        raise CharacteristicError("swan_parity is for F_2; use stickelberger_parity")
    s = f.degree
    if s < 1:
        raise ValueError("need a nonconstant polynomial")
    if not is_squarefree(f):
        raise NotSquarefreeError(f"{f} is not squarefree")
    if s == 1:
        return DiscClassification(1, 1, Parity.R_ODD, 1, strategy="trivial")
    F = lift(f, convention)
    if strategy is None:
        strategy = "exact" if s <= EXACT_AUTO_LIMIT else "det_mod_2k"
    if strategy == "exact":
        d = discriminant(F)
        m8 = d % 8
    else:
        d = None
        m8 = disc_mod8(F, strategy)
    if m8 not in (1, 5):
        raise NotSquarefreeError(f"Disc = {m8} mod 8 is not 1 or 5; the input is not squarefree")
    return DiscClassification(d, m8, _parity_from(s, m8 == 1), s, strategy=strategy)


def stickelberger_parity(f):
    """Factor-count parity of a squarefree f over odd F_q from the
    quadratic character of Disc(f)."""
    K = f.field
    if K.p == 2:
        raise CharacteristicError("stickelberger_parity needs odd characteristic")
    s = f.degree
    if s < 1:
        raise ValueError("need a nonconstant polynomial")
    if not is_squarefree(f):
        raise NotSquarefreeError(f"{f} is not squarefree")
    if s == 1:
        return DiscClassification(1, None, Parity.R_ODD, 1, square=True, strategy="field")
    d = disc_field(f)
    if d == 0:
        raise NotSquarefreeError("Disc(f) = 0")
    sq = K.is_square(d)
    return DiscClassification(d, None, _parity_from(s, sq), s, square=sq, strategy="field")


def classify(f, **kw):
    """Dispatch on the characteristic."""
    return swan_parity(f, **kw) if f.field.is_gf2 else stickelberger_parity(f)

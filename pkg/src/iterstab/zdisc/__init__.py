"""Integer lifts, resultants, discriminants and parity classification."""
from .checks import (
    comp_trinomial_check,
    disc_compose_check,
    res_disc_identity,
    res_disc_identity_check,
    trinomial,
)
from .classify import DiscClassification, Parity, classify, disc_mod8, stickelberger_parity, swan_parity
from .modular import compose_mod, det_mod_2k, det_mod_2k_blocked, disc_mod_2k, multiplication_matrix_mod
from .resultant import (
    bareiss_det,
    disc_field,
    discriminant,
    resultant,
    resultant_field,
    resultant_sylvester,
    sylvester_matrix,
)
from .zpoly import ZPoly, compose, lift, reduce_mod

__all__ = [
    "DiscClassification",
    "Parity",
    "ZPoly",
    "bareiss_det",
    "classify",
    "comp_trinomial_check",
    "compose",
    "compose_mod",
    "det_mod_2k",
    "det_mod_2k_blocked",
    "disc_compose_check",
    "disc_field",
    "disc_mod8",
    "disc_mod_2k",
    "discriminant",
    "lift",
    "multiplication_matrix_mod",
    "reduce_mod",
    "res_disc_identity",
    "res_disc_identity_check",
    "resultant",
    "resultant_field",
    "resultant_sylvester",
    "stickelberger_parity",
    "swan_parity",
    "sylvester_matrix",
    "trinomial",
]

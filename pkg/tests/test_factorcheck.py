import pytest
from hypothesis import given, strategies as st

from iterstab.errors import NotSquarefreeError, OracleCapError
from iterstab.factorcheck import (
    Method,
    berlekamp_factor_count,
    brute_factorize,
    is_irreducible,
    is_squarefree,
    oracle_cap_for,
    rabin_irreducible,
    small_factor_probe,
    trial_division_irreducible,
)
from iterstab.gfcore import GFPoly, divrem, monic_polys, mul, parse_field, parse_poly

IRRED = [
    ("2", "x^2+x+1"),
    ("2", "x^4+x+1"),
    ("2", "x^10+x^9+x^6+x^5+x^4+x^3+1"),
    ("3", "x^2+1"),
    ("5", "x^3+x+1"),
    ("2^2/x^2+x+1", "x^2+x+2"),
    ("3^2", "x^3+2*x+1"),
]
RED = [
    ("2", "x^4+x^2+1"),
    ("2", "x^2+1"),
    ("3", "x^2+2"),
    ("5", "x^4+4"),
    ("2^2/x^2+x+1", "x^2+x+1"),
]


@pytest.mark.parametrize("ftext,ptext", IRRED)
def test_irreducible(ftext, ptext):
    f = parse_poly(ptext, parse_field(ftext))
    v = rabin_irreducible(f)
    assert v.irreducible and v.method == Method.RABIN and v.witness is None


@pytest.mark.parametrize("ftext,ptext", RED)
def test_reducible_with_witness(ftext, ptext):
    f = parse_poly(ptext, parse_field(ftext))
    v = rabin_irreducible(f)
    assert not v.irreducible
    w = v.witness
    assert 1 <= w.degree < f.degree
    assert divrem(f, w)[1].is_zero


@pytest.mark.parametrize("p,d", [(2, 2), (2, 5), (2, 8), (3, 4), (5, 3), (7, 2)])
def test_rabin_matches_oracle_exhaustively(p, d):
    F = parse_field(str(p))
    for f in monic_polys(F, d):
        assert rabin_irreducible(f).irreducible == trial_division_irreducible(f).irreducible, str(f)


@pytest.mark.parametrize("ftext,d", [("2", 6), ("3", 4), ("2^2/x^2+x+1", 3)])
@given(data=st.data())
def test_berlekamp_counts_distinct_factors(ftext, d, data):
    F = parse_field(ftext)
    cs = data.draw(st.lists(st.integers(0, F.q - 1), min_size=d, max_size=d))
    f = GFPoly(F, cs + [1])
    if not is_squarefree(f):
        with pytest.raises(NotSquarefreeError):
            berlekamp_factor_count(f)
        return
    assert berlekamp_factor_count(f) == len(brute_factorize(f)[1])


def test_brute_factorize_product():
    F = parse_field("3")
    f = parse_poly("2*x^5+x^3+x+1", F)
    lead, fs = brute_factorize(f)
    prod = GFPoly.const(F, lead)
    for g in fs:
        prod = mul(prod, g)
    assert prod == f


def test_oracle_cap():
    assert oracle_cap_for(2) == 24
    f = parse_poly("x^30+x+1", 2)
    with pytest.raises(OracleCapError):
        brute_factorize(f)


def test_probe_finds_small_factor_of_large_product():
    F = parse_field("2")
    big = parse_poly("x^2500+x^5+x^4+x^2+1", F)
    f = mul(big, parse_poly("x^7+x+1", F))
    g = small_factor_probe(f, 24)
    assert g is not None and g.degree <= 24 and divrem(f, g)[1].is_zero
    v = is_irreducible(f)
    assert not v.irreducible and v.method == Method.SMALL_FACTOR_PROBE


def test_probe_equal_degree_split():
    # product of two distinct cubics: the d=3 gcd is all of f
    f = mul(parse_poly("x^3+x+1", 2), parse_poly("x^3+x^2+1", 2))
    g = small_factor_probe(f, 4)
    assert str(g) == "x^3+x+1"


def test_squarefree():
    assert not is_squarefree(parse_poly("x^4+1", 2))
    assert is_squarefree(parse_poly("x^3+x+1", 2))
    assert not is_squarefree(parse_poly("x^3", 3)) and not is_squarefree(parse_poly("x^3+1", 3))

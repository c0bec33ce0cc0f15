import pytest
from hypothesis import given, strategies as st

from iterstab.errors import FieldMismatchError, ParseError, ReducibleModulusError
from iterstab.gfcore import (
    NEG_INF,
    FieldDesc,
    GFPoly,
    compose,
    derivative,
    divrem,
    format_field,
    gcd,
    mul,
    parse_field,
    parse_poly,
    power,
    xgcd,
)

FIELDS = ["2", "3", "5", "7", "2^2/x^2+x+1", "3^2", "2^3"]


def polys(F, max_deg=30):
    return st.lists(st.integers(0, F.q - 1), max_size=max_deg + 1).map(lambda cs: GFPoly(F, cs))


@pytest.mark.parametrize(
    "text,expected",
    [("x^3+x+1", [1, 1, 0, 1]), ("[1,1,0,1]", [1, 1, 0, 1]), ("x", [0, 1]), ("1", [1])],
)
def test_parse_forms(text, expected):
    f = parse_poly(text, 2)
    assert list(f.coeffs) == expected


def test_sparse_and_dense_agree_over_f3():
    assert parse_poly("2*x^2+1", 3) == parse_poly("[1,0,2]", 3)


def test_roundtrip_text():
    f = parse_poly("x^10+x^9+x^6+x^5+x^4+x^3+1", 2)
    assert str(f) == "x^10+x^9+x^6+x^5+x^4+x^3+1"
    assert parse_poly(str(f), 2) == f


@pytest.mark.parametrize("bad", ["x^^2", "x^2+", "y^2", "[1,2", "x^-1"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad, 2)


@pytest.mark.parametrize("text", ["2", "3", "2^2/x^2+x+1", "3^2", "2^4"])
def test_parse_field(text):
    F = parse_field(text)
    assert F.q == {"2": 2, "3": 3, "2^2/x^2+x+1": 4, "3^2": 9, "2^4": 16}[text]
    assert parse_field(format_field(F)) == F


@pytest.mark.parametrize("text", ["4", "1", "2^2/x^2+1", "3^2/x^2+1//x^2+x+2"])
def test_bad_fields(text):
    with pytest.raises((ParseError, ReducibleModulusError, ValueError)):
        parse_field(text)


def test_zero_degree_sentinel():
    z = GFPoly.zero(FieldDesc.prime(5))
    assert z.degree == NEG_INF and z.degree < 0


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        parse_poly("x", 2) + parse_poly("x", 3)


@pytest.mark.parametrize("ftext", FIELDS)
def test_ring_axioms(ftext):
    F = parse_field(ftext)
    x = GFPoly.x(F)
    a = x * x + GFPoly.one(F)
    b = x + GFPoly.const(F, F.q - 1)
    assert (a + b) * (a - b) == a * a - b * b
    q, r = divrem(a * b + x, b)
    assert q * b + r == a * b + x and r.degree < b.degree


@pytest.mark.parametrize("ftext", ["2", "3", "2^2/x^2+x+1"])
@given(data=st.data())
def test_divrem_and_xgcd(ftext, data):
    F = parse_field(ftext)
    a = data.draw(polys(F))
    b = data.draw(polys(F, 12))
    if b.is_zero:
        return
    q, r = divrem(a, b)
    assert mul(q, b) + r == a
    assert r.degree < b.degree
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g == gcd(a, b)


@given(st.integers(0, 1 << 3000), st.integers(0, 1 << 3000))
def test_gf2_mul_matches_generic(a, b):
    # packed product vs schoolbook over bit lists
    F = FieldDesc.prime(2)
    pa, pb = GFPoly.from_bits(a), GFPoly.from_bits(b)
    r = 0
    bb = b
    sh = 0
    while bb:
        if bb & 1:
            r ^= a << sh
        bb >>= 1
        sh += 1
    assert mul(pa, pb) == GFPoly.from_bits(r, F)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=200), st.lists(st.integers(0, 6), min_size=1, max_size=200))
def test_fp_mul_matches_schoolbook(x, y):
    F = FieldDesc.prime(7)
    expect = [0] * (len(x) + len(y) - 1)
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            expect[i + j] += u * v
    assert GFPoly(F, x) * GFPoly(F, y) == GFPoly(F, expect)


def test_derivative_char2():
    f = parse_poly("x^4+x^3+x+1", 2)
    assert derivative(f) == parse_poly("x^2+1", 2)


def test_compose_matches_power_sum():
    F = parse_field("3")
    f = parse_poly("x^2+x+2", F)
    g = parse_poly("x^3+2", F)
    assert compose(g, f) == power(f, 3) + GFPoly.const(F, 2)


def test_extension_arithmetic_inverse():
    F = parse_field("2^3")
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
    assert F.pow(F.generator, F.q - 1) == 1


def test_compose_degree_cap():
    from iterstab.errors import DegreeCapError

    f = parse_poly("x^10+x+1", 2)
    with pytest.raises(DegreeCapError):
        compose(f, compose(f, f), cap=500)

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from iterstab.errors import CharacteristicError
from iterstab.gfcore import parse_field, parse_poly
from iterstab.theorembench import (
    Status,
    SymFuncTable,
    candidates,
    capelli_check,
    check_higher_weight,
    check_odd_even_trinomial,
    check_odoni,
    check_trim_even,
    check_xp_ax2_b,
    conjecture_search,
    elementary_from_roots,
    newton_e_from_p,
    newton_p_from_e,
    parse_higher_weight,
    parse_shape,
    power_sums_from_roots,
    relation_residual,
)
from iterstab.theorembench.suites import SUITES

roots_st = st.lists(st.integers(-9, 9), min_size=1, max_size=8)


@given(roots_st)
def test_newton_roundtrip(roots):
    m = len(roots)
    e = elementary_from_roots(roots)
    p = power_sums_from_roots(roots, 12)
    assert newton_p_from_e(e, 12) == p
    assert newton_e_from_p(p, m) == e


@given(roots_st, st.integers(1, 12))
def test_relation_holds_past_m(roots, k):
    m = len(roots)
    e = elementary_from_roots(roots)
    p = power_sums_from_roots(roots, 12)
    assert relation_residual(e, p, k, m) == Fraction(0)


def test_newton_small_values():
    # roots 1, 2: e = (3, 2), p_k = 1 + 2^k for k >= 1
    assert elementary_from_roots([1, 2]) == [3, 2]
    assert power_sums_from_roots([1, 2], 3) == [3, 5, 9]
    tab = SymFuncTable.from_roots([1, 2], 6)
    assert tab.holds()


def test_newton_mod_small_char():
    e = [1, 2, 3]
    with pytest.raises(CharacteristicError):
        newton_p_from_e(e, 10, modulus=7)
    assert newton_e_from_p(newton_p_from_e(e, 6, modulus=11), 3, modulus=11) == e


@pytest.mark.parametrize("n,s", [(n, s) for n in range(1, 6) for s in range(1, 2 * n)])
def test_trim_even_agrees(n, s):
    oc = check_trim_even(n, s)
    assert oc.status == Status.AGREES and oc.agrees
    assert oc.observed["first_reducible"] <= 3


def test_trim_even_gate():
    oc = check_trim_even(2, 4)
    assert oc.is_gate and oc.agrees is None


@pytest.mark.parametrize(
    "p,t,n,s,a,b",
    [(3, 1, 3, 0, 1, 1), (3, 1, 3, 1, 2, 1), (5, 1, 5, 2, 1, 3), (3, 2, 3, 1, 1, 2), (3, 1, 6, 4, 1, 2)],
)
def test_odd_trinomial_agrees(p, t, n, s, a, b):
    oc = check_odd_even_trinomial(p, t, n, s, a, b)
    assert oc.status == Status.AGREES


@pytest.mark.parametrize(
    "args",
    [(2, 1, 2, 0, 1, 1), (3, 1, 2, 0, 1, 1), (3, 1, 3, 3, 1, 1), (3, 1, 3, 0, 0, 1)],
)
def test_odd_trinomial_gates(args):
    assert check_odd_even_trinomial(*args).status == Status.GATE


def test_odd_trinomial_custom_g():
    F = parse_field("3")
    g = parse_poly("x^2+1", F)
    oc = check_odd_even_trinomial(3, 1, 3, 1, 1, 1, g=g)
    assert oc.status == Status.AGREES


@pytest.mark.parametrize("p,a,b", [(5, 1, 2), (5, 2, 1), (5, 3, 4), (5, 4, 3), (13, 1, 10)])
def test_xp_ax2_b_agrees(p, a, b):
    oc = check_xp_ax2_b(p, a, b)
    assert oc.observed["disc_ff_is_minus_36"]
    assert oc.status == Status.AGREES


@pytest.mark.parametrize("p,a,b", [(7, 1, 4), (11, 1, 8)])
def test_xp_ax2_b_sign(p, a, b):
    # Res(f, f') = 6 always; Disc(f) carries the extra sign (-1)^(p(p-1)/2)
    oc = check_xp_ax2_b(p, a, b)
    o = oc.observed
    assert o["disc_f_is_signed_6"] and not o["disc_f_is_6"]
    assert o["disc_ff_is_minus_36"]
    assert oc.status == Status.DISAGREES


def test_xp_ax2_b_gate():
    assert check_xp_ax2_b(5, 1, 1).status == Status.GATE


@pytest.mark.parametrize(
    "kind,poly,ok",
    [
        ("g_of_x8", "x^20+x^13+x^8+1", True),
        ("g_of_x8", "x^20+x^5+x^8+1", False),
        ("g_of_x4", "x^8+x^4+x+1", True),
        ("g_of_x4", "x^8+x^7+x^4+1", True),
        ("g_of_x4", "x^9+x^4+x+1", False),
    ],
)
def test_parse_higher_weight(kind, poly, ok):
    assert (parse_higher_weight(kind, parse_poly(poly, 2)) is not None) == ok


def test_higher_weight_runs():
    oc = check_higher_weight("g_of_x4", parse_poly("x^8+x^4+x+1", 2))
    assert oc.status in (Status.AGREES, Status.ANOMALY)
    assert check_higher_weight("g_of_x4", parse_poly("x^3+x+1", 2)).is_gate


@pytest.mark.parametrize("p", [2, 3])
def test_odoni(p):
    oc = check_odoni(p)
    assert oc.status == Status.AGREES


@pytest.mark.parametrize(
    "ftext,f,g,h",
    [
        ("2", "x^2+x+1", "x^2", "x+1"),
        ("3", "x^2+1", "x^2+x", "1"),
        ("2^2/x^2+x+1", "x^2+x+2", "x^3+1", "1"),
        ("5", "x^3+x+1", "x^2+2", "x"),
    ],
)
def test_capelli_agrees(ftext, f, g, h):
    F = parse_field(ftext)
    oc = capelli_check(parse_poly(f, F), parse_poly(g, F), parse_poly(h, F))
    assert oc.status == Status.AGREES


def test_capelli_gates():
    F = parse_field("2")
    assert capelli_check(parse_poly("x^2+1", F), parse_poly("x", F), parse_poly("1", F)).is_gate
    assert capelli_check(parse_poly("x^2+x+1", F), parse_poly("x^2+x", F), parse_poly("x", F)).is_gate


def test_outcome_record_is_json():
    rec = check_trim_even(1, 1).to_record()
    assert json.loads(json.dumps(rec)) == rec
    assert rec["status"] == "agrees"


@pytest.mark.parametrize("shape,w", [("trinomial", 3), ("any", None), ("weight:5", 5)])
def test_parse_shape(shape, w):
    assert parse_shape(shape) == w


@pytest.mark.parametrize("bad", ["quad", "weight:0"])
def test_parse_shape_bad(bad):
    with pytest.raises(ValueError):
        parse_shape(bad)


def test_candidates_order_and_filter():
    cs = [str(f) for f in candidates(2, range(1, 5))]
    assert cs == ["x^2+x+1", "x^4+x+1", "x^4+x^2+1", "x^4+x^2+x", "x^4+x^3+1", "x^4+x^3+x", "x^4+x^3+x^2"]
    assert all(f.degree % 3 == 0 for f in candidates(3, range(1, 7)))
    # three supports for degree 3, four coefficient pairs each
    assert len(list(candidates(3, [3]))) == 12
    assert len(list(candidates(3, [2], conjecture=False))) == 4


@pytest.mark.parametrize("cursor,limit", [(0, 5), (3, 4), (10, None)])
def test_search_cursor_resumes(cursor, limit):
    full = [r.poly for r in conjecture_search(2, range(2, 9), depth=2)]
    part = [r.poly for r in conjecture_search(2, range(2, 9), depth=2, cursor=cursor, limit=limit)]
    assert part == full[cursor: None if limit is None else cursor + limit]


def test_search_workers_same_order():
    a = [(r.index, r.outcome) for r in conjecture_search(2, range(2, 11), depth=3, workers=1)]
    b = [(r.index, r.outcome) for r in conjecture_search(2, range(2, 11), depth=3, workers=3)]
    assert a == b and [i for i, _ in a] == list(range(len(a)))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_small(name):
    res = SUITES[name](10, 1)
    assert len(res) == 10 and all(ok for ok, _ in res)

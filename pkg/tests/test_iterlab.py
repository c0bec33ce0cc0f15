import pytest
from hypothesis import given, strategies as st

from iterstab.errors import DegreeCapError
from iterstab.factorcheck import trial_division_irreducible
from iterstab.gfcore import GFPoly, compose, parse_field, parse_poly
from iterstab.iterlab import iterate, stability_scan


def test_iterate_zero_is_x():
    f = parse_poly("x^2+x+1", 2)
    assert str(iterate(f, 0)) == "x"
    assert iterate(f, 1) == f


def test_trim_even_n1_iterates():
    f = parse_poly("x^2+x+1", 2)
    assert str(iterate(f, 2)) == "x^4+x+1"
    assert iterate(f, 3).degree == 8


@given(st.lists(st.integers(0, 2), min_size=2, max_size=4), st.integers(1, 3), st.integers(1, 3))
def test_iterate_composition_law(cs, m, n):
    f = GFPoly(parse_field("3"), cs + [1])
    assert iterate(f, m + n) == compose(iterate(f, m), iterate(f, n))


def test_iterate_cap():
    f = parse_poly("x^10+x+1", 2)
    with pytest.raises(DegreeCapError):
        iterate(f, 4, cap=5000)
    with pytest.raises(ValueError):
        iterate(f, -1)


@pytest.mark.parametrize(
    "poly,depth,first",
    [("x^2+x+1", 4, 3), ("x^2+x", 2, 1), ("x^3+x^2+1", 3, None), ("x^4+x^3+1", 3, 2)],
)
def test_scan_first_reducible(poly, depth, first):
    rep = stability_scan(parse_poly(poly, 2), depth)
    assert rep.first_reducible == first
    if first is None:
        assert rep.exhausted and rep.stop_reason == "max_n" and rep.stable_depth == depth
    else:
        assert rep.stop_reason == "reducible" and rep.stable_depth == first - 1


def test_scan_verdicts_match_oracle():
    f = parse_poly("x^2+2*x+2", 3)
    rep = stability_scan(f, 2)
    for lv in rep.levels:
        assert lv.verdict.irreducible == trial_division_irreducible(iterate(f, lv.n)).irreducible


def test_scan_degree_cap_is_not_stability():
    rep = stability_scan(parse_poly("x^3+x^2+1", 2), 10, cap=100)
    assert rep.exhausted and rep.stop_reason == "degree_cap"
    assert rep.first_reducible is None and len(rep.levels) == 4


def test_scan_time_budget():
    rep = stability_scan(parse_poly("x^3+x^2+1", 2), 9, time_budget=1e-6)
    assert rep.exhausted and rep.stop_reason == "time_budget"


def test_deg20_second_iterate_splits():
    # five factors (degrees 20, 20, 80, 100, 180): an odd count, as Disc = 5 mod 8 requires
    from iterstab.factorcheck import berlekamp_factor_count
    from iterstab.gfcore import divrem

    f = parse_poly("x^20+x^18+x^5+x^2+1", 2)
    rep = stability_scan(f, 3)
    assert rep.first_reducible == 2
    w = rep.reducible_level.verdict.witness
    ff = iterate(f, 2)
    assert divrem(ff, w)[1].is_zero and 1 <= w.degree < 400
    assert berlekamp_factor_count(ff) == 5

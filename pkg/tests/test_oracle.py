"""Generating-function reconstructions against the recurrence engine."""

from fractions import Fraction as F

import pytest

from djkm.exact import RationalPoly
from djkm.families import FamilyId
from djkm.oracle import (
    check_funde,
    expand_elliptic1,
    expand_elliptic2,
    expand_gegenbauer_sum,
)

ONE = RationalPoly.one()


def test_elliptic1_displayed_expansion():
    # 1 + z^4 + (4c/5) z^6 + ((32c^2-5)/35) z^8 + (16c(8c^2-3)/105) z^10
    #   + ((2048c^4-1248c^2+75)/1155) z^12 + O(z^13)
    res = expand_elliptic1(13)
    assert res.matched and res.first_mismatch is None
    s = res.series
    assert s.coefficient(0) == ONE
    assert s.coefficient(4) == ONE
    assert s.coefficient(6) == RationalPoly([0, F(4, 5)])
    assert s.coefficient(8) == RationalPoly([F(-5, 35), 0, F(32, 35)])
    assert s.coefficient(10) == RationalPoly([0, F(-48, 105), 0, F(128, 105)])
    assert s.coefficient(12) == RationalPoly(
        [F(75, 1155), 0, F(-1248, 1155), 0, F(2048, 1155)]
    )
    for n in range(1, 13, 2):
        assert s.coefficient(n).is_zero()


def test_elliptic1_leading_behavior():
    res = expand_elliptic1(4)
    assert res.matched
    assert res.series.coefficient(0) == ONE
    assert res.series.coefficient(4) == ONE
    for n in (1, 2, 3):
        assert res.series.coefficient(n).is_zero()


def test_elliptic1_deep_truncation():
    assert expand_elliptic1(120).matched


def test_elliptic2_displayed_expansion():
    # z^2 + (1/5) z^6 + (8c/35) z^8 + ((32c^2-7)/105) z^10
    #   + (8c(64c^2-29)/1155) z^12 + O(z^13)
    res = expand_elliptic2(13)
    assert res.matched
    s = res.series
    assert s.coefficient(2) == ONE
    assert s.coefficient(6) == RationalPoly([F(1, 5)])
    assert s.coefficient(8) == RationalPoly([0, F(8, 35)])
    assert s.coefficient(10) == RationalPoly([F(-7, 105), 0, F(32, 105)])
    assert s.coefficient(12) == RationalPoly([0, F(-232, 1155), 0, F(512, 1155)])
    assert s.coefficient(0).is_zero()
    assert s.coefficient(4).is_zero()


def test_elliptic2_minimal_order():
    res = expand_elliptic2(2)
    assert res.matched
    assert res.series.coefficient(2) == ONE


def test_elliptic2_deep_truncation():
    assert expand_elliptic2(120).matched


def test_gegenbauer_sum_matches_table():
    res = expand_gegenbauer_sum(13)
    assert res.matched
    assert res.series.coefficient(0) == ONE
    assert res.series.coefficient(4) == ONE
    assert res.series.coefficient(8) == RationalPoly([F(-5, 35), 0, F(32, 35)])


def test_gegenbauer_sum_leading_behavior():
    res = expand_gegenbauer_sum(4)
    assert res.matched
    assert res.series.coefficient(0) == ONE
    assert res.series.coefficient(4) == ONE


def test_gegenbauer_sum_deep_truncation():
    assert expand_gegenbauer_sum(80).matched


def test_both_p4_routes_agree_with_each_other():
    a = expand_elliptic1(40).series
    b = expand_gegenbauer_sum(40).series
    assert a.agrees_with(b, upto=40)


def test_funde_small_and_stated_orders():
    assert check_funde(8, FamilyId.P4)
    assert check_funde(40, FamilyId.P4)
    assert check_funde(40, FamilyId.P2)


def test_funde_rejects_odd_family():
    with pytest.raises(ValueError):
        check_funde(40, FamilyId.P1)


def test_order_preconditions():
    with pytest.raises(ValueError):
        expand_elliptic1(3)
    with pytest.raises(ValueError):
        expand_gegenbauer_sum(3)
    with pytest.raises(ValueError):
        check_funde(7, FamilyId.P4)

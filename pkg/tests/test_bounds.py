from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from babi.bounds import (
    admissible_order,
    all_bounds,
    babi_g3_exact,
    babi_g4_exact,
    babi_lower,
    babi_lower_refined,
    babi_upper,
    census_caps,
    equality56_feasible,
    erdos_sachs_upper,
    fat_edge_lower,
    moore,
    semireg5_lower,
    semireg5_plus2_lower,
    semireg6_lower,
)


def first_multiple_of_4_above(x: int) -> int:
    return x + 4 - x % 4


# Printed case tables, r = 2..20.
SEMIREG5 = {r: r * r + r + (4 if r % 4 in (0, 3) else 6) for r in range(3, 21)}
SEMIREG6 = {r: 2 * (r * r + (2 if r in (2, 4, 6) else 3 if r % 2 else 4)) for r in range(2, 21)}


def test_moore_known_cages():
    assert moore(3, 5).value == 10
    assert moore(3, 6).value == 14
    assert moore(7, 5).value == 50
    assert moore(57, 5).value == 3250
    with pytest.raises(ValueError):
        moore(2, 5)


def test_babi_lower_regressions():
    # Moore-tree counts: 1 + s + (rs + (s-r)^2 - s)
    assert babi_lower(11, 14, 5).value == 1 + 14 + (154 + 9 - 14) == 164
    assert babi_lower(19, 23, 5).value == 1 + 23 + (437 + 16 - 23) == 454
    assert babi_lower_refined(19, 23, 5).value == 456
    # not attained, and r + s odd forces a multiple of 4
    assert babi_lower_refined(11, 14, 5).value == 168
    assert babi_lower(2, 3, 5).value == 8
    assert babi_lower(2, 3, 6).value == 10


def test_babi_lower_small_girth():
    for r in range(2, 10):
        for s in range(r + 1, 12):
            assert babi_lower(r, s, 3).value == s + 1
            assert babi_lower(r, s, 4).value == 2 * s


@pytest.mark.parametrize("r", range(3, 21))
def test_semireg5_table(r):
    assert semireg5_lower(r).value == SEMIREG5[r]
    # derivation: the order exceeds r^2+r+2 and is divisible by 4
    assert semireg5_lower(r).value == first_multiple_of_4_above(r * r + r + 2)


def test_semireg5_rejects_r2():
    with pytest.raises(ValueError):
        semireg5_lower(2)


@pytest.mark.parametrize("r", range(2, 21))
def test_semireg6_table(r):
    got = semireg6_lower(r).value
    assert got == SEMIREG6[r]
    base = first_multiple_of_4_above(2 * r * r + 2)
    # even r >= 8 also excludes 2r^2+4
    assert got == (base + 4 if r % 2 == 0 and r >= 8 else base)


@pytest.mark.parametrize("r", range(2, 21))
def test_semireg5_plus2(r):
    got = semireg5_plus2_lower(r).value
    assert got == r * r + 2 * r + (7 if r % 2 else 6)
    assert got > babi_lower(r, r + 2, 5).value


def test_exact_g3_g4_match_known_small_values():
    # the minimum orders found by exhaustive search for s <= 9, all v <= 10
    assert babi_g3_exact(2, 3).value == 4
    assert babi_g3_exact(3, 4).value == 8
    assert babi_g3_exact(3, 5).value == 6
    assert babi_g3_exact(5, 6).value == 8
    assert babi_g3_exact(7, 9).value == 10
    assert babi_g4_exact(2, 3).value == 8
    assert babi_g4_exact(2, 4).value == 8
    assert babi_g4_exact(3, 4).value == 8


def test_equality56_only_at_2_3():
    hits5 = [(r, s) for r in range(2, 51) for s in range(r + 1, 51) if equality56_feasible(r, s, 5)]
    assert hits5 == [(2, 3)]
    hits6 = [(r, s) for r in range(2, 51) for s in range(r + 1, 51) if equality56_feasible(r, s, 6)]
    assert hits6 == []
    with pytest.raises(ValueError):
        equality56_feasible(2, 3, 7)


def test_equality5_agrees_with_the_quadratic():
    # s = (3r +- sqrt(-3r^2+8r-4))/2 has a real root only for 2/3 <= r <= 2
    for r in range(2, 51):
        disc = -3 * r * r + 8 * r - 4
        roots = set()
        if disc >= 0:
            d = int(disc**0.5)
            if d * d == disc:
                roots = {(3 * r + d) // 2, (3 * r - d) // 2} if (3 * r + d) % 2 == 0 else set()
        for s in range(r + 1, 51):
            assert bool(equality56_feasible(r, s, 5)) == (s in roots)


def test_fat_edge_lower():
    assert fat_edge_lower(8, 2, 3) == 2
    assert fat_edge_lower(6, 2, 3) == 2  # ceiling: 6/4 rounds up
    with pytest.raises(ValueError):
        fat_edge_lower(7, 2, 3)


def test_census_caps():
    caps = census_caps(24, 3, 6)
    assert caps.fat == Fraction(18) and caps.thin == Fraction(12) and caps.validated
    # r = 2: the order-12 (2,3;6) graph with 6 fat edges reaches cv/8 = 6
    assert not census_caps(12, 2, 4).validated
    with pytest.raises(ValueError):
        census_caps(24, 3, 2)
    with pytest.raises(ValueError):
        census_caps(25, 3, 6)


def test_upper_bounds_dominate_lower():
    for r in range(2, 6):
        for s in range(r + 1, 8):
            for g in range(3, 8):
                assert babi_upper(r, s, g).value >= babi_lower(r, s, g).value
    assert erdos_sachs_upper(3, 5).value == 4 * (2 + 4 + 8)


@given(st.integers(2, 30), st.integers(1, 30), st.integers(1, 400))
def test_admissible_order(r, k, v):
    s = r + k
    ok = admissible_order(r, s, v)
    if v % 2:
        assert not ok
    elif (r + s) % 2:
        assert ok == (v % 4 == 0)
    else:
        assert ok


def test_all_bounds_keys():
    b = all_bounds(3, 4, 5)
    assert {"babi_lower", "babi_upper", "moore_3", "moore_4", "semireg5_lower", "equality_feasible"} <= set(b)
    assert "exact" in all_bounds(3, 4, 3) and "semireg6_lower" in all_bounds(2, 3, 6)
    assert "semireg5_plus2_lower" in all_bounds(3, 5, 5)


def test_bad_arguments():
    with pytest.raises(ValueError):
        babi_lower(3, 3, 5)
    with pytest.raises(ValueError):
        babi_lower(1, 3, 5)
    with pytest.raises(ValueError):
        babi_lower(2, 3, 2)


def test_refined_bound_is_attained_where_search_says_so():
    assert babi_lower_refined(2, 3, 5).value == 8
    assert babi_lower_refined(2, 3, 6).value == 12
    assert babi_lower_refined(2, 4, 5).value == 14
    for r in range(2, 8):
        for s in range(r + 1, 10):
            for g in range(3, 9):
                lo, ref = babi_lower(r, s, g).value, babi_lower_refined(r, s, g).value
                assert lo <= ref <= lo + 4 and admissible_order(r, s, ref)

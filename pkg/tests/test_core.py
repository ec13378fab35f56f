import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tevelev.core import (
    IntegralityError,
    TevParams,
    binom,
    catalan,
    e_entry,
    exact_div,
    is_valid,
)


@pytest.mark.parametrize(
    "n, k, expected",
    [(4, 2, 6), (0, -1, 0), (-1, 0, 0), (5, 6, 0), (0, 0, 1), (-3, -5, 0)],
)
def test_binom_examples(n, k, expected):
    assert binom(n, k) == expected


@given(st.integers(1, 200), st.integers(-5, 205))
def test_binom_pascal_rule_with_zero_extension(n, k):
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_e_entry_rows():
    assert [e_entry(3, j) for j in range(5)] == [1, 4, 11, 26, 57]
    assert [e_entry(2, j) for j in range(5)] == [1, 3, 7, 15, 31]
    assert [e_entry(1, j) for j in range(10)] == [2**j for j in range(10)]
    assert e_entry(5, -1) == 0


def test_e_entry_rejects_s_below_one():
    with pytest.raises(ValueError):
        e_entry(0, 3)


def _e_by_pascal(s_max, j_max):
    # independent construction: E_1 = powers of two, E_s[0] = 1 and the
    # Pascal rule E_{s+1}[j+1] = E_{s+1}[j] + E_s[j+1]
    table = {(1, j): 2**j for j in range(j_max + 1)}
    for s in range(2, s_max + 1):
        table[(s, 0)] = 1
        for j in range(1, j_max + 1):
            table[(s, j)] = table[(s, j - 1)] + table[(s - 1, j)]
    return table


def test_e_entry_matches_pascal_construction():
    for (s, j), v in _e_by_pascal(20, 20).items():
        assert e_entry(s, j) == v


@given(st.integers(1, 64), st.integers(-1, 64))
def test_e_pascal_law(s, j):
    assert e_entry(s + 1, j + 1) == e_entry(s + 1, j) + e_entry(s, j + 1)


@given(st.integers(1, 64), st.integers(0, 64))
def test_e_entries_nonnegative_with_unit_lead(s, j):
    assert e_entry(s, j) >= 0
    assert e_entry(s, 0) == 1


@pytest.mark.parametrize(
    "params, expected",
    [((0, 0, 1), True), ((0, 2, 4), False), ((2, -2, 1), False), ((4, -2, 1), True)],
)
def test_is_valid(params, expected):
    assert is_valid(TevParams(*params)) is expected


def test_is_valid_matches_marking_condition():
    # r <= d and at least three markings left after collapsing the fiber
    for g in range(12):
        for ell in range(-8, 8):
            for r in range(1, 12):
                p = TevParams(g, ell, r)
                by_markings = 1 <= r <= p.degree and p.markings - r + 1 >= 3
                assert is_valid(p) == by_markings


def test_derived_quantities():
    p = TevParams(5, -2, 3)
    assert (p.degree, p.markings, p.gfloor) == (4, 4, 6)


def test_params_reject_bad_ranges():
    with pytest.raises(ValueError):
        TevParams(-1, 0, 1)
    with pytest.raises(ValueError):
        TevParams(0, 0, 0)


@pytest.mark.parametrize("m, expected", [(0, 1), (3, 5), (4, 14), (10, 16796)])
def test_catalan(m, expected):
    assert catalan(m) == expected


def test_catalan_rejects_negative():
    with pytest.raises(ValueError):
        catalan(-1)


def test_catalan_recurrence():
    c = [1]
    for m in range(25):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    assert [catalan(m) for m in range(26)] == c


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(IntegralityError):
        exact_div(7, 2)
    assert math.comb(10, 5) == binom(10, 5)

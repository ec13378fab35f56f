import pytest

from tevelev.closed_form import tev_closed
from tevelev.coefficients import Expansion, c_coeff, d_closed_axis, expand, t_ell1_j1
from tevelev.core import TevParams, binom, catalan, e_entry
from tevelev.lattice_paths import count_paths_by_index, d_count, enumerate_paths
from tevelev.recursion import MemoTable, tev_recursive


@pytest.mark.parametrize(
    "ell, r, s, expected",
    [(-3, 1, 4, 2), (-3, 1, 5, 3), (-1, 2, 3, 2), (-4, 1, 4, 4), (-4, 1, 5, 6), (-4, 1, 6, 4)],
)
def test_c_coeff_examples(ell, r, s, expected):
    assert c_coeff(ell, r, s) == expected


def test_c_coeff_rejects_positive_ell():
    with pytest.raises(ValueError):
        c_coeff(1, 1, 3)


def test_r1_specialization():
    # the r = 1 display: (s-2)(s-3)/(|ell|-1) * C(2|ell|-s, |ell|+2-s)
    for ell in range(-12, -1):
        a = -ell
        for s in range(3, a + 3):
            num = (s - 2) * (s - 3) * binom(2 * a - s, a + 2 - s)
            assert num % (a - 1) == 0
            assert c_coeff(ell, 1, s) == num // (a - 1)


def test_coefficients_match_enumeration():
    for ell in range(-6, 1):
        for r in range(1, 7):
            hist = count_paths_by_index(ell, r)
            for s in range(-2, r - ell + 5):
                assert c_coeff(ell, r, s) == hist.get(s, 0), (ell, r, s)


def test_ell_minus_one_kronecker_clause_disagrees_with_enumeration():
    # c^s_{-1,r} = delta(s, r+1) for r >= 2 would give T_{-1,2} = E_3 (one path);
    # enumeration finds two paths of index 3
    assert count_paths_by_index(-1, 2) == {3: 2}
    assert expand(-1, 2).coeffs == {3: 2}


@pytest.mark.parametrize(
    "ell, r, expected",
    [
        (-2, 3, {3: 4, 4: 4, 5: 1}),
        (0, 5, {5: 1}),
        (-5, 2, {3: 28, 4: 42, 5: 36, 6: 20, 7: 6}),
        (-1, 1, {3: 1}),
    ],
)
def test_expand_examples(ell, r, expected):
    assert expand(ell, r).coeffs == expected


def test_expansion_support_and_totals():
    for ell in range(-6, 1):
        for r in range(1, 7):
            e = expand(ell, r)
            assert e.total() == len(enumerate_paths(ell, r))
            assert all(1 <= s <= r - ell + 1 for s in e.coeffs)
            if ell < 0:
                assert min(e.coeffs) >= 3


def test_expansion_reconstructs_degrees():
    memo = MemoTable()
    for ell in range(-6, 1):
        for r in range(1, 7):
            e = expand(ell, r)
            floor = r - 2 * ell - 1
            for j in range(11):
                p = TevParams(floor + j, ell, r)
                assert e.evaluate(j) == tev_closed(p) == tev_recursive(p, memo)


def test_pretty():
    assert expand(-4, 3).pretty() == "28E3 + 32E4 + 21E5 + 8E6 + E7"
    assert expand(-1, 1).pretty() == "E3"
    assert expand(0, 2).pretty() == "E2"
    assert Expansion(0, 1, {}).pretty() == "0"


@pytest.mark.parametrize("k, u2, expected", [(2, -3, 2), (4, -3, 1)])
def test_d_closed_axis_examples(k, u2, expected):
    assert d_closed_axis(k, u2) == expected


def test_d_closed_axis_sums_to_catalan():
    for m in range(1, 12):
        assert sum(d_closed_axis(k, -m) for k in range(2, m + 2)) == catalan(m)


def test_d_closed_axis_matches_brute_force():
    for u2 in range(-8, 0):
        for k in range(2, -u2 + 2):
            assert d_closed_axis(k, u2) == d_count(k, 0, 1, u2, 1)


def test_d_closed_axis_rejects_bad_args():
    with pytest.raises(ValueError):
        d_closed_axis(1, -3)
    with pytest.raises(ValueError):
        d_closed_axis(2, 0)


@pytest.mark.parametrize("ell, expected", [(-1, 4), (-2, 10), (-3, 28)])
def test_t_ell1_j1_examples(ell, expected):
    assert t_ell1_j1(ell) == expected


def test_t_ell1_j1_matches_degrees():
    for ell in range(-10, 0):
        p = TevParams(-2 * ell + 1, ell, 1)
        assert t_ell1_j1(ell) == tev_closed(p)


def test_t_ell1_j1_via_index_sum():
    # E_s[1] = s + 1, so T[1] = |P| + sum of indices
    for ell in range(-8, 0):
        hist = count_paths_by_index(ell, 1)
        assert t_ell1_j1(ell) == sum(n * e_entry(s, 1) for s, n in hist.items())
        assert t_ell1_j1(ell) == sum(hist.values()) + sum(s * n for s, n in hist.items())


def test_t_ell1_j1_rejects_nonnegative():
    with pytest.raises(ValueError):
        t_ell1_j1(0)


def test_printed_cell_minus3_5_misses_one_path():
    # the printed expansion 28E3 + 24E4 + 13E5 + 6E6 + 3E7 counts 74 paths,
    # but there are 75; the missing one climbs straight to (0, 8) first
    printed = {3: 28, 4: 24, 5: 13, 6: 6, 7: 3}
    floor = 5 + 6 - 1
    recursion_value = tev_recursive(TevParams(floor, -3, 5), MemoTable())
    assert sum(printed.values()) == 74
    assert recursion_value == len(enumerate_paths(-3, 5)) == 75
    assert expand(-3, 5).coeffs == {**printed, 8: 1}
    for j in range(6):
        p = TevParams(floor + j, -3, 5)
        printed_value = sum(c * e_entry(s, j) for s, c in printed.items())
        assert tev_recursive(p, MemoTable()) == printed_value + e_entry(8, j)

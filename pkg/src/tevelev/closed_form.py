"""Closed binomial formulas for Tevelev degrees, valid for every sign of ``ell``."""

from __future__ import annotations

from tevelev.core import TevParams, binom, is_valid


def _binom_sum(g: int, lo: int, hi: int) -> int:
    # empty when lo > hi
    return sum(binom(g, i) for i in range(lo, hi + 1))


def master_formula(g: int, ell: int, r: int) -> int:
    """The unified formula, evaluated without any validity check.

    Terms are signed; callers that care about the domain should go through
    :func:`tev_closed`.
    """
    value = 2**g - 2 * _binom_sum(g, 0, -ell - 2)
    if r == 1:
        value += (-ell - 2) * binom(g, -ell - 1) + ell * binom(g, -ell)
    else:
        value += (-ell + r - 3) * binom(g, -ell - 1) + (ell - 1) * binom(g, -ell)
        value -= _binom_sum(g, -ell + 1, r - ell - 2)
    return value


def tev_closed(p: TevParams) -> int:
    if not is_valid(p):
        return 0
    value = master_formula(p.g, p.ell, p.r)
    if value < 0:
        raise ArithmeticError(f"closed formula went negative at {p}: {value}")
    return value


def tev_nonneg_ell(p: TevParams) -> int:
    """Degree for ``ell >= 0`` via the reduction to the ``ell = 0`` formula."""
    if p.ell < 0:
        raise ValueError(f"tev_nonneg_ell needs ell >= 0, got {p.ell}")
    if not is_valid(p):
        return 0
    if p.ell >= p.r:
        return 2**p.g
    shifted_r = p.r - p.ell
    return 2**p.g - _binom_sum(p.g, 0, shifted_r - 2)

"""Exact integer primitives shared by every evaluation route.

Binomials use the zero-extension convention: ``binom(n, k) == 0`` whenever
``k < 0``, ``k > n`` or ``n < 0``. Every formula in the package relies on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class IntegralityError(ArithmeticError):
    """An exact division left a remainder (points to a transcription bug)."""


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise IntegralityError(f"{num} is not divisible by {den}")
    return q


@dataclass(frozen=True, order=True)
class TevParams:
    """Genus ``g``, degree offset ``ell`` and fiber size ``r``."""

    g: int
    ell: int
    r: int

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"genus must be >= 0, got {self.g}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")

    @property
    def degree(self) -> int:
        return self.g + 1 + self.ell

    @property
    def markings(self) -> int:
        return self.g + 3 + 2 * self.ell

    @property
    def gfloor(self) -> int:
        """Smallest genus at which ``(ell, r)`` gives a nonzero degree."""
        return genus_floor(self.ell, self.r)


def genus_floor(ell: int, r: int) -> int:
    return r - 2 * ell - 1


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def e_entry(s: int, j: int) -> int:
    """Component ``j`` of the vector ``E_s``; zero for negative ``j``."""
    if s < 1:
        raise ValueError(f"E_s is defined for s >= 1, got s={s}")
    if j < 0:
        return 0
    top = s + j - 1
    return 2**top - sum(binom(top, i) for i in range(s - 1))


def is_valid(p: TevParams) -> bool:
    return 1 <= p.r <= p.degree and p.g >= p.gfloor


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError(f"Catalan numbers need m >= 0, got {m}")
    return exact_div(binom(2 * m, m), m + 1)

"""Closed forms for refined path counts.

``c_coeff`` gives the number of quadrant paths to ``(ell, r)`` with a given
boundary index, i.e. the coefficient of ``E_s`` in the expansion of
``T_{ell,r}``. The functions here never enumerate; compare them against
:mod:`tevelev.lattice_paths` to check them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from tevelev.core import binom, catalan, e_entry, exact_div


def c_coeff(ell: int, r: int, s: int) -> int:
    if ell > 0:
        raise ValueError(f"coefficients are defined for ell <= 0, got {ell}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if ell == 0:
        return int(s == r)
    if ell == -1 and r == 1:
        # the general formula divides by zero here
        return int(s == 3)
    if not 3 <= s <= r - ell + 1:
        return 0
    a = -ell
    n = 2 * a + r - s - 1
    value = (
        exact_div((s - 2) * (s + r - 4) * binom(n, a + 2 - s), a - 2 + r)
        + binom(n, a - 1)
        - binom(n, a + r - 2)
    )
    if value < 0:
        raise ArithmeticError(f"negative coefficient c^{s}_({ell},{r}) = {value}")
    return value


@dataclass(frozen=True)
class Expansion:
    """``T_{ell,r} = sum_s coeffs[s] * E_s`` with zero coefficients dropped."""

    ell: int
    r: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def evaluate(self, j: int) -> int:
        return sum(c * e_entry(s, j) for s, c in self.coeffs.items())

    def pretty(self) -> str:
        terms = []
        for s in sorted(self.coeffs):
            c = self.coeffs[s]
            terms.append(f"E{s}" if c == 1 else f"{c}E{s}")
        return " + ".join(terms) if terms else "0"


def expand(ell: int, r: int) -> Expansion:
    coeffs = {}
    for s in range(1, r - ell + 2):
        c = c_coeff(ell, r, s)
        if c:
            coeffs[s] = c
    return Expansion(ell, r, coeffs)


def d_closed_axis(k: int, u2: int) -> int:
    """Paths from ``(0, 1)`` to ``(u2, 1)`` meeting ``r = 1`` exactly ``k`` times."""
    if k < 2 or u2 >= 0:
        raise ValueError(f"need k >= 2 and u2 < 0, got k={k}, u2={u2}")
    n = -2 * u2 - k
    return exact_div(binom(n, -u2 - k + 1) * (k - 1), -u2)


def t_ell1_j1(ell: int) -> int:
    """``T_{ell,1}[1]``, the degree one genus above the floor, for ``ell < 0``."""
    if ell >= 0:
        raise ValueError(f"need ell < 0, got {ell}")
    a = -ell
    return_steps = exact_div(3 * binom(2 * a + 1, a - 1), 2 * a + 1)
    axis_points = exact_div(
        4 * (2 * a - 1) * (2 * a + 1) * (binom(2 * a - 2, a - 1) - binom(2 * a - 2, a)),
        (a + 1) * (a + 2),
    )
    return catalan(a) + return_steps + axis_points

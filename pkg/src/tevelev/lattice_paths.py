"""Brute-force enumeration of U/D lattice paths in the quadrant ``ell <= 0, r >= 1``.

Everything here counts by walking every path explicitly. It is the trusted
oracle for the closed-form coefficient formulas in :mod:`tevelev.coefficients`.

Points are written ``(ell, r)``. ``U`` moves ``(0, +1)`` and ``D`` moves
``(-1, -1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from tevelev.core import TevParams, e_entry

ORIGIN = (0, 1)
STEPS = {"U": (0, 1), "D": (-1, -1)}
# |ell| + r above this is refused: path counts grow like Catalan numbers
ENUMERATION_LIMIT = 40


class EnumerationGuardError(ValueError):
    pass


def in_quadrant(point: tuple[int, int]) -> bool:
    return point[0] <= 0 and point[1] >= 1


def on_boundary(point: tuple[int, int]) -> bool:
    return point[0] == 0 or point[1] == 1


@dataclass(frozen=True)
class LatticePath:
    steps: str = ""
    start: tuple[int, int] = ORIGIN

    def __post_init__(self) -> None:
        bad = set(self.steps) - set(STEPS)
        if bad:
            raise ValueError(f"unknown step letters {sorted(bad)}")
        for pt in self.points():
            if not in_quadrant(pt):
                raise ValueError(f"path {self.steps!r} leaves the quadrant at {pt}")

    def points(self) -> list[tuple[int, int]]:
        x, y = self.start
        pts = [(x, y)]
        for step in self.steps:
            dx, dy = STEPS[step]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts

    @property
    def end(self) -> tuple[int, int]:
        return self.points()[-1]


@dataclass(frozen=True)
class PathStats:
    index: int
    returns: int


def path_stats(path: LatticePath) -> PathStats:
    """Boundary-contact index and number of return steps of ``path``.

    Each visited point on the boundary counts once per visit; ``(0, 1)`` lies
    on both boundary lines but still counts once.
    """
    pts = path.points()
    index = sum(1 for pt in pts if on_boundary(pt))
    returns = sum(
        1 for step, pt in zip(path.steps, pts[1:]) if step == "D" and pt[1] == 1
    )
    return PathStats(index=index, returns=returns)


def points_on_vertical_axis(path: LatticePath) -> int:
    return sum(1 for pt in path.points() if pt[0] == 0)


def _check_guard(ell: int, r: int) -> None:
    if abs(ell) + r > ENUMERATION_LIMIT:
        raise EnumerationGuardError(
            f"|ell| + r = {abs(ell) + r} exceeds the enumeration limit {ENUMERATION_LIMIT}"
        )


def _walk(
    start: tuple[int, int], n_up: int, n_down: int
) -> Iterator[str]:
    """Yield every step word with the given letter counts that stays in the
    quadrant, in lexicographic order with ``U`` before ``D``."""
    word: list[str] = []

    def rec(y: int, up: int, down: int) -> Iterator[str]:
        if up == 0 and down == 0:
            yield "".join(word)
            return
        if up:
            word.append("U")
            yield from rec(y + 1, up - 1, down)
            word.pop()
        if down and y > 1:
            word.append("D")
            yield from rec(y - 1, up, down - 1)
            word.pop()

    yield from rec(start[1], n_up, n_down)


def _step_counts(
    start: tuple[int, int], end: tuple[int, int]
) -> tuple[int, int] | None:
    n_down = start[0] - end[0]
    n_up = (end[1] - start[1]) + n_down
    if n_down < 0 or n_up < 0:
        return None
    return n_up, n_down


def enumerate_paths(ell: int, r: int) -> list[LatticePath]:
    """All paths from ``(0, 1)`` to ``(ell, r)`` inside the quadrant."""
    if ell > 0 or r < 1:
        raise ValueError(f"(ell, r) = ({ell}, {r}) is outside the quadrant")
    _check_guard(ell, r)
    counts = _step_counts(ORIGIN, (ell, r))
    assert counts is not None
    return [LatticePath(word) for word in _walk(ORIGIN, *counts)]


@lru_cache(maxsize=None)
def _index_histogram(ell: int, r: int) -> tuple[tuple[int, int], ...]:
    hist = Counter(path_stats(p).index for p in enumerate_paths(ell, r))
    return tuple(sorted(hist.items()))


def count_paths_by_index(ell: int, r: int) -> dict[int, int]:
    return dict(_index_histogram(ell, r))


def tev_via_paths(p: TevParams) -> int:
    """Sum ``E_{Ind(path)}[g - gfloor]`` over all paths ending at ``(ell, r)``."""
    if p.ell > 0:
        raise ValueError(f"path route needs ell <= 0, got {p.ell}")
    j = p.g - p.gfloor
    if j < 0:
        raise ValueError(f"g={p.g} is below the genus floor {p.gfloor}")
    return sum(n * e_entry(s, j) for s, n in _index_histogram(p.ell, p.r))


@lru_cache(maxsize=None)
def _axis_histogram(u: int, v: int, u2: int, v2: int) -> tuple[tuple[int, int], ...]:
    counts = _step_counts((u, v), (u2, v2))
    if counts is None:
        return ()
    hist: Counter[int] = Counter()
    for word in _walk((u, v), *counts):
        y = v
        k = int(y == 1)
        for step in word:
            y += STEPS[step][1]
            k += y == 1
        hist[k] += 1
    return tuple(sorted(hist.items()))


def d_count(k: int, u: int, v: int, u2: int, v2: int) -> int:
    """Number of paths from ``(u, v)`` to ``(u2, v2)`` touching ``r = 1``
    exactly ``k`` times (endpoints included)."""
    for pt in ((u, v), (u2, v2)):
        if not in_quadrant(pt):
            raise ValueError(f"{pt} is outside the quadrant")
    _check_guard(u2 - u, max(v, v2))
    return dict(_axis_histogram(u, v, u2, v2)).get(k, 0)

"""Grid cross-validation of every evaluation route plus the supporting identities."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from tevelev.closed_form import master_formula, tev_closed
from tevelev.coefficients import d_closed_axis, expand
from tevelev.core import TevParams, catalan, e_entry, is_valid
from tevelev.lattice_paths import (
    ENUMERATION_LIMIT,
    count_paths_by_index,
    d_count,
    enumerate_paths,
    path_stats,
    points_on_vertical_axis,
)
from tevelev.recursion import MemoTable, tev_recursive

METHODS = ("recursion", "closed", "paths", "expansion")


@dataclass(frozen=True)
class GridSpec:
    g_max: int = 12
    ell_min: int = -4
    ell_max: int = 4
    r_max: int = 5
    methods: tuple[str, ...] = METHODS
    # bound on |u|, |u2|, v, v2 for the path-identity suites
    identity_bound: int = 4
    # deliberately perturb the closed route (harness self-test)
    inject_fault: bool = False

    def __post_init__(self) -> None:
        if self.g_max < 0:
            raise ValueError("g_max must be >= 0")
        if self.ell_min > self.ell_max:
            raise ValueError("ell_min must not exceed ell_max")
        if self.r_max < 1:
            raise ValueError("r_max must be >= 1")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        if len(set(self.methods)) < 2:
            raise ValueError("select at least two methods")

    def cells(self) -> Iterable[TevParams]:
        for g, ell, r in itertools.product(
            range(self.g_max + 1),
            range(self.ell_min, self.ell_max + 1),
            range(1, self.r_max + 1),
        ):
            yield TevParams(g, ell, r)


@dataclass
class CheckReport:
    cells_checked: int = 0
    mismatches: list[dict[str, Any]] = field(default_factory=list)
    identity_failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.identity_failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "cells_checked": str(self.cells_checked),
            "mismatches": self.mismatches,
            "identity_failures": self.identity_failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _paths_applicable(p: TevParams) -> bool:
    return p.ell <= 0 and abs(p.ell) + p.r <= ENUMERATION_LIMIT


def _via_path_histogram(p: TevParams) -> int:
    # no validity gate: below the genus floor the E-entries vanish on their own
    j = p.g - p.gfloor
    return sum(n * e_entry(s, j) for s, n in count_paths_by_index(p.ell, p.r).items())


def _evaluators(spec: GridSpec) -> dict[str, Callable[[TevParams], int | None]]:
    memo = MemoTable()

    def closed(p: TevParams) -> int:
        v = tev_closed(p)
        if spec.inject_fault and p.g == spec.g_max and v:
            v += 1
        return v

    def paths(p: TevParams) -> int | None:
        return _via_path_histogram(p) if _paths_applicable(p) else None

    def expansion(p: TevParams) -> int | None:
        if not _paths_applicable(p):
            return None
        return expand(p.ell, p.r).evaluate(p.g - p.gfloor)

    table = {
        "recursion": lambda p: tev_recursive(p, memo),
        "closed": closed,
        "paths": paths,
        "expansion": expansion,
    }
    return {name: table[name] for name in METHODS if name in spec.methods}


def _witness(**kw: int) -> dict[str, int]:
    return dict(kw)


def _fail(name: str, **kw: int) -> dict[str, Any]:
    return {"name": name, "witness": _witness(**kw)}


def check_pascal(s_max: int, j_max: int) -> list[dict[str, Any]]:
    out = []
    for s in range(1, s_max + 1):
        if e_entry(s, 0) != 1:
            out.append(_fail("e_leading_one", s=s))
        for j in range(-1, j_max + 1):
            if e_entry(s + 1, j + 1) != e_entry(s + 1, j) + e_entry(s, j + 1):
                out.append(_fail("pascal_law", s=s, j=j))
    return out


def check_catalan(m_max: int) -> list[dict[str, Any]]:
    out = []
    for m in range(1, m_max + 1):
        c = catalan(m)
        if tev_closed(TevParams(2 * m, -m, 1)) != c or len(enumerate_paths(-m, 1)) != c:
            out.append(_fail("catalan", m=m))
    return out


def check_full_fiber(g_max: int, ell_max: int) -> list[dict[str, Any]]:
    out = []
    for g in range(g_max + 1):
        for ell in range(ell_max + 1):
            p = TevParams(g, ell, g + 1 + ell)
            if is_valid(p) and tev_closed(p) != 1:
                out.append(_fail("full_fiber", g=g, ell=ell))
    return out


def check_self_annihilation(g_max: int, ell_max: int, excess: int = 4) -> list[dict[str, Any]]:
    """For ``ell >= 0`` the raw formula already vanishes when ``r`` exceeds the degree."""
    out = []
    for g, ell in itertools.product(range(g_max + 1), range(ell_max + 1)):
        for r in range(g + ell + 2, g + ell + 2 + excess):
            if master_formula(g, ell, r) != 0:
                out.append(_fail("formula_vanishes_above_degree", g=g, ell=ell, r=r))
    return out


def check_index_decomposition(ell_min: int, r_max: int) -> list[dict[str, Any]]:
    out = []
    for ell in range(min(ell_min, 0), 1):
        for r in range(1, r_max + 1):
            if abs(ell) + r > ENUMERATION_LIMIT:
                continue
            for path in enumerate_paths(ell, r):
                st = path_stats(path)
                if st.index != st.returns + points_on_vertical_axis(path):
                    out.append(_fail("index_decomposition", ell=ell, r=r))
                    break
                if not 1 <= st.index <= r - ell + 1 or (ell < 0 and st.index < 3):
                    out.append(_fail("index_bounds", ell=ell, r=r))
                    break
    return out


def check_path_identities(bound: int, k_max: int = 8) -> list[dict[str, Any]]:
    """Translation, reflection and lift identities for the axis-meeting counts,
    plus the closed axis formula, all against brute-force counts."""
    out = []
    us = range(-bound, 1)
    vs = range(1, bound + 1)
    for u, v, u2, v2 in itertools.product(us, vs, us, vs):
        if u2 > u:
            continue
        for k in range(k_max + 1):
            base = d_count(k, u, v, u2, v2)
            for j in range(-bound - u2, -u + 1):
                if d_count(k, u + j, v, u2 + j, v2) != base:
                    out.append(_fail("scott_i", k=k, u=u, v=v, u2=u2, v2=v2, j=j))
            for t in range(1, k):
                if d_count(k - t, u, v + t, u2, v2) != base:
                    out.append(_fail("scott_iii", k=k, u=u, v=v, u2=u2, v2=v2, t=t))
    for u2, v2 in itertools.product(us, vs):
        for k in range(k_max + 1):
            if d_count(k, 0, 1, u2, v2) != d_count(k, 0, v2, u2 - v2 + 1, 1):
                out.append(_fail("scott_ii", k=k, u2=u2, v2=v2))
    for u2 in range(-2 * bound, 0):
        for k in range(2, -u2 + 2):
            if d_closed_axis(k, u2) != d_count(k, 0, 1, u2, 1):
                out.append(_fail("scott_iv", k=k, u2=u2))
    return out


def cross_check(spec: GridSpec) -> CheckReport:
    report = CheckReport()
    evaluators = _evaluators(spec)
    for p in sorted(spec.cells()):
        report.cells_checked += 1
        values = {}
        for name, fn in evaluators.items():
            v = fn(p)
            if v is not None:
                values[name] = v
        expected = {0} if not is_valid(p) else set()
        if len(set(values.values()) | expected) > 1:
            report.mismatches.append(
                {
                    "g": p.g,
                    "ell": p.ell,
                    "r": p.r,
                    "values": {k: str(v) for k, v in values.items()},
                }
            )

    failures = report.identity_failures
    failures += check_pascal(s_max=spec.r_max - spec.ell_min + 1, j_max=spec.g_max)
    failures += check_catalan(m_max=min(max(-spec.ell_min, 1), 10))
    failures += check_full_fiber(spec.g_max, max(spec.ell_max, 0))
    failures += check_self_annihilation(spec.g_max, max(spec.ell_max, 0))
    failures += check_index_decomposition(spec.ell_min, spec.r_max)
    failures += check_path_identities(spec.identity_bound)
    return report


__all__ = [
    "METHODS",
    "CheckReport",
    "GridSpec",
    "check_catalan",
    "check_full_fiber",
    "check_index_decomposition",
    "check_pascal",
    "check_self_annihilation",
    "check_path_identities",
    "cross_check",
]

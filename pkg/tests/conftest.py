from __future__ import annotations

import itertools

import pytest

ACCEPTANCE_LINES: list[str] = []


def all_words(start, end):
    """Every U/D word between two points that stays in the quadrant, found by
    filtering the full product of letters. Deliberately shares no code with
    the library's pruned walker."""
    (u, v), (u2, v2) = start, end
    n_down = u - u2
    n_up = v2 - v + n_down
    if n_down < 0 or n_up < 0:
        return []
    out = []
    for word in itertools.product("UD", repeat=n_up + n_down):
        if word.count("D") != n_down:
            continue
        x, y = u, v
        pts = [(x, y)]
        for ch in word:
            x, y = (x, y + 1) if ch == "U" else (x - 1, y - 1)
            pts.append((x, y))
        if all(px <= 0 and py >= 1 for px, py in pts):
            out.append(("".join(word), pts))
    return out


@pytest.fixture
def brute_words():
    return all_words


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

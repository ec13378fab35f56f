"""Tevelev degrees from the genus-lowering boundary recursion.

This route shares nothing with the binomial formulas beyond ``is_valid`` and
serves as their independent oracle.
"""

from __future__ import annotations

import threading
from typing import Iterator

from tevelev.core import TevParams, is_valid


class MemoTable:
    """Thread-safe ``TevParams -> int`` cache with insert-if-absent semantics.

    Racing writers may compute the same key twice; the first stored value wins
    and, since values are deterministic, both agree anyway.
    """

    def __init__(self) -> None:
        self._data: dict[TevParams, int] = {}
        self._lock = threading.Lock()

    def get(self, key: TevParams) -> int | None:
        return self._data.get(key)

    def insert(self, key: TevParams, value: int) -> int:
        with self._lock:
            return self._data.setdefault(key, value)

    def __contains__(self, key: object) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)

    def __iter__(self) -> Iterator[TevParams]:
        return iter(list(self._data))


_shared_memo = MemoTable()


def _children(p: TevParams) -> tuple[TevParams, TevParams]:
    return (
        TevParams(p.g - 1, p.ell, max(1, p.r - 1)),
        TevParams(p.g - 1, p.ell + 1, p.r + 1),
    )


def _leaf_value(p: TevParams) -> int | None:
    if not is_valid(p):
        return 0
    if p.g == 0:
        return 1
    return None


def tev_recursive(p: TevParams, memo: MemoTable | None = None) -> int:
    """Evaluate ``Tev_{g,ell,r}`` by recursing on the genus down to zero.

    Invalid triples are zero by definition, so children never need their own
    hypothesis checks. An explicit stack replaces Python recursion so large
    genera do not hit the interpreter's recursion limit.

    The memo grows roughly like ``g**3`` (about 87k entries at ``g = 100``);
    use :func:`tevelev.closed_form.tev_closed` for large genera.
    """
    if memo is None:
        memo = _shared_memo
    leaf = _leaf_value(p)
    if leaf is not None:
        return leaf

    stack = [p]
    while stack:
        top = stack[-1]
        if top in memo:
            stack.pop()
            continue
        pending = []
        values = []
        for child in _children(top):
            v = _leaf_value(child)
            if v is None:
                v = memo.get(child)
            if v is None:
                pending.append(child)
            else:
                values.append(v)
        if pending:
            stack.extend(pending)
            continue
        memo.insert(top, values[0] + values[1])
        stack.pop()

    value = memo.get(p)
    assert value is not None
    return value

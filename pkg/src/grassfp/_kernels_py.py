"""Pure-Python LR tableau counter; fallback for the compiled ``_kernels``."""
from __future__ import annotations

import sys

INT64_MAX = 2**63 - 1


def lr_count(outer, inner, content) -> int:
    """Count LR tableaux of skew shape ``outer/inner`` with the given content.

    ``inner`` must be padded to ``len(outer)`` and contained in ``outer``;
    ``content`` must be a partition with ``sum(content) == |outer| - |inner|``.
    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) and the lattice condition is checked after every entry.
    """
    cells = []
    for i in range(len(outer)):
        for j in range(outer[i] - 1, inner[i] - 1, -1):
            cells.append((i, j))
    ncell = len(cells)
    if ncell == 0:
        return 1
    pos = {c: t for t, c in enumerate(cells)}
    right = [pos.get((i, j + 1), -1) for i, j in cells]
    above = [pos.get((i - 1, j), -1) for i, j in cells]
    rows = [i for i, _ in cells]
    m = len(content)
    cap = (0,) + tuple(content)
    fill = [0] * ncell
    counts = [0] * (m + 1)
    counts[0] = sys.maxsize

    def rec(t):
        if t == ncell:
            return 1
        hi = rows[t] + 1
        if hi > m:
            hi = m
        r = right[t]
        if r >= 0 and fill[r] < hi:
            hi = fill[r]
        a = above[t]
        lo = fill[a] + 1 if a >= 0 else 1
        total = 0
        for letter in range(lo, hi + 1):
            c = counts[letter]
            if c >= cap[letter] or c >= counts[letter - 1]:
                continue
            counts[letter] = c + 1
            fill[t] = letter
            total += rec(t + 1)
            counts[letter] = c
        return total

    total = rec(0)
    if total > INT64_MAX:
        raise OverflowError("LR coefficient exceeds int64")
    return total

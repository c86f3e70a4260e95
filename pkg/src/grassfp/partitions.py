"""Partition combinatorics for Schubert calculus on Gr(k, n).

Partitions are normalized tuples (trailing zeros trimmed), so ``(2, 1)`` and
``(2, 1, 0)`` are the same dictionary key.  Rows and columns of Young
diagrams are 1-based in :class:`HookData` to match the usual (i, j) cell
labels.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ParameterError

__all__ = [
    "Partition",
    "GrContext",
    "HookData",
    "gr_context",
    "enumerate_basis",
    "transpose",
    "complement",
    "hook_data",
    "hook_dimension",
]


class Partition(tuple):
    """Weakly decreasing sequence of nonnegative integers, zeros trimmed."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ParameterError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ParameterError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # caller guarantees a normalized, weakly decreasing tuple
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"6,4,2,1"``; ``"0"`` and ``""`` give the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            if isinstance(exc, ParameterError):
                raise
            raise ParameterError(f"cannot parse partition {text!r}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self) > k:
            raise ParameterError(f"{self} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    def transpose(self) -> "Partition":
        return transpose(self)

    def fits(self, k: int, n: int) -> bool:
        return len(self) <= k and (not self or self[0] <= n - k)

    def is_rectangular(self, k: int) -> bool:
        """True when all k parts (zeros included) are equal."""
        p = self.padded(k)
        return p[0] == p[-1] if p else True


def transpose(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition._trusted(tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)))


def _check_kn(k: int, n: int) -> None:
    if not (isinstance(k, int) and isinstance(n, int)) or k < 1 or n <= k:
        raise ParameterError(f"need integers 1 <= k < n, got k={k}, n={n}")


def _box_partitions(rows: int, width: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix, cap, left):
        if left == 0:
            yield prefix
            return
        for p in range(cap, -1, -1):
            yield from rec(prefix + (p,), p, left - 1)

    yield from rec((), width, rows)


def enumerate_basis(k: int, n: int) -> list[Partition]:
    """All partitions in the k x (n-k) box in graded order.

    Graded order: weight ascending, then parts lexicographically descending.
    """
    _check_kn(k, n)
    parts = [Partition(p) for p in _box_partitions(k, n - k)]
    parts.sort(key=lambda p: (p.size, tuple(-x for x in p.padded(k))))
    return parts


@dataclass(frozen=True)
class GrContext:
    """The Grassmannian Gr(k, n) together with its ordered Schubert basis."""

    k: int
    n: int
    basis: tuple[Partition, ...] = field(init=False, repr=False, compare=False)
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        basis = tuple(enumerate_basis(self.k, self.n))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "index", {lam: i for i, lam in enumerate(basis)})

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    def check(self, lam: Iterable[int]) -> Partition:
        """Normalize ``lam`` and make sure it is a basis label."""
        lam = Partition(lam)
        if lam not in self.index:
            raise ParameterError(
                f"partition {lam} is not in P_{self.k}({self.n}) "
                f"(at most {self.k} parts, each <= {self.n - self.k})"
            )
        return lam


@lru_cache(maxsize=256)
def gr_context(k: int, n: int) -> GrContext:
    _check_kn(k, n)
    return GrContext(k, n)


def complement(lam: Iterable[int], ctx: GrContext) -> Partition:
    lam = ctx.check(lam)
    w = ctx.n - ctx.k
    return Partition(w - p for p in reversed(lam.padded(ctx.k)))


@dataclass(frozen=True)
class HookData:
    """Per-cell contents and hook lengths of a diagram, relative to U(k).

    ``cells`` holds ``(i, j, k - i + j, hook)``.  ``a_seq[r]`` and ``b_seq[r]``
    belong to the same cell: ``a = k - i + lam_i - j + 1`` and ``b = hook``.
    """

    k: int
    lam: Partition
    cells: tuple[tuple[int, int, int, int], ...]
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]


def hook_data(lam: Iterable[int], k: int) -> HookData:
    lam = Partition(lam)
    if k < 1 or len(lam) > k:
        raise ParameterError(f"{lam} needs at most k={k} parts")
    lt = lam.transpose()
    cells, a_seq, b_seq = [], [], []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            hook = row + lt[j - 1] - i - j + 1
            cells.append((i, j, k - i + j, hook))
            a_seq.append(k - i + row - j + 1)
            b_seq.append(hook)
    return HookData(k, lam, tuple(cells), tuple(a_seq), tuple(b_seq))


def hook_dimension(lam: Iterable[int], k: int) -> int:
    """Dimension of the irreducible U(k)-module with highest weight ``lam``."""
    hd = hook_data(lam, k)
    num = math.prod(c[2] for c in hd.cells)
    den = math.prod(c[3] for c in hd.cells)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"hook-length quotient not integral for {lam}, k={k}")
    return q

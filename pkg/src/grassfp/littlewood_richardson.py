"""Littlewood-Richardson coefficients and the truncated cup product on H*(Gr(k, n))."""
from __future__ import annotations

import threading
from contextlib import contextmanager
from typing import Iterable, NamedTuple

from . import kernels
from .errors import CoefficientOverflowError
from .partitions import GrContext, Partition

__all__ = [
    "LRQuery",
    "lr_coefficient",
    "lr_expand",
    "cup_product",
    "lr_cache",
    "INT64_MAX",
]

INT64_MAX = 2**63 - 1


class LRQuery(NamedTuple):
    lam: Partition
    mu: Partition
    nu: Partition


_cache: dict | None = None
_cache_lock = threading.Lock()


@contextmanager
def lr_cache():
    """Memoize :func:`lr_coefficient` inside the ``with`` block.

    Nested use shares the outer cache; the cache is dropped on exit of the
    outermost block.
    """
    global _cache
    with _cache_lock:
        owner = _cache is None
        if owner:
            _cache = {}
    try:
        yield
    finally:
        if owner:
            with _cache_lock:
                _cache = None


def _checked(value: int) -> int:
    if value > INT64_MAX:
        raise CoefficientOverflowError(f"coefficient {value} exceeds int64")
    return value


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Number of LR tableaux of shape nu/lam with content mu.

    Degenerate inputs (weight mismatch, lam not inside nu) give 0.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or len(lam) > len(nu) or len(mu) > len(nu):
        return 0
    inner = lam.padded(len(nu))
    if any(a > b for a, b in zip(inner, nu)) or any(a > b for a, b in zip(mu, nu)):
        return 0
    cache = _cache
    if cache is not None:
        key = (lam, mu, nu)
        hit = cache.get(key)
        if hit is not None:
            return hit
    value = _checked(kernels.lr_count(tuple(nu), inner, tuple(mu)))
    if cache is not None:
        with _cache_lock:
            cache[key] = value
    return value


def _candidate_shapes(lam: Partition, mu: Partition, max_rows: int):
    """Partitions nu with at most ``max_rows`` rows that could occur in s_lam * s_mu."""
    rows = max(len(lam), len(mu))
    if rows > max_rows:
        return
    total = lam.size + mu.size
    rows = min(max_rows, len(lam) + len(mu))
    lp = lam.padded(rows)
    mp = mu.padded(rows)
    # row i of nu/lam only holds letters 1..i, at most mu_1 + ... + mu_i boxes
    prefix = [sum(mp[: i + 1]) for i in range(rows)]

    def rec(i, prev, left, acc):
        if i == rows:
            if left == 0:
                yield Partition(acc)
            return
        lo = max(lp[i], mp[i])
        hi = min(prev, lp[i] + prefix[i], lp[i] + left)
        for v in range(hi, lo - 1, -1):
            extra = v - lp[i]
            yield from rec(i + 1, v, left - extra, acc + (v,))

    yield from rec(0, lam[0] + mu[0] if lam and mu else total, mu.size, ())


def lr_expand(lam: Iterable[int], mu: Iterable[int], max_rows: int) -> dict[Partition, int]:
    """Schur expansion of s_lam * s_mu in k = ``max_rows`` variables."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size < mu.size or (lam.size == mu.size and lam < mu):
        # fewer boxes to fill keeps the search small
        lam, mu = mu, lam
    out: dict[Partition, int] = {}
    for nu in _candidate_shapes(lam, mu, max_rows):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def cup_product(lam: Iterable[int], mu: Iterable[int], ctx: GrContext) -> dict[Partition, int]:
    """Classical product in H*(Gr(k, n)); shapes leaving the box are dropped."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    width = ctx.n - ctx.k
    return {
        nu: c
        for nu, c in lr_expand(lam, mu, ctx.k).items()
        if not nu or nu[0] <= width
    }

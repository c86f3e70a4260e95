"""Sine-product formula for the spectral radius of Schubert operators and its analysis.

For lam with at most k parts, ``rho_{k,lam}(x) = prod_r sin(a_r pi/x) / sin(b_r pi/x)``
where ``(a_r, b_r)`` are the paired content/hook sequences of
:func:`grassfp.partitions.hook_data`.  At ``x = n`` this is the spectral
radius of quantum multiplication by [X_lam] on QH*(Gr(k, n)) at q = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError, ParameterError
from .partitions import Partition, hook_data, hook_dimension, transpose

__all__ = [
    "RhoFunction",
    "rho_closed_form",
    "rho",
    "k2_simplified",
    "lower_bound",
    "richardson_limit",
    "LimitReport",
    "limit_check",
    "ScanReport",
    "monotonicity_concavity_scan",
    "LemmaA1Report",
    "lemma_a1_check",
    "transpose_duality_check",
    "GalkinReport",
    "galkin_check",
]

LOG_SPACE_CELLS = 40


@dataclass(frozen=True)
class RhoFunction:
    k: int
    lam: Partition
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    x_min: int = field(init=False)

    def __post_init__(self):
        first = self.lam[0] if self.lam else 0
        object.__setattr__(self, "x_min", self.k + first - 1)

    @classmethod
    def of(cls, lam, k: int) -> "RhoFunction":
        hd = hook_data(lam, k)
        return cls(k, hd.lam, hd.a_seq, hd.b_seq)

    @property
    def rectangular(self) -> bool:
        return self.lam.is_rectangular(self.k)

    @property
    def dimension(self) -> int:
        return hook_dimension(self.lam, self.k)

    def __call__(self, x: float) -> float:
        return rho_closed_form(self, x)


def rho_closed_form(rf: RhoFunction, x: float) -> float:
    """Evaluate the sine product at real ``x > k + lam_1 - 1``."""
    x = float(x)
    if not math.isfinite(x) or x <= rf.x_min:
        raise DomainError(f"x={x} must exceed k + lam_1 - 1 = {rf.x_min}")
    t = math.pi / x
    if len(rf.a_seq) > LOG_SPACE_CELLS:
        return math.exp(sum(math.log(math.sin(a * t) / math.sin(b * t))
                            for a, b in zip(rf.a_seq, rf.b_seq) if a != b))
    value = 1.0
    for a, b in zip(rf.a_seq, rf.b_seq):
        if a != b:
            value *= math.sin(a * t) / math.sin(b * t)
    return value


def rho(lam, k: int, x: float) -> float:
    return rho_closed_form(RhoFunction.of(lam, k), x)


def k2_simplified(lam, n: int) -> float:
    """Two-row shortcut ``sin((lam_1 - lam_2 + 1) pi/n) / sin(pi/n)``."""
    lam = Partition(lam)
    if len(lam) > 2:
        raise ParameterError("k2_simplified only applies to k = 2")
    l1, l2 = lam.padded(2)
    if n <= 2 or l1 > n - 2:
        raise ParameterError(f"{lam} is not in P_2({n})")
    return math.sin((l1 - l2 + 1) * math.pi / n) / math.sin(math.pi / n)


def lower_bound(rf: RhoFunction, n: int) -> float:
    """``dim S_lam(V) * prod_cells (1 - pi^2 (k-i+j)^2 / (6 n^2))``."""
    hd = hook_data(rf.lam, rf.k)
    factor = 1.0
    for _, _, content, _ in hd.cells:
        factor *= 1.0 - math.pi**2 * content**2 / (6.0 * n * n)
    return rf.dimension * factor


def richardson_limit(xs: Sequence[float], values: Sequence[float]) -> float:
    """Limit of ``a + b/x^2`` fitted through the last two samples."""
    if len(xs) < 2:
        raise ParameterError("need at least two samples")
    x1, x2 = float(xs[-2]), float(xs[-1])
    f1, f2 = float(values[-2]), float(values[-1])
    return (x2 * x2 * f2 - x1 * x1 * f1) / (x2 * x2 - x1 * x1)


@dataclass(frozen=True)
class LimitReport:
    lam: Partition
    k: int
    xs: tuple[float, ...]
    values: tuple[float, ...]
    target: int
    gaps: tuple[float, ...]
    gaps_shrinking: bool
    final_gap: float
    extrapolated: float
    envelope_constant: float
    asymptotic_constant: float
    within_envelope: bool


def limit_check(rf: RhoFunction, n_schedule: Sequence[float]) -> LimitReport:
    """Approach of rho(x) to the hook-length dimension along ``n_schedule``.

    The envelope constant is ``max gap * n^2`` over the second half of the
    schedule; ``asymptotic_constant`` is the leading 1/x^2 coefficient
    ``dim * pi^2 * sum(a^2 - b^2) / 6``.
    """
    xs = [float(x) for x in n_schedule]
    if len(xs) < 2 or any(b <= a for a, b in zip(xs, xs[1:])):
        raise ParameterError("schedule must be strictly increasing with at least two points")
    values = [rho_closed_form(rf, x) for x in xs]
    target = rf.dimension
    gaps = [target - v for v in values]
    shrinking = all(abs(b) <= abs(a) for a, b in zip(gaps, gaps[1:]))
    tail = len(xs) // 2
    scaled = [abs(g) * x * x for g, x in zip(gaps[tail:], xs[tail:])]
    envelope = max(scaled)
    asym = target * math.pi**2 * sum(a * a - b * b for a, b in zip(rf.a_seq, rf.b_seq)) / 6.0
    return LimitReport(
        lam=rf.lam, k=rf.k, xs=tuple(xs), values=tuple(values), target=target,
        gaps=tuple(gaps), gaps_shrinking=shrinking, final_gap=gaps[-1],
        extrapolated=richardson_limit(xs, values),
        envelope_constant=envelope, asymptotic_constant=asym,
        within_envelope=abs(gaps[-1]) * xs[-1] ** 2 <= envelope * (1 + 1e-9),
    )


@dataclass(frozen=True)
class ScanReport:
    vacuous: bool
    increasing: bool
    min_first_difference: float
    second_differences: tuple[float, ...]
    concavity_threshold: float | None
    note: str = ""


def monotonicity_concavity_scan(rf: RhoFunction, grid: Sequence[float]) -> ScanReport:
    """First and second divided differences of rho on ``grid``.

    ``concavity_threshold`` is the first grid point from which every later
    second difference is negative (``None`` if the last one is not).
    """
    xs = np.asarray(grid, dtype=float)
    if xs.size < 3 or np.any(np.diff(xs) <= 0) or xs[0] <= rf.x_min:
        raise ParameterError("grid must be strictly increasing, >= 3 points, above x_min")
    if rf.rectangular:
        return ScanReport(True, False, 0.0, (), None, "vacuous (constant function)")
    f = np.array([rho_closed_form(rf, x) for x in xs])
    first = np.diff(f)
    slopes = first / np.diff(xs)
    second = 2.0 * np.diff(slopes) / (xs[2:] - xs[:-2])
    threshold = None
    for idx in range(len(second) - 1, -1, -1):
        if second[idx] >= 0:
            break
        threshold = float(xs[idx + 1])
    return ScanReport(False, bool(np.all(first > 0)), float(first.min()),
                      tuple(second.tolist()), threshold)


@dataclass(frozen=True)
class LemmaA1Report:
    a: float
    b: float
    xs: tuple[float, ...]
    slopes: tuple[float, ...]
    all_positive: bool


def lemma_a1_check(a: float, b: float, grid: Sequence[float]) -> LemmaA1Report:
    """Central-difference slopes of ``sin(a/x) / sin(b/x)`` on ``grid``."""
    if not (a > b > 0):
        raise ParameterError("need a > b > 0")
    xs = [float(x) for x in grid]
    if any(x <= a / math.pi for x in xs):
        raise ParameterError("grid must lie in (a/pi, inf)")

    def f(x):
        return math.sin(a / x) / math.sin(b / x)

    slopes = []
    for x in xs:
        h = max(1e-4 * x, 1e-6)
        lo = max(x - h, (x + a / math.pi) / 2)
        slopes.append((f(x + h) - f(lo)) / (x + h - lo))
    return LemmaA1Report(a, b, tuple(xs), tuple(slopes), all(s > 0 for s in slopes))


def transpose_duality_check(lam, k: int, n: int, tol: float = 1e-12) -> bool:
    """rho_{k,lam}(n) agrees with rho_{n-k,lam^t}(n)."""
    lam = Partition(lam)
    if not lam.fits(k, n):
        raise ParameterError(f"{lam} is not in P_{k}({n})")
    return abs(rho(lam, k, n) - rho(transpose(lam), n - k, n)) <= tol


@dataclass(frozen=True)
class GalkinReport:
    k: int
    n: int
    lhs: float
    rhs: int
    holds: bool
    equality: bool
    expected_equality: bool

    @property
    def consistent(self) -> bool:
        return self.holds and self.equality == self.expected_equality


def galkin_check(k: int, n: int, tol: float = 1e-9) -> GalkinReport:
    """Compare n * rho_{k,(1)}(n) with dim Gr(k, n) + 1."""
    if not 1 <= k < n:
        raise ParameterError(f"need 1 <= k < n, got k={k}, n={n}")
    lhs = n * rho((1,), k, n)
    rhs = k * (n - k) + 1
    return GalkinReport(k, n, lhs, rhs, lhs >= rhs - tol, abs(lhs - rhs) <= tol, k in (1, n - 1))

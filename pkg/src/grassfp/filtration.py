"""Filtered families of Z_+-rings on the polynomial representations of U(k).

Level r has basis P_k(k + r).  In ``classical`` mode the product is the cup
product on H*(Gr(k, k + r)) (tensor product followed by projection onto the
level); in ``verlinde`` mode it is the fusion product, realized as quantum
multiplication on Gr(k, k + r) at q = 1.
"""
from __future__ import annotations

import math
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .closed_form import RhoFunction, rho_closed_form, richardson_limit
from .errors import ParameterError
from .partitions import Partition, enumerate_basis, gr_context, hook_dimension
from .quantum import build_table, operator_matrix, quantum_product
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    ZPlusRingTable,
    check_ring_homomorphism,
    fpdim_basis,
    perron_root,
    ring_from_table,
)

__all__ = [
    "FilteredFamily",
    "FPdLimitReport",
    "AxiomReport",
    "build_level",
    "fusion_coefficient",
    "level_fpdim",
    "fpd_bullet",
    "check_zbullet_axioms",
]

FamilyMode = Literal["classical", "verlinde"]


@dataclass
class FilteredFamily:
    """Lazily built levels A_r, keeping at most ``max_levels`` of them in memory.

    Levels whose rank exceeds ``spectral_rank_cap`` are not diagonalized;
    :func:`level_fpdim` falls back to the closed form (verlinde) or to the
    grading argument (classical) there.
    """

    k: int
    mode: FamilyMode = "verlinde"
    max_levels: int = 8
    spectral_rank_cap: int = 500
    _levels: OrderedDict = field(default_factory=OrderedDict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("k must be positive")
        if self.mode not in ("classical", "verlinde"):
            raise ParameterError(f"unknown mode {self.mode!r}")

    @property
    def identity(self) -> Partition:
        return Partition()

    def labels(self, r: int) -> tuple[Partition, ...]:
        if r < 0:
            raise ParameterError("level must be nonnegative")
        if r == 0:
            return (Partition(),)
        return tuple(enumerate_basis(self.k, self.k + r))

    def inject_level(self, r: int, ring: ZPlusRingTable) -> None:
        """Replace level r (used by tests to plant a corrupted level)."""
        with self._lock:
            self._levels[r] = ring
            self._levels.move_to_end(r)


def _construct(fam: FilteredFamily, r: int) -> ZPlusRingTable:
    if r == 0:
        return ZPlusRingTable((Partition(),), {(0, 0): {0: 1}}, 0)
    ctx = gr_context(fam.k, fam.k + r)
    mode = "quantum" if fam.mode == "verlinde" else "classical"
    return ring_from_table(build_table(ctx, mode))


def build_level(fam: FilteredFamily, r: int) -> ZPlusRingTable:
    if r < 0:
        raise ParameterError("level must be nonnegative")
    with fam._lock:
        ring = fam._levels.get(r)
        if ring is not None:
            fam._levels.move_to_end(r)
            return ring
    ring = _construct(fam, r)
    with fam._lock:
        ring = fam._levels.setdefault(r, ring)
        fam._levels.move_to_end(r)
        while len(fam._levels) > fam.max_levels:
            fam._levels.popitem(last=False)
    return ring


def _level_label(fam: FilteredFamily, lam, r: int) -> Partition:
    lam = Partition(lam)
    if len(lam) > fam.k or (lam and lam[0] > r):
        raise ParameterError(f"{lam} is not a basis label of level {r} (P_{fam.k}({fam.k + r}))")
    return lam


def fusion_coefficient(fam: FilteredFamily, lam, mu, nu, r: int) -> int:
    """Multiplicity of S_nu in S_lam *_r S_mu (sum of quantum constants over d)."""
    if fam.mode != "verlinde":
        raise ParameterError("fusion coefficients need a verlinde family")
    lam, mu, nu = (_level_label(fam, p, r) for p in (lam, mu, nu))
    if r == 0:
        return 1
    expansion = quantum_product(lam, mu, gr_context(fam.k, fam.k + r))
    return sum(c for (rho, _d), c in expansion.items() if rho == nu)


@dataclass(frozen=True)
class LevelValue:
    r: int
    value: float
    method: str  # power-iteration | exact-zero-by-nilpotency | exact-zero-by-grading | identity | closed-form
    closed_form: float | None = None


def level_fpdim(fam: FilteredFamily, lam, r: int, tol: float = DEFAULT_TOL,
                max_iter: int = DEFAULT_MAX_ITER) -> LevelValue:
    """FPdim of [S_lam] in level r."""
    lam = _level_label(fam, lam, r)
    if not lam:
        return LevelValue(r, 1.0, "identity", 1.0 if fam.mode == "verlinde" else None)
    n = fam.k + r
    closed = rho_closed_form(RhoFunction.of(lam, fam.k), n) if fam.mode == "verlinde" else None
    if math.comb(n, fam.k) > fam.spectral_rank_cap:
        if fam.mode == "classical":
            # lam != 0 raises cohomological degree, so the operator is nilpotent
            return LevelValue(r, 0.0, "exact-zero-by-grading")
        return LevelValue(r, closed, "closed-form", closed)
    mode = "quantum" if fam.mode == "verlinde" else "classical"
    mat = operator_matrix(lam, gr_context(fam.k, n), mode).matrix
    res = perron_root(mat, tol, max_iter)
    return LevelValue(r, res.radius, res.method, closed)


@dataclass(frozen=True)
class FPdLimitReport:
    lam: Partition
    k: int
    mode: str
    levels: tuple[LevelValue, ...]
    raw_limit: float
    extrapolated: float
    target: int
    strictly_increasing: bool
    converged: bool
    max_closed_form_gap: float

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v.value for v in self.levels)


def fpd_bullet(fam: FilteredFamily, lam, r_schedule: Sequence[int], tol: float = 1e-3,
               spectral_tol: float = DEFAULT_TOL) -> FPdLimitReport:
    """Per-level FPdim of [S_lam] along ``r_schedule`` and its limit.

    The limit is Richardson-extrapolated in n = k + r assuming ``a + b/n^2``.
    ``converged`` compares the extrapolated value with the target (the
    hook-length dimension for verlinde, the indicator of lam = 0 for
    classical) at tolerance ``tol``.
    """
    lam = Partition(lam)
    rs = list(r_schedule)
    if not rs or any(b <= a for a, b in zip(rs, rs[1:])):
        raise ParameterError("r_schedule must be strictly increasing and nonempty")
    first = lam[0] if lam else 0
    if rs[0] < first:
        raise ParameterError(f"schedule starts at r={rs[0]} but {lam} first appears at r={first}")
    levels = tuple(level_fpdim(fam, lam, r, spectral_tol) for r in rs)
    values = [v.value for v in levels]
    if fam.mode == "verlinde":
        target = hook_dimension(lam, fam.k)
        gaps = [abs(v.value - v.closed_form) for v in levels if v.closed_form is not None]
    else:
        target = 1 if not lam else 0
        gaps = []
    ns = [fam.k + r for r in rs]
    extrapolated = richardson_limit(ns, values) if len(rs) >= 2 else values[-1]
    increasing = all(b > a for a, b in zip(values, values[1:]))
    return FPdLimitReport(
        lam=lam, k=fam.k, mode=fam.mode, levels=levels, raw_limit=values[-1],
        extrapolated=extrapolated, target=target, strictly_increasing=increasing,
        converged=abs(extrapolated - target) <= tol,
        max_closed_form_gap=max(gaps, default=0.0),
    )


@dataclass(frozen=True)
class AxiomReport:
    levels: tuple[int, ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_zbullet_axioms(fam: FilteredFamily, levels: Sequence[int], tol: float = 1e-6) -> AxiomReport:
    """Nested bases, ranks, shared identity and per-level multiplicativity of FPdim."""
    levels = sorted(levels)
    if len(levels) < 3:
        raise ParameterError("need at least three levels")
    failures = []
    previous = None
    for r in levels:
        ring = build_level(fam, r)
        labels = set(ring.labels)
        expected_rank = math.comb(fam.k + r, fam.k)
        if ring.rank != expected_rank:
            failures.append(f"level {r}: rank {ring.rank} != C({fam.k + r},{fam.k}) = {expected_rank}")
        if set(fam.labels(r)) != labels:
            failures.append(f"level {r}: basis is not P_{fam.k}({fam.k + r})")
        if previous is not None and not previous <= labels:
            failures.append(f"level {r}: basis does not contain the previous level's basis")
        previous = labels
        if ring.labels[ring.identity_index] != fam.identity:
            failures.append(f"level {r}: identity is not the empty partition")
        report = fpdim_basis(ring)
        bad = check_ring_homomorphism(ring, report, tol)
        if bad:
            i, j, lhs, rhs = bad[0]
            failures.append(
                f"level {r}: FPdim not multiplicative on {len(bad)} pairs, "
                f"e.g. {ring.labels[i]}*{ring.labels[j]}: {lhs} vs {rhs}"
            )
    return AxiomReport(tuple(levels), tuple(failures))

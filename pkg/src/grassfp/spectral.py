"""Finite-rank Z_+-rings and Frobenius-Perron dimensions.

The spectral radius of a nonnegative matrix is found by power iteration on
``A + I``: adding the identity leaves the Perron root as the unique
eigenvalue of largest modulus, which removes the oscillation caused by
several peripheral eigenvalues (e.g. permutation matrices).
"""
from __future__ import annotations

import graphlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

import numpy as np

from .errors import ParameterError, SpectralConvergenceError
from .quantum import ProductTable

__all__ = [
    "ZPlusRingTable",
    "PerronResult",
    "SpectralReport",
    "is_nilpotent_pattern",
    "perron_root",
    "spectral_radius",
    "fpdim_basis",
    "check_ring_homomorphism",
    "ring_from_table",
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
]

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000


@dataclass(frozen=True)
class ZPlusRingTable:
    """Basis labels plus structure constants ``constants[(i, j)] = {r: c_ij^r}``."""

    labels: tuple[Hashable, ...]
    constants: Mapping[tuple[int, int], Mapping[int, int]]
    identity_index: int

    def __post_init__(self):
        n = len(self.labels)
        if not 0 <= self.identity_index < n:
            raise ParameterError("identity index out of range")
        for (i, j), vec in self.constants.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ParameterError(f"constant key {(i, j)} out of range")
            for r, c in vec.items():
                if not 0 <= r < n:
                    raise ParameterError(f"basis index {r} out of range")
                if c < 0:
                    raise ParameterError(f"negative structure constant c^{r}_{i}{j} = {c}")
        e = self.identity_index
        for j in range(n):
            for left, right in ((e, j), (j, e)):
                vec = {r: c for r, c in self.constants.get((left, right), {}).items() if c}
                if vec != {j: 1}:
                    raise ParameterError(f"{self.labels[e]!r} is not a two-sided identity")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def product(self, i: int, j: int) -> Mapping[int, int]:
        return self.constants.get((i, j), {})

    def left_matrix(self, i: int) -> np.ndarray:
        """Matrix of gamma -> beta_i * gamma; column c is the image of beta_c."""
        m = np.zeros((self.rank, self.rank), dtype=np.int64)
        for c in range(self.rank):
            for r, v in self.product(i, c).items():
                m[r, c] += v
        return m


def ring_from_table(table: ProductTable) -> ZPlusRingTable:
    """Specialize q = 1 by summing over degrees."""
    ctx = table.ctx
    constants = {}
    for key, expansion in table.entries.items():
        vec: dict[int, int] = {}
        for (nu, _d), c in expansion.items():
            r = ctx.index[nu]
            vec[r] = vec.get(r, 0) + c
        constants[key] = vec
    return ZPlusRingTable(ctx.basis, constants, ctx.index[ctx.basis[0]])


@dataclass(frozen=True)
class PerronResult:
    radius: float
    iterations: int
    residual: float
    method: str  # "power-iteration" or "exact-zero-by-nilpotency"
    vector: np.ndarray | None


def is_nilpotent_pattern(m: np.ndarray) -> bool:
    """True when the digraph of nonzero entries has no cycle (hence nilpotent)."""
    rows, cols = np.nonzero(m)
    if np.any(rows == cols):
        return False
    ts = graphlib.TopologicalSorter({i: () for i in range(m.shape[0])})
    for r, c in zip(rows.tolist(), cols.tolist()):
        ts.add(r, c)
    try:
        ts.prepare()
    except graphlib.CycleError:
        return False
    return True


def perron_root(m, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> PerronResult:
    """Spectral radius of a nonnegative square matrix with diagnostics.

    On success ``|A v - rho v|_inf <= tol`` for the returned vector with
    ``|v|_inf = 1``.  Nilpotent sparsity patterns return exactly 0.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError("matrix must be square")
    if not np.all(np.isfinite(a)) or np.any(a < 0):
        raise ParameterError("matrix must be finite and entrywise nonnegative")
    if tol <= 0 or max_iter < 1:
        raise ParameterError("tol must be positive and max_iter >= 1")
    if is_nilpotent_pattern(a):
        return PerronResult(0.0, 0, 0.0, "exact-zero-by-nilpotency", None)
    b = a + np.eye(a.shape[0])
    v = np.ones(a.shape[0])
    mu = residual = float("nan")
    for it in range(1, max_iter + 1):
        w = b @ v
        mu = float(np.max(w))
        w /= mu
        residual = mu * float(np.max(np.abs(w - v)))
        v = w
        if residual <= tol:
            return PerronResult(max(mu - 1.0, 0.0), it, residual, "power-iteration", v)
    raise SpectralConvergenceError(
        f"power iteration did not converge in {max_iter} steps (residual {residual:.3g})",
        estimate=mu - 1.0, residual=residual, iterations=max_iter, vector=v,
    )


def spectral_radius(m, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    return perron_root(m, tol, max_iter).radius


@dataclass(frozen=True)
class SpectralReport:
    labels: tuple
    radii: tuple[float, ...]
    iterations: tuple[int, ...]
    residuals: tuple[float, ...]
    methods: tuple[str, ...]
    tol: float

    def __getitem__(self, label) -> float:
        return self.radii[self.labels.index(label)]

    def fpdim(self, coefficients: Mapping[int, float] | Sequence[float]) -> float:
        """Linear extension: sum_i a_i * rho(beta_i) over basis indices."""
        if isinstance(coefficients, Mapping):
            return float(sum(a * self.radii[i] for i, a in coefficients.items()))
        if len(coefficients) != len(self.radii):
            raise ParameterError("coefficient vector has wrong length")
        return float(np.dot(np.asarray(coefficients, dtype=float), self.radii))


def fpdim_basis(ring: ZPlusRingTable, tol: float = DEFAULT_TOL,
                max_iter: int = DEFAULT_MAX_ITER, threads: int = 1) -> SpectralReport:
    def one(i):
        return perron_root(ring.left_matrix(i), tol, max_iter)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, range(ring.rank)))
    else:
        results = [one(i) for i in range(ring.rank)]
    return SpectralReport(
        labels=tuple(ring.labels),
        radii=tuple(r.radius for r in results),
        iterations=tuple(r.iterations for r in results),
        residuals=tuple(r.residual for r in results),
        methods=tuple(r.method for r in results),
        tol=tol,
    )


def check_ring_homomorphism(ring: ZPlusRingTable, report: SpectralReport, tol: float = 1e-6):
    """Pairs (i, j) where FPdim(b_i b_j) and FPdim(b_i) FPdim(b_j) differ.

    Returns ``[(i, j, fpdim_of_product, product_of_fpdims), ...]``; the
    comparison is relative with a floor of 1.
    """
    violations = []
    radii = report.radii
    for i in range(ring.rank):
        for j in range(ring.rank):
            lhs = report.fpdim(ring.product(i, j))
            rhs = radii[i] * radii[j]
            if abs(lhs - rhs) > tol * max(1.0, abs(lhs), abs(rhs)):
                violations.append((i, j, lhs, rhs))
    return violations

"""Small quantum cohomology of Gr(k, n): structure constants, tables, operators.

Quantum products are computed by the rim-hook reduction: expand s_lam * s_mu
classically in k variables, then bring every shape back into the k x (n-k)
box by stripping n-rim hooks.  Each strip contributes one power of q.
Multiplication by the divisor class has a separate implementation
(:func:`quantum_pieri`) that is used as an independent oracle.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal

import numpy as np

from .errors import CoefficientOverflowError, InvariantViolation, ParameterError, TableFormatError
from .littlewood_richardson import INT64_MAX, cup_product, lr_cache, lr_expand
from .partitions import GrContext, Partition, gr_context

__all__ = [
    "QuantumExpansion",
    "ProductTable",
    "MultiplicationMatrix",
    "rim_hook_reduce",
    "quantum_product",
    "quantum_pieri",
    "build_table",
    "multiplication_matrix",
    "operator_matrix",
    "write_table",
    "read_table",
    "cached_table",
    "TABLE_FORMAT_VERSION",
]

Mode = Literal["quantum", "classical"]
QuantumExpansion = dict  # {(Partition, d): coefficient}

TABLE_FORMAT_VERSION = 1


def rim_hook_reduce(nu: Iterable[int], k: int, n: int):
    """Reduce a shape with at most k rows into the k x (n-k) box.

    Returns ``(sign, d, rho)`` with ``s_nu = sign * q**d * s_rho`` in
    QH*(Gr(k, n)), or ``None`` when the class vanishes.  Works on beta
    numbers ``nu_i + k - i``: an n-rim hook strip lowers one beta number by n,
    with sign (-1)**(height - 1) from the strip and (-1)**(k - 1) from the
    relation h_n = (-1)**(k - 1) q.
    """
    nu = Partition(nu)
    if len(nu) > k:
        return None
    beta = [p + k - 1 - i for i, p in enumerate(nu.padded(k))]
    sign, d = 1, 0
    while beta[0] >= n:
        top = beta[0]
        low = top - n
        if low in beta:
            return None
        height_minus_one = sum(1 for b in beta if low < b < top)
        if (height_minus_one + k - 1) % 2:
            sign = -sign
        d += 1
        beta[0] = low
        beta.sort(reverse=True)
    rho = Partition._trusted(tuple(p for p in (b - (k - 1 - i) for i, b in enumerate(beta)) if p))
    return sign, d, rho


def quantum_product(lam: Iterable[int], mu: Iterable[int], ctx: GrContext) -> QuantumExpansion:
    """[X_lam] * [X_mu] as ``{(nu, d): N}`` with every N a positive integer."""
    lam, mu = ctx.check(lam), ctx.check(mu)
    k, n = ctx.k, ctx.n
    terms: dict = {}
    for nu, c in lr_expand(lam, mu, k).items():
        red = rim_hook_reduce(nu, k, n)
        if red is None:
            continue
        sign, d, rho = red
        key = (rho, d)
        terms[key] = terms.get(key, 0) + sign * c
    out = {}
    for key, c in terms.items():
        if c < 0:
            raise InvariantViolation(
                f"negative quantum coefficient {c} for {key} in {lam}*{mu} on Gr({k},{n})"
            )
        if c > INT64_MAX:
            raise CoefficientOverflowError(f"coefficient {c} exceeds int64")
        if c:
            out[key] = c
    return out


def quantum_pieri(lam: Iterable[int], ctx: GrContext) -> QuantumExpansion:
    """[X_(1)] * [X_lam] by the quantum Pieri rule (independent of LR code)."""
    lam = ctx.check(lam)
    k, width = ctx.k, ctx.n - ctx.k
    p = list(lam.padded(k))
    out = {}
    for i in range(k):
        if p[i] < width and (i == 0 or p[i - 1] > p[i]):
            q = p.copy()
            q[i] += 1
            out[(Partition(q), 0)] = 1
    if p[0] == width and p[-1] >= 1:
        out[(Partition(x - 1 for x in p[1:]), 1)] = 1
    return out


@dataclass(frozen=True)
class ProductTable:
    """All products of pairs of basis classes, keyed by basis indices."""

    ctx: GrContext
    mode: Mode
    entries: dict

    def product(self, lam, mu) -> QuantumExpansion:
        i = self.ctx.index[self.ctx.check(lam)]
        j = self.ctx.index[self.ctx.check(mu)]
        return self.entries[(i, j)]

    def records(self):
        """Yield ``(lam, mu, nu, d, coeff)`` for every nonzero constant."""
        basis = self.ctx.basis
        for (i, j), expansion in sorted(self.entries.items()):
            for (nu, d), c in sorted(expansion.items(), key=lambda t: (t[0][1], self.ctx.index[t[0][0]])):
                yield basis[i], basis[j], nu, d, c


def _pair_product(ctx: GrContext, mode: Mode, lam, mu):
    if mode == "quantum":
        return quantum_product(lam, mu, ctx)
    if mode == "classical":
        return {(nu, 0): c for nu, c in cup_product(lam, mu, ctx).items()}
    raise ParameterError(f"unknown mode {mode!r}")


def build_table(ctx: GrContext, mode: Mode = "quantum", threads: int = 1) -> ProductTable:
    """Compute every unordered product once; the result is independent of ``threads``."""
    basis = ctx.basis
    pairs = [(i, j) for i in range(len(basis)) for j in range(i, len(basis))]

    def work(pair):
        i, j = pair
        return _pair_product(ctx, mode, basis[i], basis[j])

    with lr_cache():
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(work, pairs))
        else:
            results = [work(p) for p in pairs]
    entries = {}
    for (i, j), expansion in zip(pairs, results):
        entries[(i, j)] = expansion
        entries[(j, i)] = expansion
    return ProductTable(ctx, mode, entries)


@dataclass(frozen=True)
class MultiplicationMatrix:
    """Matrix of beta -> [X_lam] * beta at q = 1; column c is the image of basis[c]."""

    ctx: GrContext
    lam: Partition
    matrix: np.ndarray


def _expansion_column(ctx: GrContext, expansion, col: np.ndarray) -> None:
    for (nu, _d), c in expansion.items():
        col[ctx.index[nu]] += c


def multiplication_matrix(lam, table: ProductTable) -> MultiplicationMatrix:
    ctx = table.ctx
    lam = ctx.check(lam)
    i = ctx.index[lam]
    m = np.zeros((ctx.rank, ctx.rank), dtype=np.int64)
    for c in range(ctx.rank):
        _expansion_column(ctx, table.entries[(i, c)], m[:, c])
    return MultiplicationMatrix(ctx, lam, m)


def operator_matrix(lam, ctx: GrContext, mode: Mode = "quantum") -> MultiplicationMatrix:
    """Like :func:`multiplication_matrix` but computes only the row of ``lam``."""
    lam = ctx.check(lam)
    m = np.zeros((ctx.rank, ctx.rank), dtype=np.int64)
    with lr_cache():
        for c, mu in enumerate(ctx.basis):
            _expansion_column(ctx, _pair_product(ctx, mode, lam, mu), m[:, c])
    return MultiplicationMatrix(ctx, lam, m)


# -- on-disk cache -----------------------------------------------------------

_HEADER = "# grassfp product table v{version} k={k} n={n} mode={mode}"


def write_table(table: ProductTable, path) -> None:
    path = Path(path)
    ctx = table.ctx
    lines = [_HEADER.format(version=TABLE_FORMAT_VERSION, k=ctx.k, n=ctx.n, mode=table.mode)]
    for lam, mu, nu, d, c in table.records():
        lines.append(f"{ctx.k} {ctx.n} {lam} {mu} {nu} {d} {c}")
    tmp = path.with_suffix(path.suffix + f".tmp{os.getpid()}")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)


def read_table(path) -> ProductTable:
    """Load a table file, checking its header and degree homogeneity."""
    path = Path(path)
    with path.open() as fh:
        header = fh.readline().strip()
        fields = dict(tok.split("=", 1) for tok in header.split() if "=" in tok)
        if not header.startswith("# grassfp product table v") or not {"k", "n", "mode"} <= fields.keys():
            raise TableFormatError(f"{path}: bad header {header!r}")
        version = int(header.split()[4][1:])
        if version != TABLE_FORMAT_VERSION:
            raise TableFormatError(f"{path}: unsupported format version {version}")
        k, n, mode = int(fields["k"]), int(fields["n"]), fields["mode"]
        ctx = gr_context(k, n)
        entries = {(i, j): {} for i in range(ctx.rank) for j in range(ctx.rank)}
        for lineno, line in enumerate(fh, start=2):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 7:
                raise TableFormatError(f"{path}:{lineno}: expected 7 fields")
            rk, rn = int(parts[0]), int(parts[1])
            lam, mu, nu = (ctx.check(Partition.parse(p)) for p in parts[2:5])
            d, c = int(parts[5]), int(parts[6])
            if (rk, rn) != (k, n):
                raise TableFormatError(f"{path}:{lineno}: record for Gr({rk},{rn}) in Gr({k},{n}) table")
            if lam.size + mu.size != nu.size + d * n or c <= 0 or d < 0:
                raise TableFormatError(f"{path}:{lineno}: degree homogeneity violated")
            if mode == "classical" and d:
                raise TableFormatError(f"{path}:{lineno}: q-term in classical table")
            entries[(ctx.index[lam], ctx.index[mu])][(nu, d)] = c
    return ProductTable(ctx, mode, entries)


def default_cache_dir() -> Path:
    env = os.environ.get("GRASSFP_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or Path.home() / ".local" / "share"
    return Path(base) / "grassfp"


def cached_table(ctx: GrContext, mode: Mode = "quantum", *, cache_dir=None,
                 use_cache: bool = True, threads: int = 1) -> ProductTable:
    """Load the table from the cache directory, building and storing it on a miss."""
    if not use_cache:
        return build_table(ctx, mode, threads)
    root = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    path = root / f"gr_{ctx.k}_{ctx.n}_{mode}.txt"
    if path.exists():
        return read_table(path)
    table = build_table(ctx, mode, threads)
    root.mkdir(parents=True, exist_ok=True)
    write_table(table, path)
    return table

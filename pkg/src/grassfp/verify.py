"""Named invariant suites run by ``grassfp verify``.

Each suite returns a list of human-readable violations; empty means pass.
Ranges are chosen to finish in seconds; the pytest acceptance module runs the
full desk-scale ranges.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .closed_form import (
    RhoFunction,
    galkin_check,
    k2_simplified,
    lemma_a1_check,
    lower_bound,
    monotonicity_concavity_scan,
    rho_closed_form,
    transpose_duality_check,
)
from .filtration import FilteredFamily, check_zbullet_axioms, fpd_bullet
from .littlewood_richardson import cup_product, lr_coefficient
from .partitions import complement, enumerate_basis, gr_context, hook_data, hook_dimension
from .quantum import build_table, quantum_pieri
from .spectral import check_ring_homomorphism, fpdim_basis, perron_root, ring_from_table

SMALL = [(k, n) for n in range(2, 8) for k in range(1, min(n, 4))]


def suite_partitions() -> list[str]:
    out = []
    for k, n in SMALL:
        ctx = gr_context(k, n)
        if ctx.rank != math.comb(n, k):
            out.append(f"Gr({k},{n}): basis size {ctx.rank}")
        for lam in ctx.basis:
            if complement(complement(lam, ctx), ctx) != lam:
                out.append(f"complement not involutive on {lam}")
            if lam.transpose().transpose() != lam:
                out.append(f"transpose not involutive on {lam}")
            hd = hook_data(lam, k)
            if any(a < b for a, b in zip(hd.a_seq, hd.b_seq)):
                out.append(f"a_r < b_r for {lam}, k={k}")
            if (hd.a_seq == hd.b_seq) != lam.is_rectangular(k):
                out.append(f"rectangularity criterion fails for {lam}, k={k}")
            hook_dimension(lam, k)
    return out


def suite_lr() -> list[str]:
    out = []
    if lr_coefficient((2, 1), (2, 1), (3, 2, 1)) != 2:
        out.append("c^{321}_{21,21} != 2")
    for k, n in [(2, 4), (2, 5), (3, 6)]:
        ctx = gr_context(k, n)
        for lam in ctx.basis:
            for mu in ctx.basis:
                if cup_product(lam, mu, ctx) != cup_product(mu, lam, ctx):
                    out.append(f"cup product not commutative: {lam}, {mu}")
    return out


def suite_quantum() -> list[str]:
    out = []
    for k, n in SMALL + [(3, 6)]:
        ctx = gr_context(k, n)
        table = build_table(ctx)
        for lam in ctx.basis:
            if quantum_pieri(lam, ctx) != table.product((1,), lam):
                out.append(f"Gr({k},{n}): Pieri oracle disagrees on {lam}")
            for mu in ctx.basis:
                exp = table.product(lam, mu)
                if exp != table.product(mu, lam):
                    out.append(f"Gr({k},{n}): {lam}*{mu} not commutative")
                for (nu, d), c in exp.items():
                    if c <= 0 or lam.size + mu.size != nu.size + d * n:
                        out.append(f"Gr({k},{n}): bad term {(nu, d, c)} in {lam}*{mu}")
    return out


def suite_spectral() -> list[str]:
    out = []
    for k, n in SMALL:
        ctx = gr_context(k, n)
        table = build_table(ctx)
        ring = ring_from_table(table)
        report = fpdim_basis(ring)
        for lam, value in zip(ctx.basis, report.radii):
            closed = rho_closed_form(RhoFunction.of(lam, k), n)
            if abs(value - closed) > 1e-8:
                out.append(f"Gr({k},{n}) {lam}: power iteration {value} vs closed form {closed}")
        for i, j, lhs, rhs in check_ring_homomorphism(ring, report, 1e-6):
            out.append(f"Gr({k},{n}): FPdim not multiplicative on {ctx.basis[i]}*{ctx.basis[j]}")
        classical = fpdim_basis(ring_from_table(build_table(ctx, "classical")))
        if list(classical.radii) != [1.0] + [0.0] * (ctx.rank - 1):
            out.append(f"Gr({k},{n}): classical FPdim is not the indicator of 0")
    if abs(perron_root(np.array([[0, 1], [1, 0]])).radius - 1.0) > 1e-8:
        out.append("rho([[0,1],[1,0]]) != 1")
    return out


def suite_closed_form() -> list[str]:
    out = []
    for k, n in [(k, n) for n in range(2, 11) for k in range(1, min(n, 5))]:
        for lam in enumerate_basis(k, n):
            rf = RhoFunction.of(lam, k)
            value = rho_closed_form(rf, n)
            if lower_bound(rf, n) > value + 1e-12:
                out.append(f"lower bound exceeds rho for {lam}, k={k}, n={n}")
            if not transpose_duality_check(lam, k, n):
                out.append(f"transpose duality fails for {lam}, k={k}, n={n}")
            if not rf.rectangular and value >= rf.dimension:
                out.append(f"rho >= dim for non-rectangular {lam}, k={k}, n={n}")
    for n in range(3, 31):
        for lam in enumerate_basis(2, n):
            if abs(k2_simplified(lam, n) - rho_closed_form(RhoFunction.of(lam, 2), n)) > 1e-12:
                out.append(f"k=2 shortcut disagrees for {lam}, n={n}")
    rf = RhoFunction.of((2, 1), 3)
    scan = monotonicity_concavity_scan(rf, np.geomspace(rf.x_min + 0.5, 1e4, 200))
    if not scan.increasing or scan.concavity_threshold is None:
        out.append("rho_{3,(2,1)} scan failed")
    if not lemma_a1_check(5.0, 1.0, np.linspace(2, 100, 99)).all_positive:
        out.append("sin(5/x)/sin(1/x) slope check failed")
    return out


def suite_galkin() -> list[str]:
    out = []
    for n in range(2, 31):
        for k in range(1, n):
            rep = galkin_check(k, n)
            if not rep.consistent:
                out.append(f"Galkin bound pattern broken at k={k}, n={n}: {rep.lhs} vs {rep.rhs}")
    return out


def suite_filtration() -> list[str]:
    out = []
    for k in (1, 2):
        rep = check_zbullet_axioms(FilteredFamily(k), range(0, 4))
        out.extend(rep.failures)
    rep = fpd_bullet(FilteredFamily(2), (2, 1), range(2, 199))
    if not (rep.strictly_increasing and abs(rep.extrapolated - 2) <= 1e-6):
        out.append("verlinde FPd of (2,1) does not approach 2")
    for k in (1, 2, 3):
        fam = FilteredFamily(k, "classical")
        for lam in enumerate_basis(k, k + 3):
            first = lam[0] if lam else 0
            rep = fpd_bullet(fam, lam, range(max(first, 1), 4))
            if any(v != (1.0 if not lam else 0.0) for v in rep.values):
                out.append(f"classical FPdim of {lam} (k={k}) is not exact")
    return out


SUITES: dict[str, Callable[[], list[str]]] = {
    "partitions": suite_partitions,
    "lr": suite_lr,
    "quantum": suite_quantum,
    "spectral": suite_spectral,
    "closed-form": suite_closed_form,
    "galkin": suite_galkin,
    "filtration": suite_filtration,
}


def run(name: str) -> dict[str, list[str]]:
    if name == "all":
        return {key: fn() for key, fn in SUITES.items()}
    return {name: SUITES[name]()}

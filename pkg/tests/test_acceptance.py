"""Acceptance suite: one test group per criterion, run at the stated tolerances.

``conftest.py`` prints one PASS/FAIL line per criterion at the end of the run.
"""
import itertools
import math
import random
import time

import numpy as np
import pytest

from grassfp import enumerate_basis, gr_context, hook_dimension, transpose
from grassfp.closed_form import (
    RhoFunction,
    galkin_check,
    lemma_a1_check,
    limit_check,
    lower_bound,
    monotonicity_concavity_scan,
    rho,
    rho_closed_form,
    transpose_duality_check,
)
from grassfp.filtration import FilteredFamily, fpd_bullet
from grassfp.quantum import build_table, multiplication_matrix
from grassfp.spectral import check_ring_homomorphism, fpdim_basis, perron_root, ring_from_table
from oracles import lr_bruteforce

DESK = [(k, n) for n in range(2, 9) for k in range(1, min(n, 4))]


def criterion(number):
    return pytest.mark.criterion(number)


@criterion(1)
def test_golden_values():
    start = time.perf_counter()
    assert abs(rho((1, 0), 2, 3) - 1.0) <= 1e-12
    assert abs(rho((1, 0), 2, 4) - math.sqrt(2)) <= 1e-12
    for n, expected in [(3, 1.0), (4, math.sqrt(2))]:
        mat = multiplication_matrix((1,), build_table(gr_context(2, n))).matrix
        assert abs(perron_root(mat).radius - expected) <= 1e-8
    assert time.perf_counter() - start < 1.0


@criterion(2)
def test_closed_form_matches_power_iteration():
    start = time.perf_counter()
    worst = 0.0
    for k, n in DESK:
        ctx = gr_context(k, n)
        report = fpdim_basis(ring_from_table(build_table(ctx)))
        for lam, value in zip(ctx.basis, report.radii):
            worst = max(worst, abs(value - rho_closed_form(RhoFunction.of(lam, k), n)))
    print(f"max |power iteration - closed form| = {worst:.3e}")
    assert worst <= 1e-8
    assert time.perf_counter() - start < 60.0


class TestStructureConstants:
    pytestmark = criterion(3)

    @pytest.mark.parametrize("k, n", DESK)
    def test_sign_degree_commutativity_and_classical_layer(self, k, n):
        ctx = gr_context(k, n)
        table = build_table(ctx)
        by_size = {}
        for nu in ctx.basis:
            by_size.setdefault(nu.size, []).append(nu)
        for lam, mu in itertools.product(ctx.basis, repeat=2):
            exp = table.product(lam, mu)
            assert exp == table.product(mu, lam)
            for (nu, d), c in exp.items():
                assert isinstance(c, int) and c > 0
                assert lam.size + mu.size == nu.size + d * n
            d0 = {nu: c for (nu, d), c in exp.items() if d == 0}
            brute = {nu: lr_bruteforce(lam, mu, nu) for nu in by_size.get(lam.size + mu.size, [])}
            assert d0 == {nu: c for nu, c in brute.items() if c}

    @pytest.mark.parametrize("k, n", [(2, 4), (2, 5), (3, 6)])
    def test_associativity(self, k, n):
        ctx = gr_context(k, n)
        table = build_table(ctx)

        def times(expansion, other):
            out = {}
            for (nu, d), c in expansion.items():
                for (rho_, e), c2 in table.product(nu, other).items():
                    out[(rho_, d + e)] = out.get((rho_, d + e), 0) + c * c2
            return {key: c for key, c in out.items() if c}

        for a, b, c in itertools.product(ctx.basis, repeat=3):
            left = times(table.product(a, b), c)
            right = times(table.product(b, c), a)
            assert left == right


@criterion(4)
@pytest.mark.parametrize("k, n", [(2, 4), (2, 5), (3, 6)])
def test_homomorphism(k, n):
    ring = ring_from_table(build_table(gr_context(k, n)))
    assert check_ring_homomorphism(ring, fpdim_basis(ring), 1e-6) == []


@criterion(5)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_classical_truncation_trivial(k):
    fam = FilteredFamily(k, "classical")
    for r in range(1, 6):
        report = fpdim_basis(ring_from_table(build_table(gr_context(k, k + r), "classical")))
        assert report.radii[0] == 1.0
        assert all(v == 0.0 for v in report.radii[1:])
        assert set(report.methods[1:]) <= {"exact-zero-by-nilpotency"}
    for lam in enumerate_basis(k, k + 5):
        first = lam[0] if lam else 0
        rep = fpd_bullet(fam, lam, range(max(first, 1), 6))
        assert all(v == (1.0 if not lam else 0.0) for v in rep.values)


class TestConvergence:
    pytestmark = criterion(6)

    def test_k2_verlinde_sequence(self):
        rep = fpd_bullet(FilteredFamily(2), (2, 1), range(2, 199))
        assert [2 + lv.r for lv in rep.levels] == list(range(4, 201))
        assert rep.target == hook_dimension((2, 1), 2) == 2
        assert rep.strictly_increasing
        assert abs(rep.raw_limit - 2) <= 1e-3
        assert abs(rep.extrapolated - 2) <= 1e-6
        print(f"n=200: {rep.raw_limit!r}, extrapolated {rep.extrapolated!r}, "
              f"spectral vs closed form {rep.max_closed_form_gap:.2e}")

    @pytest.mark.parametrize("lam, k", [((2, 1, 0), 3), ((6, 4, 2, 1), 4)])
    def test_closed_form_large_n(self, lam, k):
        rf = RhoFunction.of(lam, k)
        schedule = np.unique(np.geomspace(rf.x_min + 1, 1e4, 60).round())
        rep = limit_check(rf, schedule)
        assert rep.xs[-1] == 1e4
        assert abs(rep.final_gap) / rep.target < 1e-2
        print(f"k={k} lam={lam}: dim {rep.target}, rho(1e4) = {rep.values[-1]!r}")


@criterion(7)
def test_lower_bound():
    for n in range(2, 13):
        for k in range(1, min(n, 5)):
            for lam in enumerate_basis(k, n):
                rf = RhoFunction.of(lam, k)
                assert lower_bound(rf, n) <= rho_closed_form(rf, n) + 1e-12


class TestShape:
    pytestmark = criterion(8)

    @staticmethod
    def sample_shapes(count, seed=20240611):
        rng = random.Random(seed)
        out = []
        while len(out) < count:
            k = rng.randint(1, 4)
            lam = tuple(sorted((rng.randint(0, 7) for _ in range(k)), reverse=True))
            rf = RhoFunction.of(lam, k)
            if not rf.rectangular and (k, rf.lam) not in [(s.k, s.lam) for s in out]:
                out.append(rf)
        return out

    def test_increasing_and_eventually_concave(self):
        for rf in self.sample_shapes(20):
            grid = np.geomspace(rf.x_min * (1 + 1e-6) + 1e-6, 1e4, 400)
            rep = monotonicity_concavity_scan(rf, grid)
            assert rep.increasing, (rf.k, rf.lam)
            assert rep.concavity_threshold is not None, (rf.k, rf.lam)
            print(f"k={rf.k} lam={rf.lam}: concave from x ~ {rep.concavity_threshold:.4g}")

    def test_slope_lemma(self):
        rng = random.Random(7)
        for _ in range(50):
            b = rng.uniform(0.05, 20)
            a = b * rng.uniform(1.01, 10)
            lo = a / math.pi
            rep = lemma_a1_check(a, b, np.geomspace(lo * (1 + 1e-3), max(1e4, 10 * lo), 200))
            assert rep.all_positive, (a, b)


class TestDuality:
    pytestmark = criterion(9)

    def test_closed_form(self):
        for n in range(2, 11):
            for k in range(1, min(n, 5)):
                for lam in enumerate_basis(k, n):
                    assert transpose_duality_check(lam, k, n, 1e-12)

    def test_tables(self):
        t25, t35 = build_table(gr_context(2, 5)), build_table(gr_context(3, 5))
        for lam, mu in itertools.product(t25.ctx.basis, repeat=2):
            image = {(transpose(nu), d): c for (nu, d), c in t25.product(lam, mu).items()}
            assert image == t35.product(transpose(lam), transpose(mu))


@criterion(10)
def test_galkin():
    for n in range(2, 31):
        for k in range(1, n):
            rep = galkin_check(k, n, 1e-9)
            assert rep.holds, (k, n)
            assert rep.equality == (k in (1, n - 1)), (k, n)


@criterion(11)
def test_rectangular_iff_constant():
    rng = random.Random(11)
    for lam in enumerate_basis(3, 7):
        rf = RhoFunction.of(lam, 3)
        xs = [rf.x_min + rng.uniform(1e-3, 100) for _ in range(25)] + [7.0]
        constant = all(rf(x) == 1.0 for x in xs)
        assert constant == rf.rectangular, lam


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

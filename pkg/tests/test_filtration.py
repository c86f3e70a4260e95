import pytest

from grassfp import ParameterError, gr_context
from grassfp.closed_form import rho
from grassfp.filtration import (
    FilteredFamily,
    build_level,
    check_zbullet_axioms,
    fpd_bullet,
    fusion_coefficient,
    level_fpdim,
)
from grassfp.quantum import build_table
from grassfp.spectral import ZPlusRingTable, is_nilpotent_pattern, ring_from_table


class TestLevels:
    def test_verlinde_level_is_quantum_table(self):
        ring = build_level(FilteredFamily(2), 2)
        expected = ring_from_table(build_table(gr_context(2, 4)))
        assert ring.labels == expected.labels and ring.constants == expected.constants

    def test_level_zero(self):
        ring = build_level(FilteredFamily(3), 0)
        assert ring.rank == 1 and ring.product(0, 0) == {0: 1}

    @pytest.mark.parametrize("mode", ["verlinde", "classical"])
    def test_identity_row(self, mode):
        ring = build_level(FilteredFamily(2, mode), 3)
        e = ring.identity_index
        for j in range(ring.rank):
            assert ring.product(e, j) == {j: 1}

    def test_classical_operators_nilpotent(self):
        ring = build_level(FilteredFamily(2, "classical"), 3)
        for i in range(ring.rank):
            if i != ring.identity_index:
                assert is_nilpotent_pattern(ring.left_matrix(i))

    def test_lru_cap(self):
        fam = FilteredFamily(1, max_levels=2)
        for r in range(5):
            build_level(fam, r)
        assert list(fam._levels) == [3, 4]

    def test_bad_arguments(self):
        with pytest.raises(ParameterError):
            FilteredFamily(0)
        with pytest.raises(ParameterError):
            FilteredFamily(2, "tensor")
        with pytest.raises(ParameterError):
            build_level(FilteredFamily(2), -1)


class TestFusion:
    def test_example(self):
        assert fusion_coefficient(FilteredFamily(2), (2, 2), (1,), (1,), 2) == 1

    def test_degree_mismatch(self):
        fam = FilteredFamily(2)
        # |nu| must be |lam| + |mu| mod k + r
        assert fusion_coefficient(fam, (1,), (1,), (1,), 3) == 0
        assert fusion_coefficient(fam, (2, 1), (1,), (2,), 3) == 0

    def test_identity(self):
        fam = FilteredFamily(3)
        labels = fam.labels(2)
        for mu in labels:
            for nu in labels:
                assert fusion_coefficient(fam, (), mu, nu, 2) == (mu == nu)

    def test_label_outside_level(self):
        with pytest.raises(ParameterError):
            fusion_coefficient(FilteredFamily(2), (3,), (1,), (1,), 2)

    def test_classical_family_rejected(self):
        with pytest.raises(ParameterError):
            fusion_coefficient(FilteredFamily(2, "classical"), (1,), (1,), (2,), 2)


class TestFPdBullet:
    def test_classical_box(self):
        rep = fpd_bullet(FilteredFamily(2, "classical"), (1,), range(1, 8))
        assert rep.values == (0.0,) * 7 and rep.target == 0 and rep.converged

    def test_verlinde_box(self):
        rep = fpd_bullet(FilteredFamily(2), (1,), range(1, 199))
        assert rep.target == 2 and rep.strictly_increasing
        assert abs(rep.raw_limit - 2) <= 1e-3 and rep.converged

    def test_verlinde_identity(self):
        rep = fpd_bullet(FilteredFamily(3), (), range(0, 6))
        assert set(rep.values) == {1.0} and rep.target == 1

    def test_levels_match_closed_form(self):
        fam = FilteredFamily(3)
        for r in range(2, 6):
            for lam in fam.labels(r):
                v = level_fpdim(fam, lam, r)
                assert abs(v.value - rho(lam, 3, 3 + r)) <= 1e-8

    def test_closed_form_above_cap(self):
        fam = FilteredFamily(2, spectral_rank_cap=10)
        v = level_fpdim(fam, (2, 1), 10)
        assert v.method == "closed-form" and v.value == rho((2, 1), 2, 12)

    def test_classical_above_cap(self):
        v = level_fpdim(FilteredFamily(2, "classical", spectral_rank_cap=10), (1,), 10)
        assert v.value == 0.0 and v.method == "exact-zero-by-grading"

    def test_bounded_by_dimension(self):
        rep = fpd_bullet(FilteredFamily(3), (2, 1), range(2, 30))
        assert rep.strictly_increasing and max(rep.values) < 8

    def test_schedule_below_entry_level(self):
        with pytest.raises(ParameterError):
            fpd_bullet(FilteredFamily(2), (3, 1), range(2, 6))

    def test_schedule_not_increasing(self):
        with pytest.raises(ParameterError):
            fpd_bullet(FilteredFamily(2), (1,), [3, 2])


class TestAxioms:
    def test_k2(self):
        rep = check_zbullet_axioms(FilteredFamily(2), range(0, 4))
        assert rep.ok, rep.failures

    @pytest.mark.parametrize("mode", ["verlinde", "classical"])
    def test_projective_spaces(self, mode):
        rep = check_zbullet_axioms(FilteredFamily(1, mode), range(0, 6))
        assert rep.ok, rep.failures

    def test_corrupted_level(self):
        fam = FilteredFamily(2)
        ring = build_level(fam, 2)
        constants = {key: dict(vec) for key, vec in ring.constants.items()}
        i = ring.index((1,))
        constants[(i, i)][ring.index((2,))] += 1
        fam.inject_level(2, ZPlusRingTable(ring.labels, constants, ring.identity_index))
        rep = check_zbullet_axioms(fam, range(0, 4))
        assert not rep.ok and any("level 2" in f for f in rep.failures)

    def test_wrong_rank_detected(self):
        fam = FilteredFamily(2)
        fam.inject_level(1, build_level(fam, 2))
        rep = check_zbullet_axioms(fam, range(0, 4))
        assert any("rank" in f for f in rep.failures)

    def test_needs_three_levels(self):
        with pytest.raises(ParameterError):
            check_zbullet_axioms(FilteredFamily(2), [0, 1])

import pytest
from hypothesis import given, settings, strategies as st

from grassfp import kernels
from grassfp.littlewood_richardson import _candidate_shapes
from grassfp.partitions import Partition

shapes = st.lists(st.integers(0, 5), max_size=4).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled extension not built")
@settings(max_examples=300, deadline=None)
@given(shapes, shapes)
def test_compiled_matches_python(lam, mu):
    for nu in _candidate_shapes(lam, mu, 6):
        inner = lam.padded(len(nu))
        args = (tuple(nu), inner, tuple(mu))
        assert kernels.lr_count(*args) == kernels.lr_count_python(*args)


def test_empty_skew():
    assert kernels.lr_count_python((2, 1), (2, 1), ()) == 1
    assert kernels.lr_count((2, 1), (2, 1), ()) == 1

"""Quantum cohomology of Grassmannians and Frobenius-Perron dimensions.

Submodules:

* :mod:`~grassfp.partitions` -- partitions, the Schubert basis of Gr(k, n), hooks
* :mod:`~grassfp.littlewood_richardson` -- LR coefficients, truncated cup product
* :mod:`~grassfp.quantum` -- quantum structure constants, tables, operators
* :mod:`~grassfp.spectral` -- Z_+-rings, Perron roots, FPdim
* :mod:`~grassfp.closed_form` -- the sine-product formula and its analysis
* :mod:`~grassfp.filtration` -- classical and Verlinde filtrations, FPd limits
* :mod:`~grassfp.cli` -- the ``grassfp`` command
"""
from .errors import (
    CoefficientOverflowError,
    DomainError,
    GrassfpError,
    InvariantViolation,
    ParameterError,
    SpectralConvergenceError,
    TableFormatError,
)
from .kernels import BACKEND
from .partitions import (
    GrContext,
    HookData,
    Partition,
    complement,
    enumerate_basis,
    gr_context,
    hook_data,
    hook_dimension,
    transpose,
)

__version__ = "0.1.0"

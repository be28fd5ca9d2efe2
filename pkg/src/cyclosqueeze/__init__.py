"""Cyclic n-mode squeezing operator toolkit.

Numerics for the unitary exp[i*lam*(Q1*P2 + Q2*P3 + ... + Qn*P1)]: its
Heisenberg transform matrices, normal-ordered form, squeezed vacuum,
quadrature variances and Wigner function, cross-validated against closed
forms for n = 2, 3, 4 and against a truncated Fock-space brute-force
oracle.  An HTTP service and a CLI expose the same computations.
"""

from .circulant import (
    EXPONENT_LIMIT,
    CirculantSpectrum,
    QuarticShiftExpansion,
    cayley_hamilton_n4,
    cyclic_shift,
    series_expm,
    shift_exponential,
    symmetric_gram,
)
from .squeeze import (
    HeisenbergTransform,
    NormalOrderedForm,
    QuadratureVariances,
    SqueezeParams,
    entry_sum_power_identity,
    gram_entry_sum,
    heisenberg_transform,
    normal_ordered_form,
    quadrature_variances,
    squeezed_vacuum,
)
from .wigner import (
    GridSlice,
    PhasePoint,
    WignerGaussian,
    closed_form_n2,
    closed_form_n3,
    closed_form_n4,
    normalization,
    slice_grid,
    wigner_state,
)
from .checks import CheckResult, default_cutoff, run_checks

__version__ = "0.1.0"

__all__ = [
    "EXPONENT_LIMIT",
    "CirculantSpectrum",
    "QuarticShiftExpansion",
    "cayley_hamilton_n4",
    "cyclic_shift",
    "series_expm",
    "shift_exponential",
    "symmetric_gram",
    "HeisenbergTransform",
    "NormalOrderedForm",
    "QuadratureVariances",
    "SqueezeParams",
    "entry_sum_power_identity",
    "gram_entry_sum",
    "heisenberg_transform",
    "normal_ordered_form",
    "quadrature_variances",
    "squeezed_vacuum",
    "GridSlice",
    "PhasePoint",
    "WignerGaussian",
    "closed_form_n2",
    "closed_form_n3",
    "closed_form_n4",
    "normalization",
    "slice_grid",
    "wigner_state",
    "CheckResult",
    "default_cutoff",
    "run_checks",
]

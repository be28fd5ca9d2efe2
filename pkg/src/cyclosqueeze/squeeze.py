"""Heisenberg transforms, normal-ordered form and quadrature variances of
the cyclic n-mode squeezer exp[i*lam*(Q1*P2 + Q2*P3 + ... + Qn*P1)].

The squeezer acts on the position vector by exp(-lam*A^T) and on the
momentum vector by exp(lam*A), with A the n-cycle shift.  From those two
matrices everything else follows: the normal-ordered coefficient matrices,
the squeezed vacuum, and the collective quadrature variances
exp(-2*lam)/4 and exp(2*lam)/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .circulant import (
    EXPONENT_LIMIT,
    _check_mode_count,
    cyclic_shift,
    shift_exponential,
    symmetric_gram,
)

__all__ = [
    "SqueezeParams",
    "HeisenbergTransform",
    "NormalOrderedForm",
    "QuadratureVariances",
    "heisenberg_transform",
    "normal_ordered_form",
    "squeezed_vacuum",
    "quadrature_variances",
    "entry_sum_power_identity",
    "gram_entry_sum",
]

# exact-integer guard for the power-sum identity
MAX_POWER = 12


@dataclass(frozen=True)
class SqueezeParams:
    """Mode count and squeezing strength: the sole input of every analytic
    computation in this package."""

    n: int
    lam: float

    def __post_init__(self) -> None:
        _check_mode_count(self.n)
        if not math.isfinite(self.lam):
            raise ValueError("squeezing parameter must be finite")
        if 2.0 * abs(self.lam) > EXPONENT_LIMIT:
            raise ValueError(
                f"squeezing parameter {self.lam:g} exceeds the overflow guard "
                f"|lam| <= {EXPONENT_LIMIT / 2:g}"
            )


@dataclass(frozen=True)
class HeisenbergTransform:
    """Matrices through which the squeezer conjugates the canonical operators:
    positions pick up ``position`` (= exp(-lam*A^T)), momenta pick up
    ``momentum`` (= exp(lam*A)).  position^T @ momentum = I, so the canonical
    commutators are preserved."""

    position: np.ndarray
    momentum: np.ndarray


@dataclass(frozen=True)
class NormalOrderedForm:
    """Coefficients of the squeezer written with all creators to the left.

    The operator equals

        prefactor * exp[(1/2) a+.creation.a+] : exp[a+.cross.a] :
                  * exp[(1/2) a.annihilation.a]

    with ``denominator`` = (I + gram)/2 the matrix whose inverse generates
    all three coefficient blocks and whose determinant fixes the prefactor.
    """

    prefactor: float
    creation: np.ndarray
    cross: np.ndarray
    annihilation: np.ndarray
    denominator: np.ndarray
    denominator_det: float


@dataclass(frozen=True)
class QuadratureVariances:
    """Variances of the collective quadratures X1 = sum(Q_i)/sqrt(2n) and
    X2 = sum(P_i)/sqrt(2n); their product sits at the minimum-uncertainty
    value 1/16."""

    var_x1: float
    var_x2: float

    @property
    def product(self) -> float:
        return self.var_x1 * self.var_x2


def heisenberg_transform(params: SqueezeParams) -> HeisenbergTransform:
    return HeisenbergTransform(
        position=shift_exponential(params.n, -params.lam, transposed=True),
        momentum=shift_exponential(params.n, params.lam),
    )


def _log_denominator_det(params: SqueezeParams) -> float:
    """log det of (I + gram)/2 from the spectrum: sum of
    log((1 + exp(-2*lam*cos(theta_k)))/2), overflow-safe."""
    theta = 2.0 * math.pi * np.arange(params.n) / params.n
    exponents = -2.0 * params.lam * np.cos(theta)
    return math.fsum(np.logaddexp(0.0, exponents) - math.log(2.0))


def normal_ordered_form(params: SqueezeParams) -> NormalOrderedForm:
    n = params.n
    eye = np.eye(n)
    gram = symmetric_gram(n, params.lam)
    denominator = 0.5 * (eye + gram)
    # (I + gram)/2 inherits positive definiteness from gram, so invert by a
    # Cholesky solve; a generic inverse would waste the structure
    cho = scipy.linalg.cho_factor(denominator, lower=True)
    den_inv = scipy.linalg.cho_solve(cho, eye)
    position = shift_exponential(n, -params.lam, transposed=True)

    log_det = _log_denominator_det(params)
    return NormalOrderedForm(
        prefactor=math.exp(-0.5 * log_det),
        creation=position @ den_inv @ position.T - eye,
        cross=position @ den_inv - eye,
        annihilation=den_inv - eye,
        denominator=denominator,
        denominator_det=math.exp(log_det),
    )


def squeezed_vacuum(params: SqueezeParams) -> tuple[float, np.ndarray]:
    """The squeezer applied to the vacuum: the state
    prefactor * exp[(1/2) a+.pair.a+] |0>, returned as (prefactor, pair)."""
    form = normal_ordered_form(params)
    return form.prefactor, form.creation


def quadrature_variances(params: SqueezeParams) -> QuadratureVariances:
    """Variances from the entry sums of the gram matrix and of its inverse.

    The closed forms exp(-2*lam)/4 and exp(2*lam)/4 are deliberately not
    used here, so they remain an independent check on this route.
    """
    scale = 1.0 / (4.0 * params.n)
    gram = symmetric_gram(params.n, params.lam)
    gram_inv = symmetric_gram(params.n, -params.lam)
    return QuadratureVariances(
        var_x1=scale * math.fsum(gram.flat),
        var_x2=scale * math.fsum(gram_inv.flat),
    )


def entry_sum_power_identity(n: int, power: int) -> tuple[int, int]:
    """Entry sum of (A + A^T)**power versus 2**power * n, both exact integers.

    Every row of A + A^T sums to 2, which forces the identity; it is returned
    as (lhs, rhs) so callers can assert equality rather than trust it.
    """
    n = _check_mode_count(n)
    if isinstance(power, bool) or not isinstance(power, (int, np.integer)):
        raise ValueError(f"power must be an integer, got {power!r}")
    if power < 0 or power > MAX_POWER:
        raise ValueError(
            f"power must lie in 0..{MAX_POWER} for exact integer arithmetic, "
            f"got {power}"
        )
    base = cyclic_shift(n).astype(np.int64)
    base = base + base.T
    acc = np.eye(n, dtype=np.int64)
    for _ in range(int(power)):
        acc = acc @ base
    return int(acc.sum()), (2**int(power)) * n


def gram_entry_sum(params: SqueezeParams) -> tuple[float, float]:
    """Entry sums of the gram matrix and of its inverse; analytically
    n*exp(-2*lam) and n*exp(2*lam)."""
    gram = symmetric_gram(params.n, params.lam)
    gram_inv = symmetric_gram(params.n, -params.lam)
    return math.fsum(gram.flat), math.fsum(gram_inv.flat)

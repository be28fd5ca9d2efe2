"""Wigner function of the cyclic squeezed vacuum.

The state is Gaussian, so its Wigner function is
pi**(-n) * exp(-q.Gq.q - p.Gp.p) with Gq and Gp a pair of mutually inverse
symmetric positive-definite circulants.  This module evaluates it, carries
hand-transcribed closed forms for n = 2, 3, 4 as independent comparators,
verifies normalization by Gauss-Hermite quadrature, and produces plot-ready
2-D grid slices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np
import scipy.linalg

from .squeeze import SqueezeParams
from .circulant import symmetric_gram

__all__ = [
    "PhasePoint",
    "WignerGaussian",
    "GridSlice",
    "wigner_state",
    "closed_form_n2",
    "closed_form_n3",
    "closed_form_n4",
    "normalization",
    "slice_grid",
    "axis_labels",
]

# successive quadrature orders must agree this closely or the order is
# flagged as too small
_QUAD_AGREEMENT = 1e-6


@dataclass(frozen=True)
class PhasePoint:
    """A point (q, p) of 2n-dimensional phase space."""

    positions: np.ndarray
    momenta: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", np.atleast_1d(np.asarray(self.positions, float)))
        object.__setattr__(self, "momenta", np.atleast_1d(np.asarray(self.momenta, float)))
        if self.positions.shape != self.momenta.shape or self.positions.ndim != 1:
            raise ValueError(
                f"positions and momenta must be 1-D of equal length, got "
                f"{self.positions.shape} and {self.momenta.shape}"
            )

    @property
    def n(self) -> int:
        return self.positions.size

    @property
    def alphas(self) -> np.ndarray:
        """Complex mode amplitudes (q_i + i*p_i)/sqrt(2)."""
        return (self.positions + 1j * self.momenta) / math.sqrt(2.0)

    @classmethod
    def from_alphas(cls, alphas: np.ndarray) -> "PhasePoint":
        alphas = np.atleast_1d(np.asarray(alphas, complex))
        return cls(math.sqrt(2.0) * alphas.real, math.sqrt(2.0) * alphas.imag)


@dataclass(frozen=True)
class WignerGaussian:
    """Gaussian Wigner density with separate position/momentum precisions.

    The two precisions are inverse to each other and each has determinant 1,
    so the peak value at the origin is exactly ``norm_const`` = pi**(-n).
    """

    n: int
    position_precision: np.ndarray
    momentum_precision: np.ndarray
    norm_const: float

    def value(self, point: PhasePoint) -> float:
        if point.n != self.n:
            raise ValueError(f"phase point has {point.n} modes, state has {self.n}")
        exponent = _quad_form(self.position_precision, point.positions) + _quad_form(
            self.momentum_precision, point.momenta
        )
        return self.norm_const * math.exp(-exponent)

    def value_batch(self, positions: np.ndarray, momenta: np.ndarray) -> np.ndarray:
        """Vectorized evaluation over rows of (..., n) coordinate arrays."""
        exponent = _quad_form(self.position_precision, positions) + _quad_form(
            self.momentum_precision, momenta
        )
        return self.norm_const * np.exp(-exponent)


def _quad_form(matrix: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    return np.einsum("...i,ij,...j", vectors, matrix, vectors)


def wigner_state(params: SqueezeParams) -> WignerGaussian:
    return WignerGaussian(
        n=params.n,
        position_precision=symmetric_gram(params.n, -params.lam),
        momentum_precision=symmetric_gram(params.n, params.lam),
        norm_const=math.pi ** (-params.n),
    )


def _require_modes(point: PhasePoint, n: int) -> None:
    if point.n != n:
        raise ValueError(f"closed form needs {n} modes, point has {point.n}")


def closed_form_n2(point: PhasePoint, lam: float) -> float:
    """Two-mode closed form in the complex amplitudes: the familiar two-mode
    squeezed vacuum Wigner function."""
    _require_modes(point, 2)
    a1, a2 = point.alphas
    exponent = -2.0 * (2.0 * (a1 * a2).real) * math.sinh(2.0 * lam) - 2.0 * (
        abs(a1) ** 2 + abs(a2) ** 2
    ) * math.cosh(2.0 * lam)
    return math.pi ** (-2) * math.exp(exponent)


def closed_form_n3(point: PhasePoint, lam: float) -> float:
    """Three-mode closed form; the non-real group is completed with its
    complex conjugate as a whole."""
    _require_modes(point, 3)
    alphas = point.alphas
    abs_sq = float(np.sum(np.abs(alphas) ** 2))
    sq_sum = complex(np.sum(alphas**2))
    upper = [(i, j) for i in range(3) for j in range(i + 1, 3)]
    cross_conj = sum(alphas[i] * np.conj(alphas[j]) for i, j in upper)
    cross_plain = sum(alphas[i] * alphas[j] for i, j in upper)

    real_part = -(2.0 / 3.0) * (math.cosh(2.0 * lam) + 2.0 * math.cosh(lam)) * abs_sq
    braced = (
        -(1.0 / 3.0) * (math.sinh(2.0 * lam) - 2.0 * math.sinh(lam)) * sq_sum
        - (2.0 / 3.0)
        * (
            (math.cosh(2.0 * lam) - math.cosh(lam)) * cross_conj
            + (math.sinh(lam) + math.sinh(2.0 * lam)) * cross_plain
        )
    )
    return math.pi ** (-3) * math.exp(real_part + 2.0 * braced.real)


def closed_form_n4(point: PhasePoint, lam: float) -> float:
    """Four-mode closed form: opposite-mode and adjacent-mode pair sums enter
    with tanh**2 and tanh weights under a common 2*cosh**2 factor."""
    _require_modes(point, 4)
    a1, a2, a3, a4 = point.alphas
    abs_sq = sum(abs(a) ** 2 for a in (a1, a2, a3, a4))
    opposite = a1 * np.conj(a3) + a2 * np.conj(a4)
    adjacent = a1 * a2 + a1 * a4 + a2 * a3 + a3 * a4
    th = math.tanh(lam)
    exponent = (
        -2.0
        * math.cosh(lam) ** 2
        * (abs_sq + 2.0 * opposite.real * th**2 + 2.0 * adjacent.real * th)
    )
    return math.pi ** (-4) * math.exp(exponent)


def _cartesian_power(values: np.ndarray, dim: int) -> np.ndarray:
    grids = np.meshgrid(*([values] * dim), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _block_integral(precision: np.ndarray, order: int) -> float:
    """Gauss-Hermite product quadrature of exp(-y.P.y) over R^n, whitened by
    the Cholesky factor of P so a modest fixed order works at any squeezing."""
    dim = precision.shape[0]
    nodes_1d, weights_1d = np.polynomial.hermite.hermgauss(order)
    nodes = _cartesian_power(nodes_1d, dim)
    weights = _cartesian_power(weights_1d, dim).prod(axis=1)
    chol = np.linalg.cholesky(precision)
    # y = L^{-T} u maps the Gauss-Hermite weight onto the integrand
    coords = scipy.linalg.solve_triangular(chol.T, nodes.T, lower=False).T
    log_ratio = np.sum(nodes**2, axis=1) - _quad_form(precision, coords)
    total = float(np.sum(weights * np.exp(log_ratio)))
    det_root = float(np.prod(np.diag(chol)))
    return total / det_root


def normalization(state: WignerGaussian, quadrature_order: int) -> float:
    """Integral of the Wigner density over all 2n phase-space coordinates.

    The integrand factorizes exactly into a position block and a momentum
    block, so the 2n-dimensional product rule is evaluated as the product of
    two n-dimensional sums.  Two successive orders are compared; their
    disagreement flags an insufficient order.
    """
    if isinstance(quadrature_order, bool) or not isinstance(quadrature_order, (int, np.integer)):
        raise ValueError(f"quadrature order must be an integer, got {quadrature_order!r}")
    if quadrature_order < 8:
        raise ValueError(f"quadrature order must be at least 8, got {quadrature_order}")

    def at_order(order: int) -> float:
        return state.norm_const * _block_integral(
            state.position_precision, order
        ) * _block_integral(state.momentum_precision, order)

    coarse = at_order(int(quadrature_order))
    fine = at_order(int(quadrature_order) + 2)
    if abs(fine - coarse) > _QUAD_AGREEMENT:
        raise ArithmeticError(
            f"quadrature order {quadrature_order} too small: successive orders "
            f"disagree by {abs(fine - coarse):.3e}"
        )
    return fine


def axis_labels(n: int) -> list[str]:
    """The 2n phase-space coordinate names: q1..qn then p1..pn."""
    return [f"q{i + 1}" for i in range(n)] + [f"p{i + 1}" for i in range(n)]


@dataclass(frozen=True)
class GridSlice:
    """A 2-D slice of the Wigner function with every other coordinate fixed.

    Rows are laid out with ``axis_a`` varying slowest; each row is
    (coord_a, coord_b, value).
    """

    axis_a: str
    axis_b: str
    coords_a: np.ndarray
    coords_b: np.ndarray
    values: np.ndarray
    fixed: Mapping[str, float] = field(default_factory=dict)

    def rows(self) -> Iterator[tuple[float, float, float]]:
        for i, a in enumerate(self.coords_a):
            for j, b in enumerate(self.coords_b):
                yield float(a), float(b), float(self.values[i, j])


def slice_grid(
    state: WignerGaussian,
    axis_a: str,
    axis_b: str,
    range_a: tuple[float, float],
    range_b: tuple[float, float],
    steps_a: int,
    steps_b: int,
    fixed: Mapping[str, float] | None = None,
) -> GridSlice:
    """Evaluate the Wigner function on a 2-D coordinate grid.

    ``axis_a``/``axis_b`` name two distinct phase-space coordinates
    (q1..qn, p1..pn); all remaining coordinates sit at the values given in
    ``fixed`` (default 0).
    """
    labels = axis_labels(state.n)
    if axis_a not in labels or axis_b not in labels:
        raise ValueError(f"axes must be among {labels}, got {axis_a!r}, {axis_b!r}")
    if axis_a == axis_b:
        raise ValueError(f"axes must be distinct, got {axis_a!r} twice")
    if steps_a < 2 or steps_b < 2:
        raise ValueError(f"step counts must be at least 2, got {steps_a} and {steps_b}")

    fixed = dict(fixed or {})
    for name in fixed:
        if name not in labels:
            raise ValueError(f"unknown fixed coordinate {name!r}; valid names: {labels}")
        if name in (axis_a, axis_b):
            raise ValueError(f"coordinate {name!r} is a sweep axis and cannot be fixed")

    base = np.zeros(2 * state.n)
    for name, value in fixed.items():
        base[labels.index(name)] = float(value)

    coords_a = np.linspace(range_a[0], range_a[1], steps_a)
    coords_b = np.linspace(range_b[0], range_b[1], steps_b)
    grid_a, grid_b = np.meshgrid(coords_a, coords_b, indexing="ij")

    points = np.broadcast_to(base, (steps_a, steps_b, 2 * state.n)).copy()
    points[..., labels.index(axis_a)] = grid_a
    points[..., labels.index(axis_b)] = grid_b
    values = state.value_batch(points[..., : state.n], points[..., state.n :])

    return GridSlice(
        axis_a=axis_a,
        axis_b=axis_b,
        coords_a=coords_a,
        coords_b=coords_b,
        values=values,
        fixed=fixed,
    )
